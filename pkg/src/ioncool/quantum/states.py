"""
State constructors and reductions
"""

import logging
from typing import Union

import numpy as np
from scipy.optimize import brentq

from .space import HilbertSpace, QuantumState


logger = logging.getLogger(__name__)

TWO_LEVEL_LABELS = {"g": 0, "e": 1}
THREE_LEVEL_LABELS = {"1": 0, "2": 1, "3": 2}

LevelLabel = Union[int, str]


def resolve_level(space: HilbertSpace, internal: LevelLabel) -> int:
    """
    Map an internal level label to its basis index

    Two-level spaces accept "g"/"e" and three-level spaces accept "1"/"2"/"3".
    Integers are always 0-based basis indices.
    """
    if isinstance(internal, str):
        if space.internal_dim == 2 and internal in TWO_LEVEL_LABELS:
            return TWO_LEVEL_LABELS[internal]
        if space.internal_dim == 3 and internal in THREE_LEVEL_LABELS:
            return THREE_LEVEL_LABELS[internal]
        raise ValueError(f"Unknown internal level label '{internal}' for internal_dim={space.internal_dim}")
    index = int(internal)
    if not 0 <= index < space.internal_dim:
        raise ValueError(f"Internal level {internal} outside 0..{space.internal_dim - 1}")
    return index


def basis_state(space: HilbertSpace, internal: LevelLabel = "g", n: int = 0) -> QuantumState:
    """Pure basis state |internal, n⟩"""
    vector = np.zeros(space.dim, dtype=complex)
    vector[space.index(resolve_level(space, internal), n)] = 1.0
    return QuantumState.pure(space, vector)


def thermal_populations(n_bar: float, fock_cutoff: int, exact_mean: bool = False) -> np.ndarray:
    """
    Truncated thermal distribution P(n) ∝ r^n with r = n̄/(n̄+1)

    Args:
        n_bar: Target mean phonon number
        fock_cutoff: Highest Fock index kept
        exact_mean: Re-solve the ratio r so the truncated distribution has mean n̄
            exactly (requires n̄ < fock_cutoff / 2)

    Returns:
        Normalized populations of length fock_cutoff + 1
    """
    if n_bar < 0 or not np.isfinite(n_bar):
        raise ValueError(f"n_bar must be a finite non-negative number, got {n_bar}")
    n = np.arange(fock_cutoff + 1, dtype=float)
    if n_bar == 0:
        pops = np.zeros(fock_cutoff + 1)
        pops[0] = 1.0
        return pops

    ratio = n_bar / (n_bar + 1.0)
    if exact_mean:
        if n_bar >= fock_cutoff / 2:
            raise ValueError(
                f"Cannot match mean {n_bar} with a geometric distribution truncated at {fock_cutoff}"
            )

        def mean_error(r: float) -> float:
            weights = r**n
            return float(np.dot(n, weights) / weights.sum() - n_bar)

        ratio = brentq(mean_error, 1e-12, 1.0 - 1e-9, xtol=1e-15, rtol=4 * np.finfo(float).eps)

    weights = ratio**n
    tail = thermal_tail_probability(n_bar, fock_cutoff)
    if tail > 1e-6:
        logger.debug(f"Thermal distribution n̄={n_bar} truncated at n={fock_cutoff}: tail weight {tail:.3e}")
    return weights / weights.sum()


def thermal_tail_probability(n_bar: float, fock_cutoff: int) -> float:
    """Weight of the untruncated thermal distribution above fock_cutoff, r^(n_max+1)"""
    if n_bar <= 0:
        return 0.0
    return float((n_bar / (n_bar + 1.0)) ** (fock_cutoff + 1))


def thermal_mean_error_bound(n_bar: float, fock_cutoff: int) -> float:
    """
    Analytic |⟨n⟩_truncated − n̄| for the renormalized geometric distribution

    With q = r^(n_max+1) the truncated mean is n̄ − (n_max+1)q/(1−q).
    """
    q = thermal_tail_probability(n_bar, fock_cutoff)
    if q == 0.0:
        return 0.0
    return (fock_cutoff + 1) * q / (1.0 - q)


def thermal_state(
    n_bar: float, space: HilbertSpace, internal: LevelLabel = "g", exact_mean: bool = False
) -> QuantumState:
    """
    Thermal motional state with the internal factor in a pure level

    Args:
        n_bar: Mean phonon number, must be ≥ 0
        space: Target space
        internal: Internal level label
        exact_mean: See thermal_populations

    Returns:
        Density matrix diagonal in the Fock basis

    Raises:
        ValueError: If n_bar < 0
    """
    pops = thermal_populations(n_bar, space.fock_cutoff, exact_mean=exact_mean)
    level = resolve_level(space, internal)
    diag = np.zeros(space.dim)
    start = level * space.motional_dim
    diag[start:start + space.motional_dim] = pops
    return QuantumState.density(space, np.diag(diag).astype(complex))


def partial_trace_internal(state: QuantumState) -> np.ndarray:
    """Reduced motional density matrix Tr_internal(ρ)"""
    space = state.space
    rho = state.density_matrix().reshape(
        space.internal_dim, space.motional_dim, space.internal_dim, space.motional_dim
    )
    return np.einsum("iaib->ab", rho)


def internal_populations(state: QuantumState) -> np.ndarray:
    """Populations of the internal levels, summed over the Fock factor"""
    space = state.space
    diag = np.real(np.diag(state.density_matrix())) if not state.is_pure else np.abs(state.data) ** 2
    return diag.reshape(space.internal_dim, space.motional_dim).sum(axis=1)
