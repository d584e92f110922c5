"""
Operator builders for the internal ⊗ motional space
"""

import logging
from typing import Optional, Tuple, Union

import numpy as np
from scipy import linalg
from scipy.special import eval_genlaguerre, gammaln

from ..constants import HERMITIAN_TOL
from .space import HilbertSpace, Operator, QuantumState


logger = logging.getLogger(__name__)

FactorLike = Union[Operator, np.ndarray]


def motional_annihilation(fock_cutoff: int) -> np.ndarray:
    """Annihilation operator a on the (fock_cutoff + 1)-dimensional Fock factor"""
    return np.diag(np.sqrt(np.arange(1, fock_cutoff + 1, dtype=float)), k=1).astype(complex)


def motional_number(fock_cutoff: int) -> np.ndarray:
    return np.diag(np.arange(fock_cutoff + 1, dtype=float)).astype(complex)


def _factor_matrix(factor: FactorLike) -> np.ndarray:
    if isinstance(factor, Operator):
        return factor.matrix
    matrix = np.asarray(factor, dtype=complex)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Factor must be a square matrix, got shape {matrix.shape}")
    return matrix


def tensor(internal: FactorLike, motional: FactorLike, space: Optional[HilbertSpace] = None) -> Operator:
    """
    Kronecker product internal ⊗ motional

    Args:
        internal: Square matrix acting on the internal levels
        motional: Square matrix acting on the Fock factor
        space: Target space; inferred from the factor shapes when omitted

    Returns:
        Operator on the composite space

    Raises:
        ValueError: If the factor dimensions do not match the space
    """
    a = _factor_matrix(internal)
    b = _factor_matrix(motional)
    if space is None:
        space = HilbertSpace(internal_dim=a.shape[0], fock_cutoff=b.shape[0] - 1)
    if a.shape[0] != space.internal_dim or b.shape[0] != space.motional_dim:
        raise ValueError(
            f"Factor dimensions ({a.shape[0]}, {b.shape[0]}) do not match space "
            f"({space.internal_dim}, {space.motional_dim})"
        )
    return Operator(space, np.kron(a, b))


def identity(space: HilbertSpace) -> Operator:
    return Operator.identity(space)


def ladder_operators(space: HilbertSpace) -> Tuple[Operator, Operator]:
    """
    Motional ladder operators on the composite space

    a|n⟩ = √n|n−1⟩ and a†|n⟩ = √(n+1)|n+1⟩, with a†|n_max⟩ = 0 by truncation.

    Returns:
        Tuple of (a, a_dagger)
    """
    a_m = motional_annihilation(space.fock_cutoff)
    eye = np.eye(space.internal_dim)
    a = tensor(eye, a_m, space)
    return a, a.dag()


def number_operator(space: HilbertSpace) -> Operator:
    return tensor(np.eye(space.internal_dim), motional_number(space.fock_cutoff), space)


def projector(space: HilbertSpace, internal: int) -> Operator:
    """|i⟩⟨i| ⊗ I_motion"""
    if not 0 <= internal < space.internal_dim:
        raise ValueError(f"Internal level {internal} outside 0..{space.internal_dim - 1}")
    p = np.zeros((space.internal_dim, space.internal_dim), dtype=complex)
    p[internal, internal] = 1.0
    return tensor(p, np.eye(space.motional_dim), space)


def transition_operator(space: HilbertSpace, to_level: int, from_level: int) -> Operator:
    """|to⟩⟨from| ⊗ I_motion"""
    for level in (to_level, from_level):
        if not 0 <= level < space.internal_dim:
            raise ValueError(f"Internal level {level} outside 0..{space.internal_dim - 1}")
    t = np.zeros((space.internal_dim, space.internal_dim), dtype=complex)
    t[to_level, from_level] = 1.0
    return tensor(t, np.eye(space.motional_dim), space)


def internal_operators(space: HilbertSpace) -> Tuple[Operator, Operator, Operator]:
    """
    Two-level operators with basis order |g⟩ = 0, |e⟩ = 1

    Returns:
        Tuple of (sigma_z, sigma_plus, sigma_minus)

    Raises:
        ValueError: If the space is not a two-level space
    """
    if space.internal_dim != 2:
        raise ValueError(f"Two-level operators need internal_dim = 2, got {space.internal_dim}")
    sigma_plus = transition_operator(space, 1, 0)
    sigma_minus = sigma_plus.dag()
    sigma_z = projector(space, 1) - projector(space, 0)
    return sigma_z, sigma_plus, sigma_minus


def matrix_exponential(M: FactorLike, scale: complex = 1.0) -> Union[Operator, np.ndarray]:
    """
    Compute exp(scale·M)

    Hermitian inputs go through an eigendecomposition, so exp(iθH) is unitary to
    machine precision; everything else uses scipy's scaling-and-squaring Padé
    algorithm.

    Args:
        M: Operator or square array
        scale: Complex scalar multiplying M

    Returns:
        Same kind as the input (Operator or ndarray)

    Raises:
        ValueError: If M or scale contain non-finite values
    """
    matrix = _factor_matrix(M)
    if not np.isfinite(scale) or not np.all(np.isfinite(matrix)):
        raise ValueError("matrix_exponential received non-finite entries")

    if np.max(np.abs(matrix - matrix.conj().T), initial=0.0) < HERMITIAN_TOL:
        evals, evecs = np.linalg.eigh(0.5 * (matrix + matrix.conj().T))
        result = (evecs * np.exp(scale * evals)) @ evecs.conj().T
    else:
        result = linalg.expm(scale * matrix)

    if isinstance(M, Operator):
        return Operator(M.space, result)
    return result


def motional_displacement(eta: float, fock_cutoff: int, phase: float = 0.0) -> np.ndarray:
    """e^{iη(a e^{−iθ} + a† e^{iθ})} on the Fock factor alone"""
    a_m = motional_annihilation(fock_cutoff)
    x = a_m + a_m.conj().T
    d = matrix_exponential(x, 1j * eta)
    if phase:
        rotation = np.exp(1j * phase * np.arange(fock_cutoff + 1))
        d = rotation[:, None] * d * rotation.conj()[None, :]
    return d


def displacement_operator(eta: float, space: HilbertSpace, phase: float = 0.0) -> Operator:
    """
    Displacement factor e^{iη(a+a†)} on the composite space

    With a nonzero phase θ the ladder operators are time-phased, a → a e^{−iθ},
    which is R D R† with R = e^{iθ a†a}. Only the block n ≤ space.interior_cutoff(eta)
    is trusted; the top Fock levels see the truncation.

    Args:
        eta: Real Lamb-Dicke parameter
        space: Target space
        phase: Phase θ of the motional ladder operators

    Returns:
        Displacement operator (identity on the internal factor)
    """
    if not np.isfinite(eta):
        raise ValueError(f"eta must be finite, got {eta}")
    d = motional_displacement(eta, space.fock_cutoff, phase)
    return tensor(np.eye(space.internal_dim), d, space)


def displacement_matrix_element(m: int, n: int, eta: float) -> complex:
    """
    Closed-form ⟨m|e^{iη(a+a†)}|n⟩ for an untruncated oscillator

    Args:
        m: Row Fock index
        n: Column Fock index
        eta: Real Lamb-Dicke parameter

    Returns:
        (iη)^|m−n| √(n_<!/n_>!) e^{−η²/2} L_{n_<}^{(|m−n|)}(η²)
    """
    if m < 0 or n < 0:
        raise ValueError(f"Fock indices must be non-negative, got ({m}, {n})")
    low, high = min(m, n), max(m, n)
    order = high - low
    x = eta * eta
    log_ratio = 0.5 * (gammaln(low + 1) - gammaln(high + 1))
    magnitude = np.exp(log_ratio - 0.5 * x) * eval_genlaguerre(low, order, x)
    return complex((1j * eta) ** order * magnitude)


def expectation(state: QuantumState, obs: Operator) -> complex:
    """
    ⟨ψ|O|ψ⟩ for pure states or Tr(ρO) for density matrices

    Raises:
        ValueError: If state and operator live on different spaces
    """
    if state.space != obs.space:
        raise ValueError(f"Space mismatch: state {state.space} vs operator {obs.space}")
    if state.is_pure:
        return complex(np.vdot(state.data, obs.matrix @ state.data))
    return complex(np.einsum("ij,ji->", state.data, obs.matrix))
