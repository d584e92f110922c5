"""
Stationary states of the Lindblad equation
"""

import logging
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from ..constants import NULL_SPACE_RTOL, POSITIVITY_TOL, STEADY_STATE_RESIDUAL_TOL
from ..exceptions import NumericalError
from ..quantum import Operator, QuantumState
from .channels import CollapseChannel
from .lindblad import liouvillian


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SteadyStateInfo:
    """Diagnostics of a null-space solve"""

    null_dim: int
    residual: float
    degenerate: bool
    smallest_singular_values: Tuple[float, ...]


def steady_state_with_info(
    H: Operator, channels: Sequence[CollapseChannel], hbar: float = 1.0
) -> Tuple[QuantumState, SteadyStateInfo]:
    """
    Null vector of the Liouvillian from a dense SVD

    The null-space dimension counts singular values below 1e−12 of the largest.
    In a degenerate null space the vector with the largest trace is returned
    and a warning is logged.

    Args:
        H: Time-independent Hamiltonian
        channels: At least one collapse channel
        hbar: Value of ħ

    Returns:
        Tuple of (normalized steady state, SteadyStateInfo)

    Raises:
        ValueError: If H is not an Operator or there are no channels
        NumericalError: If the residual or positivity contracts fail
    """
    if not isinstance(H, Operator):
        raise ValueError("steady_state needs a time-independent Hamiltonian Operator")
    if not channels:
        raise ValueError("steady_state needs at least one collapse channel")
    dim = H.space.dim
    superop = liouvillian(H, channels, hbar)
    _, singular_values, vh = np.linalg.svd(superop)
    scale = float(singular_values[0]) if singular_values[0] > 0 else 1.0
    null_dim = int(np.sum(singular_values < NULL_SPACE_RTOL * scale))

    candidates = vh[-max(null_dim, 1):].conj()
    traces = np.array([np.trace(v.reshape(dim, dim)) for v in candidates])
    best = int(np.argmax(np.abs(traces)))
    if abs(traces[best]) == 0:
        raise NumericalError("Liouvillian null vector has zero trace")
    rho = candidates[best].reshape(dim, dim) / traces[best]
    rho = 0.5 * (rho + rho.conj().T)

    residual = float(np.max(np.abs(superop @ rho.reshape(-1))))
    degenerate = null_dim > 1
    info = SteadyStateInfo(
        null_dim=null_dim,
        residual=residual,
        degenerate=degenerate,
        smallest_singular_values=tuple(float(s) for s in singular_values[-3:]),
    )
    logger.debug(f"Steady state: null_dim={null_dim}, residual={residual:.3e}")

    if residual > STEADY_STATE_RESIDUAL_TOL * max(1.0, scale):
        raise NumericalError(f"Steady-state residual {residual:.3e} exceeds tolerance")
    if degenerate:
        logger.warning(f"Steady state is not unique (null-space dimension {null_dim}); returning one")
    else:
        min_eig = float(np.min(np.linalg.eigvalsh(rho)))
        if min_eig < -POSITIVITY_TOL:
            raise NumericalError(f"Steady state has negative eigenvalue {min_eig:.3e}")

    return QuantumState(H.space, rho), info


def steady_state(H: Operator, channels: Sequence[CollapseChannel], hbar: float = 1.0) -> QuantumState:
    """ρ_ss with L(ρ_ss) = 0 and Tr ρ_ss = 1; see steady_state_with_info"""
    state, _ = steady_state_with_info(H, channels, hbar)
    return state
