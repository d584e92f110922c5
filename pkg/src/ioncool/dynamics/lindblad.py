"""
Lindblad master-equation evolution
"""

import logging
from typing import Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg
from scipy.integrate import solve_ivp

from ..constants import (
    EXPM_SUPEROPERATOR_MAX_DIM,
    POSITIVITY_TOL,
    RK_ATOL,
    RK_METHOD,
    RK_RTOL,
    TRACE_TOL,
)
from ..exceptions import NumericalError
from ..quantum import HilbertSpace, Operator, QuantumState
from .channels import CollapseChannel, validate_channels
from .observables import ObservableSpec, Trajectory, collect_series, sample_observables
from .schrodinger import HamiltonianSource, hamiltonian_matrix, output_grid


logger = logging.getLogger(__name__)

VALID_METHODS = ["auto", "expm", "rk"]


def liouvillian(H: Operator, channels: Sequence[CollapseChannel], hbar: float = 1.0) -> np.ndarray:
    """
    Dense Liouvillian superoperator for row-major vectorization vec(ρ) = ρ.reshape(-1)

    With vec(AρB) = (A ⊗ Bᵀ) vec(ρ):
    L = −(i/ħ)(H⊗I − I⊗Hᵀ) + Σ_k [C⊗C* − ½ C†C⊗I − ½ I⊗(C†C)ᵀ]
    """
    validate_channels(channels, H.space)
    dim = H.space.dim
    eye = np.eye(dim)
    h = H.matrix
    superop = -1j / hbar * (np.kron(h, eye) - np.kron(eye, h.T))
    for channel in channels:
        c = channel.operator.matrix
        cdc = c.conj().T @ c
        superop += np.kron(c, c.conj()) - 0.5 * np.kron(cdc, eye) - 0.5 * np.kron(eye, cdc.T)
    return superop


class _LindbladRHS:
    """dρ/dt = X + X† + Σ CρC† with X = −(i/ħ)H_eff ρ and H_eff = H − (iħ/2)ΣC†C"""

    def __init__(self, H: HamiltonianSource, channels: Sequence[CollapseChannel], dim: int, hbar: float):
        self.H = H
        self.dim = dim
        self.hbar = hbar
        self.jumps = [channel.operator.matrix for channel in channels]
        self.jumps_dag = [c.conj().T for c in self.jumps]
        damping = np.zeros((dim, dim), dtype=complex)
        for c, cd in zip(self.jumps, self.jumps_dag):
            damping += cd @ c
        self.damping = damping
        self.static_heff = None
        if isinstance(H, Operator):
            self.static_heff = self._effective(hamiltonian_matrix(H, 0.0))
        self.evaluations = 0

    def _effective(self, h: np.ndarray) -> np.ndarray:
        return (-1j / self.hbar) * h - 0.5 * self.damping

    def __call__(self, t: float, y: np.ndarray) -> np.ndarray:
        self.evaluations += 1
        rho = y.reshape(self.dim, self.dim)
        heff = self.static_heff
        if heff is None:
            heff = self._effective(hamiltonian_matrix(self.H, t))
        x = heff @ rho
        drho = x + x.conj().T
        for c, cd in zip(self.jumps, self.jumps_dag):
            drho += c @ rho @ cd
        return drho.reshape(-1)


def _hermitize(rho: np.ndarray) -> np.ndarray:
    return 0.5 * (rho + rho.conj().T)


def check_density_contracts(rho: np.ndarray, t: float) -> None:
    """
    Abort if a sampled density matrix violates the trace or positivity contracts

    Raises:
        NumericalError: With the time and the size of the violation
    """
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > TRACE_TOL:
        raise NumericalError(f"Trace drift at t={t:.6g}: Tr ρ = {trace.real:.12f}{trace.imag:+.2e}j")
    min_eig = float(np.min(np.linalg.eigvalsh(rho)))
    if min_eig < -POSITIVITY_TOL:
        raise NumericalError(f"Positivity violated at t={t:.6g}: min eigenvalue {min_eig:.3e}")


def select_method(H: HamiltonianSource, space: HilbertSpace, method: str) -> str:
    if method not in VALID_METHODS:
        raise ValueError(f"Invalid method: {method}. Must be one of {VALID_METHODS}")
    if method == "expm" and not isinstance(H, Operator):
        raise ValueError("Exponential propagation needs a time-independent Hamiltonian")
    if method != "auto":
        return method
    if isinstance(H, Operator) and space.dim**2 <= EXPM_SUPEROPERATOR_MAX_DIM:
        return "expm"
    return "rk"


def lindblad_evolve(
    H: HamiltonianSource,
    channels: Sequence[CollapseChannel],
    rho0: QuantumState,
    t_span: Tuple[float, float],
    observables: Optional[Mapping[str, ObservableSpec]] = None,
    num_points: int = 101,
    t_eval: Optional[Sequence[float]] = None,
    method: str = "auto",
    hbar: float = 1.0,
    rtol: float = RK_RTOL,
    atol: float = RK_ATOL,
    check_contracts: bool = True,
) -> Trajectory:
    """
    Integrate dρ/dt = −(i/ħ)[H, ρ] + Σ_k (C_k ρ C_k† − ½{C_k†C_k, ρ})

    "auto" propagates small time-independent problems exactly with the matrix
    exponential of the Liouvillian and otherwise uses the DOP853 embedded
    Runge–Kutta integrator sampled at the output grid.

    Args:
        H: Static Operator or callable t -> Operator
        channels: Collapse channels
        rho0: Initial state; pure states are promoted to density matrices
        t_span: (t0, t1)
        observables: Mapping of name -> Operator or callable(state)
        num_points: Size of the uniform output grid when t_eval is not given
        t_eval: Explicit output times
        method: "auto", "expm" or "rk"
        hbar: Value of ħ
        rtol: Relative tolerance of the Runge–Kutta integrator
        atol: Absolute tolerance of the Runge–Kutta integrator
        check_contracts: Verify trace and positivity at every output sample

    Returns:
        Trajectory with the final density matrix

    Raises:
        ValueError: On channel/space mismatch or invalid method
        NumericalError: If the integrator fails or a contract is violated
    """
    space = rho0.space
    validate_channels(channels, space)
    if isinstance(H, Operator) and H.space != space:
        raise ValueError(f"Hamiltonian space {H.space} does not match state space {space}")
    observables = dict(observables or {})
    grid = output_grid(t_span, num_points, t_eval)
    chosen = select_method(H, space, method)
    dim = space.dim
    rho_start = rho0.density_matrix()
    t0 = float(t_span[0])

    if chosen == "expm":
        superop = liouvillian(H, channels, hbar)
        cache = {}
        states = []
        vec = rho_start.reshape(-1)
        t = t0
        for t_out in grid:
            dt = float(t_out - t)
            if dt > 0:
                key = round(dt, 15)
                if key not in cache:
                    cache[key] = linalg.expm(superop * dt)
                vec = cache[key] @ vec
                t = float(t_out)
            states.append(vec.reshape(dim, dim))
        logger.debug(f"Liouvillian exponential propagation: {len(grid)} samples, {len(cache)} propagators")
    else:
        rhs = _LindbladRHS(H, channels, dim, hbar)
        solution = solve_ivp(
            rhs,
            t_span=(t0, float(grid[-1])),
            y0=rho_start.reshape(-1).astype(complex),
            method=RK_METHOD,
            t_eval=grid,
            rtol=rtol,
            atol=atol,
        )
        if not solution.success:
            raise NumericalError(f"Master-equation integration failed: {solution.message}")
        states = [solution.y[:, k].reshape(dim, dim) for k in range(solution.y.shape[1])]
        logger.debug(f"{RK_METHOD} integration: {rhs.evaluations} right-hand-side evaluations")

    samples = []
    final = None
    for t_out, rho in zip(grid, states):
        rho = _hermitize(rho)
        if check_contracts:
            check_density_contracts(rho, float(t_out))
        final = QuantumState(space, rho)
        samples.append(sample_observables(final, observables))

    return Trajectory(
        times=grid,
        observables=collect_series(samples, observables.keys()),
        final_state=final,
        metadata={"method": chosen},
    )
