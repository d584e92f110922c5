"""
Unitary evolution of pure states
"""

import logging
from typing import Callable, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..constants import HERMITIAN_TOL, MIN_STEP, SCHRODINGER_STEP_TOL
from ..exceptions import NumericalError
from ..quantum import Operator, QuantumState
from .observables import ObservableSpec, Trajectory, collect_series, sample_observables


logger = logging.getLogger(__name__)

HamiltonianSource = Union[Operator, Callable[[float], Operator]]


def output_grid(
    t_span: Tuple[float, float], num_points: int = 101, t_eval: Optional[Sequence[float]] = None
) -> np.ndarray:
    """Uniform output grid over t_span, or the validated explicit grid"""
    t0, t1 = float(t_span[0]), float(t_span[1])
    if not t1 > t0:
        raise ValueError(f"t_span must be increasing, got ({t0}, {t1})")
    if t_eval is not None:
        grid = np.asarray(t_eval, dtype=float)
        if grid.ndim != 1 or grid.size < 1:
            raise ValueError("t_eval must be a non-empty one-dimensional sequence")
        if np.any(np.diff(grid) <= 0) or grid[0] < t0 or grid[-1] > t1:
            raise ValueError("t_eval must be increasing and lie inside t_span")
        return grid
    if num_points < 2:
        raise ValueError(f"num_points must be at least 2, got {num_points}")
    return np.linspace(t0, t1, num_points)


def hamiltonian_matrix(H: HamiltonianSource, t: float) -> np.ndarray:
    """Evaluate H at t and verify it is Hermitian"""
    op = H if isinstance(H, Operator) else H(t)
    error = op.hermiticity_error()
    if error >= HERMITIAN_TOL * max(1.0, op.max_norm()):
        raise ValueError(f"Hamiltonian is not Hermitian at t={t}: max |H - H†| = {error:.3e}")
    return op.matrix


def _unitary_step(h_matrix: np.ndarray, dt: float, hbar: float) -> np.ndarray:
    evals, evecs = np.linalg.eigh(0.5 * (h_matrix + h_matrix.conj().T))
    return (evecs * np.exp(-1j * evals * dt / hbar)) @ evecs.conj().T


class _MidpointPropagator:
    """Adaptive exponential-midpoint stepper with step-doubling error control"""

    def __init__(self, H: Callable[[float], Operator], hbar: float, dt_max: float, tol: float):
        self.H = H
        self.hbar = hbar
        self.dt_max = dt_max
        self.tol = tol
        self.step = dt_max
        self.accepted = 0
        self.rejected = 0

    def _advance(self, psi: np.ndarray, t: float, dt: float) -> np.ndarray:
        h_mid = hamiltonian_matrix(self.H, t + 0.5 * dt)
        return _unitary_step(h_mid, dt, self.hbar) @ psi

    def propagate(self, psi: np.ndarray, t_start: float, t_end: float) -> np.ndarray:
        t = t_start
        while t_end - t > MIN_STEP * max(1.0, abs(t_end)):
            if self.step < MIN_STEP * max(1.0, abs(t)):
                raise NumericalError(f"Step size underflow at t={t:.6g} (dt={self.step:.3e})")
            dt = min(self.step, self.dt_max, t_end - t)
            coarse = self._advance(psi, t, dt)
            fine = self._advance(self._advance(psi, t, 0.5 * dt), t + 0.5 * dt, 0.5 * dt)
            error = float(np.linalg.norm(fine - coarse))
            if error <= self.tol:
                psi = fine / np.linalg.norm(fine)
                t = t + dt
                self.accepted += 1
                factor = 2.0 if error == 0 else min(2.0, 0.9 * (self.tol / error) ** (1.0 / 3.0))
                # keep the step that was limited by the output grid
                if dt == self.step:
                    self.step = dt * max(1.0, factor)
            else:
                self.rejected += 1
                self.step = dt * max(0.2, 0.9 * (self.tol / error) ** (1.0 / 3.0))
        return psi


def evolve_schrodinger(
    H: HamiltonianSource,
    psi0: QuantumState,
    t_span: Tuple[float, float],
    dt_max: Optional[float] = None,
    observables: Optional[Mapping[str, ObservableSpec]] = None,
    num_points: int = 101,
    t_eval: Optional[Sequence[float]] = None,
    hbar: float = 1.0,
    tol: float = SCHRODINGER_STEP_TOL,
) -> Trajectory:
    """
    Integrate iħ dψ/dt = H(t)ψ

    A static Operator is propagated exactly with exp(−iHΔt/ħ). A callable H(t)
    is stepped with exponentials of H at the step midpoint; the step size adapts
    by comparing one full step with two half steps.

    Args:
        H: Static Operator or callable t -> Operator
        psi0: Pure initial state
        t_span: (t0, t1)
        dt_max: Largest internal step for time-dependent H (default: output spacing)
        observables: Mapping of name -> Operator or callable(state)
        num_points: Size of the uniform output grid when t_eval is not given
        t_eval: Explicit output times
        hbar: Value of ħ
        tol: Local error tolerance per step (2-norm of the state difference)

    Returns:
        Trajectory sampled on the output grid

    Raises:
        ValueError: For non-Hermitian H, mixed input states or space mismatch
        NumericalError: If the adaptive step underflows
    """
    if not psi0.is_pure:
        raise ValueError("evolve_schrodinger needs a pure state; use lindblad_evolve for density matrices")
    observables = dict(observables or {})
    grid = output_grid(t_span, num_points, t_eval)
    space = psi0.space

    psi = np.array(psi0.data)
    grid_start = float(t_span[0])

    samples = []
    if isinstance(H, Operator):
        if H.space != space:
            raise ValueError(f"Hamiltonian space {H.space} does not match state space {space}")
        h_matrix = hamiltonian_matrix(H, grid_start)
        cache = {}
        t = grid_start
        for t_out in grid:
            dt = float(t_out - t)
            if dt > 0:
                key = round(dt, 15)
                if key not in cache:
                    cache[key] = _unitary_step(h_matrix, dt, hbar)
                psi = cache[key] @ psi
                t = float(t_out)
            samples.append(sample_observables(QuantumState(space, psi), observables))
        logger.debug(f"Static Schrödinger propagation: {len(grid)} samples, {len(cache)} propagators")
    else:
        spacing = float(np.min(np.diff(grid))) if grid.size > 1 else float(t_span[1] - t_span[0])
        propagator = _MidpointPropagator(H, hbar, dt_max or spacing, tol)
        t = grid_start
        for t_out in grid:
            if t_out > t:
                psi = propagator.propagate(psi, t, float(t_out))
                t = float(t_out)
            samples.append(sample_observables(QuantumState(space, psi), observables))
        logger.debug(
            f"Midpoint propagation: {propagator.accepted} accepted, {propagator.rejected} rejected steps"
        )

    final_state = QuantumState(space, psi)
    return Trajectory(
        times=grid,
        observables=collect_series(samples, observables.keys()),
        final_state=final_state,
        metadata={"method": "expm" if isinstance(H, Operator) else "midpoint"},
    )
