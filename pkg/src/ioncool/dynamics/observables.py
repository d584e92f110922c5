"""
Trajectories and observable extraction
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import pandas as pd
from scipy.optimize import curve_fit

from ..constants import POPULATION_TOL
from ..exceptions import NumericalError
from ..quantum import HilbertSpace, Operator, QuantumState, expectation, projector
from ..quantum.states import LevelLabel, resolve_level


logger = logging.getLogger(__name__)

ObservableSpec = Union[Operator, Callable[[QuantumState], Any]]


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Observables sampled on an increasing time grid"""

    times: np.ndarray
    observables: Dict[str, np.ndarray] = field(default_factory=dict)
    final_state: Optional[QuantumState] = None
    metadata: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        if times.ndim != 1:
            raise ValueError("times must be one-dimensional")
        if times.size > 1 and np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")
        series = {}
        for name, values in self.observables.items():
            values = np.asarray(values)
            if values.shape[:1] != times.shape:
                raise ValueError(
                    f"Observable '{name}' has {values.shape[0] if values.ndim else 0} samples, "
                    f"expected {times.size}"
                )
            series[name] = values
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "observables", series)

    def __getitem__(self, name: str) -> np.ndarray:
        return self.observables[name]

    def __contains__(self, name: str) -> bool:
        return name in self.observables

    def to_frame(self, time_column: str = "t") -> pd.DataFrame:
        """
        Scalar series as a DataFrame

        Vector-valued series such as P(n) are expanded into one column per
        component, named `<name>_<index>`. Complex series keep only their real part.
        """
        columns: Dict[str, np.ndarray] = {time_column: self.times}
        for name, values in self.observables.items():
            values = np.real_if_close(values)
            if np.iscomplexobj(values):
                values = values.real
            if values.ndim == 1:
                columns[name] = values
            else:
                for index in range(values.shape[1]):
                    columns[f"{name}_{index}"] = values[:, index]
        return pd.DataFrame(columns)


def sample_observables(state: QuantumState, observables: Mapping[str, ObservableSpec]) -> Dict[str, Any]:
    """Evaluate every observable on one state; Hermitian operators give real numbers"""
    values = {}
    for name, spec in observables.items():
        if isinstance(spec, Operator):
            value = expectation(state, spec)
            values[name] = value.real if spec.is_hermitian() else value
        else:
            values[name] = spec(state)
    return values


def collect_series(samples: list, names) -> Dict[str, np.ndarray]:
    return {name: np.array([sample[name] for sample in samples]) for name in names}


def scattering_rate(rho: QuantumState, gamma: float, excited: LevelLabel = 1) -> float:
    """
    Photon scattering rate Γ·⟨excited|ρ|excited⟩ (summed over the Fock factor)

    Args:
        rho: State
        gamma: Total decay rate of the excited level
        excited: Internal level label of the decaying level

    Returns:
        Rate in the units of gamma
    """
    space = rho.space
    level = resolve_level(space, excited)
    diag = np.real(np.diag(rho.density_matrix()))
    start = level * space.motional_dim
    return float(gamma * diag[start:start + space.motional_dim].sum())


def phonon_populations(state: QuantumState) -> np.ndarray:
    """P(n) summed over internal levels"""
    space = state.space
    if state.is_pure:
        diag = np.abs(state.data) ** 2
    else:
        diag = np.real(np.diag(state.data))
    return diag.reshape(space.internal_dim, space.motional_dim).sum(axis=0)


def phonon_statistics(state: QuantumState) -> Tuple[float, np.ndarray]:
    """
    Mean phonon number and phonon-number distribution

    Returns:
        Tuple of (n̄ = Tr(ρa†a), P(n) vector)
    """
    pops = phonon_populations(state)
    total = pops.sum()
    if abs(total - 1.0) > POPULATION_TOL:
        raise ValueError(f"Phonon populations sum to {total:.12f}, expected 1")
    n_bar = float(np.dot(np.arange(pops.size), pops))
    return n_bar, pops


def populations_in_range(values: np.ndarray, tol: float = POPULATION_TOL) -> bool:
    return bool(np.all(values >= -tol) and np.all(values <= 1.0 + tol))


def check_population_contracts(
    trajectory: Trajectory, names: Sequence[str], tol: float = POPULATION_TOL
) -> None:
    """
    Require every sample of the named population series to lie in [0, 1]

    Raises:
        NumericalError: On the first series with a sample outside [−tol, 1 + tol]
    """
    for name in names:
        values = np.real(np.asarray(trajectory[name]))
        if not populations_in_range(values, tol):
            low, high = float(values.min()), float(values.max())
            raise NumericalError(
                f"Population '{name}' left [0, 1]: range [{low:.3e}, {high:.12g}]"
            )


def excited_population_operator(space: HilbertSpace, excited: LevelLabel = 1) -> Operator:
    return projector(space, resolve_level(space, excited))


def _cosine(t, offset, amplitude, omega, phase):
    return offset + amplitude * np.cos(omega * t + phase)


def fit_rabi_frequency(times: np.ndarray, p_excited: np.ndarray) -> float:
    """
    Angular frequency of a sinusoidal population oscillation

    A zero-padded FFT gives the starting guess, then a least-squares fit of
    c + A cos(ωt + φ) refines it.

    Args:
        times: Uniformly spaced sample times
        p_excited: Population samples

    Returns:
        Fitted angular frequency ω ≥ 0

    Raises:
        ValueError: If fewer than 8 samples are given or no oscillation is visible
    """
    times = np.asarray(times, dtype=float)
    values = np.asarray(p_excited, dtype=float)
    if times.size < 8 or times.size != values.size:
        raise ValueError("fit_rabi_frequency needs at least 8 matching samples")
    centred = values - values.mean()
    amplitude = 0.5 * (values.max() - values.min())
    if amplitude < 1e-12:
        raise ValueError("Population does not oscillate")

    dt = times[1] - times[0]
    padded = 16 * times.size
    spectrum = np.abs(np.fft.rfft(centred, n=padded))
    freqs = np.fft.rfftfreq(padded, d=dt)
    peak = int(np.argmax(spectrum[1:])) + 1
    omega_guess = 2.0 * np.pi * freqs[peak]

    phase_guess = 0.0 if centred[0] >= 0 else np.pi
    popt, _ = curve_fit(
        _cosine,
        times - times[0],
        values,
        p0=[values.mean(), amplitude, omega_guess, phase_guess],
        maxfev=20000,
    )
    omega = abs(float(popt[2]))
    logger.debug(f"Rabi fit: FFT guess {omega_guess:.6g}, refined {omega:.12g}")
    return omega
