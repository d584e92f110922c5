"""
Simultaneous cooling of all axial modes with a single drive frequency

A magnetic field gradient shifts the internal resonance of every ion. When the
shift of ion i puts its red sideband of mode p(i) at a common frequency, one
drive cools every mode at once. Mode occupations follow classical rate
equations with Lorentzian sideband responses.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Union

import numpy as np
from scipy.optimize import linear_sum_assignment

from ..dynamics.observables import Trajectory
from .chain import ChainModes


logger = logging.getLogger(__name__)

ArrayLike = Union[float, Sequence[float], np.ndarray]


@dataclass(frozen=True, eq=False)
class GradientDesign:
    """Per-ion resonance offsets relative to ion 1 and the mode each ion cools"""

    offsets: np.ndarray
    assignment: np.ndarray

    def red_sideband_frequencies(self, modes: ChainModes) -> np.ndarray:
        """ω_i − ν_p(i) relative to ion 1's carrier; all entries are equal"""
        return self.offsets - modes.frequencies[self.assignment]


@dataclass(frozen=True, eq=False)
class MultimodeResult:
    """Mode occupations n̄_p(t) with the rates that produced them"""

    trajectory: Trajectory
    cooling_rates: np.ndarray
    heating_rates: np.ndarray
    steady_state_nbar: np.ndarray
    metadata: Dict = field(default_factory=dict)

    def mode(self, p: int) -> Trajectory:
        return Trajectory(times=self.trajectory.times, observables={"n_bar": self.trajectory["n_bar"][:, p]})

    @property
    def final_nbar(self) -> np.ndarray:
        return self.trajectory["n_bar"][-1]


def assign_ions_to_modes(modes: ChainModes) -> np.ndarray:
    """
    Ion-to-mode assignment maximizing total participation b_ip²

    Ion 1 is tied to the COM mode; the remaining ions are matched to the
    remaining modes with the Hungarian algorithm.
    """
    n = modes.num_ions
    assignment = np.zeros(n, dtype=int)
    if n > 1:
        rows, cols = linear_sum_assignment(modes.participation[1:, 1:], maximize=True)
        assignment[1 + rows] = 1 + cols
    return assignment


def design_simultaneous_gradient(modes: ChainModes) -> GradientDesign:
    """
    Resonance offsets that align every ion's assigned red sideband

    δω_i = ν_p(i) − ν₁, so ω_i − ν_p(i) equals ω₁ − ν₁ for every ion.

    Args:
        modes: Chain normal modes

    Returns:
        GradientDesign with offsets in the units of the mode frequencies
    """
    assignment = assign_ions_to_modes(modes)
    offsets = modes.frequencies[assignment] - modes.frequencies[0]
    logger.info(
        f"Gradient design: ion→mode {assignment.tolist()}, "
        f"offsets/ν = {(offsets / modes.nu).round(9).tolist()}"
    )
    return GradientDesign(offsets=offsets, assignment=assignment)


def _per_mode(value: ArrayLike, n: int, name: str) -> np.ndarray:
    array = np.broadcast_to(np.asarray(value, dtype=float), (n,)).copy()
    if np.any(array < 0):
        raise ValueError(f"{name} must be non-negative")
    return array


def coupling_matrix(modes: ChainModes, eta_eff: Union[float, np.ndarray]) -> np.ndarray:
    """
    η_ip of ion i to mode p

    A scalar η_eff is the single-ion COM value and scales as b_ip√(ν₁/ν_p);
    an (N, N) array is used as given.
    """
    eta = np.asarray(eta_eff, dtype=float)
    if eta.ndim == 0:
        return float(eta) * modes.mode_vectors * np.sqrt(modes.frequencies[0] / modes.frequencies)[None, :]
    if eta.shape != (modes.num_ions, modes.num_ions):
        raise ValueError(f"eta_eff must be scalar or {modes.num_ions}x{modes.num_ions}, got {eta.shape}")
    return eta


def sideband_rates(
    modes: ChainModes,
    offsets: np.ndarray,
    eta: np.ndarray,
    rabi: float,
    linewidth: float,
    drive_detuning: float,
):
    """
    Summed red (A₋) and blue (A₊) sideband rates per mode

    A∓_p = Σᵢ (η_ip Ω)² Γ/(Γ² + 4δ∓²) with δ∓ the drive detuning from ion i's
    red (ω_i − ν_p) or blue (ω_i + ν_p) sideband; the drive detuning is measured
    from ion 1's carrier.
    """
    ion_detuning = drive_detuning - np.asarray(offsets, dtype=float)[:, None]
    red = ion_detuning + modes.frequencies[None, :]
    blue = ion_detuning - modes.frequencies[None, :]
    strength = (eta * rabi) ** 2 * linewidth
    cooling = np.sum(strength / (linewidth**2 + 4.0 * red**2), axis=0)
    heating = np.sum(strength / (linewidth**2 + 4.0 * blue**2), axis=0)
    return cooling, heating


def multimode_cool_sim(
    modes: ChainModes,
    offsets: Union[GradientDesign, ArrayLike],
    eta_eff: Union[float, np.ndarray],
    rabi: float,
    linewidth: float,
    initial_nbar: ArrayLike,
    duration: float,
    heating_rate: ArrayLike = 0.0,
    drive_detuning: Optional[float] = None,
    num_points: int = 201,
) -> MultimodeResult:
    """
    Rate-equation cooling of every mode under a single drive

    dn̄_p/dt = −(A₋ − A₊)n̄_p + A₊ + ṙ_p, integrated in closed form.

    Args:
        modes: Chain normal modes
        offsets: GradientDesign or per-ion resonance offsets, rad/s
        eta_eff: Effective Lamb-Dicke parameter (scalar COM value or η_ip matrix)
        rabi: Drive Rabi frequency Ω
        linewidth: Effective linewidth Γ of the cooling transition
        initial_nbar: n̄_p at t = 0, scalar or per mode
        duration: Cooling time
        heating_rate: Phonon heating per mode, quanta per unit time
        drive_detuning: Detuning from ion 1's carrier; defaults to its COM red sideband −ν₁
        num_points: Output samples

    Returns:
        MultimodeResult whose trajectory holds n_bar with one column per mode
    """
    n = modes.num_ions
    if isinstance(offsets, GradientDesign):
        offsets = offsets.offsets
    offsets = np.asarray(offsets, dtype=float)
    if offsets.shape != (n,):
        raise ValueError(f"Expected {n} offsets, got shape {offsets.shape}")
    if duration <= 0 or linewidth <= 0 or rabi < 0:
        raise ValueError("duration and linewidth must be positive and rabi non-negative")
    if n > 4:
        logger.warning(f"multimode_cool_sim with {n} ions is outside the tested range (N ≤ 4)")

    nbar0 = _per_mode(initial_nbar, n, "initial_nbar")
    heating = _per_mode(heating_rate, n, "heating_rate")
    detuning = -float(modes.frequencies[0]) if drive_detuning is None else float(drive_detuning)

    eta = coupling_matrix(modes, eta_eff)
    cooling_rates, blue_rates = sideband_rates(modes, offsets, eta, rabi, linewidth, detuning)
    damping = cooling_rates - blue_rates
    source = blue_rates + heating

    times = np.linspace(0.0, duration, num_points)
    decay = np.exp(-np.outer(times, damping))
    # (1 − e^{−γt})/γ, tending to t for γ → 0
    with np.errstate(divide="ignore", invalid="ignore"):
        growth = np.where(
            np.abs(damping) > 0,
            -np.expm1(-np.outer(times, damping)) / np.where(damping == 0, 1.0, damping),
            times[:, None],
        )
    nbar = nbar0[None, :] * decay + source[None, :] * growth

    with np.errstate(divide="ignore"):
        steady = np.where(damping > 0, source / np.where(damping > 0, damping, 1.0), np.inf)

    for p in range(n):
        logger.info(
            f"Mode {p + 1} (ν_p/ν={modes.relative_frequencies[p]:.6f}): "
            f"A₋={cooling_rates[p]:.4g}, A₊={blue_rates[p]:.4g}, n̄ {nbar0[p]:.4g} → {nbar[-1, p]:.4g}"
        )
    return MultimodeResult(
        trajectory=Trajectory(times=times, observables={"n_bar": nbar}),
        cooling_rates=cooling_rates,
        heating_rates=blue_rates,
        steady_state_nbar=steady,
        metadata={"drive_detuning": detuning, "offsets": offsets.tolist()},
    )
