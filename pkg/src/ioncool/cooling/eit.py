"""
Dark-resonance absorption spectra and EIT cooling assessment
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np
import pandas as pd
from scipy.signal import find_peaks

from ..constants import EIT_GRID_MAX_GAP
from ..dynamics import eit_decay_channels, scattering_rate, steady_state
from ..hamiltonians import EITConfig, eit_hamiltonian


logger = logging.getLogger(__name__)

EXCITED_LEVEL = "2"


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Steady-state scattering rate of |2⟩ versus probe detuning Δ₃"""

    config: EITConfig
    delta3: np.ndarray
    absorption: np.ndarray

    @property
    def absorption_norm(self) -> np.ndarray:
        peak = float(np.max(self.absorption))
        if peak <= 0:
            return np.zeros_like(self.absorption)
        return self.absorption / peak

    def minimum(self) -> float:
        """Detuning of the lowest absorption sample"""
        return float(self.delta3[int(np.argmin(self.absorption))])

    def peaks(self) -> np.ndarray:
        """Detunings of the local maxima"""
        indices, _ = find_peaks(self.absorption)
        return self.delta3[indices]

    def value_at(self, delta3: float) -> float:
        """
        Normalized absorption interpolated at delta3

        Raises:
            ValueError: If no grid sample lies within 0.02Γ of delta3
        """
        gap = float(np.min(np.abs(self.delta3 - delta3)))
        if gap > EIT_GRID_MAX_GAP * self.config.gamma:
            raise ValueError(
                f"Spectrum grid too coarse: nearest sample is {gap:.4g} from Δ₃ = {delta3:.4g} "
                f"(limit {EIT_GRID_MAX_GAP:g}Γ)"
            )
        return float(np.interp(delta3, self.delta3, self.absorption_norm))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"delta3": self.delta3, "absorption_norm": self.absorption_norm})


@dataclass(frozen=True)
class EITCoolingFigure:
    """Normalized absorption on the red sideband, carrier and blue sideband"""

    a_red: float
    a_carrier: float
    a_blue: float
    ratio: float


def _absorption_at(cfg: EITConfig, delta3: float) -> float:
    point = cfg.with_delta3(delta3)
    rho = steady_state(eit_hamiltonian(point), eit_decay_channels(point))
    # the dark point can come out a few ulp below zero
    return max(0.0, scattering_rate(rho, point.gamma, EXCITED_LEVEL))


def eit_absorption_spectrum(cfg: EITConfig, delta3_grid: Sequence[float], max_workers: int = 1) -> Spectrum:
    """
    Probe absorption of the three-level system over a grid of Δ₃

    Every point is an independent steady-state solve; with max_workers > 1 they
    run on a thread pool and are merged by grid index.

    Args:
        cfg: Three-level parameters (its delta3 is ignored)
        delta3_grid: Probe detunings
        max_workers: Thread-pool size

    Returns:
        Spectrum with the scattering rate Γρ₂₂ per detuning
    """
    grid = np.asarray(delta3_grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("delta3_grid must be a non-empty one-dimensional sequence")
    if not np.all(np.isfinite(grid)):
        raise ValueError("delta3_grid contains non-finite values")

    if max_workers > 1 and grid.size > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as executor:
            values = list(executor.map(lambda d: _absorption_at(cfg, d), grid))
    else:
        values = [_absorption_at(cfg, d) for d in grid]

    logger.info(
        f"EIT spectrum: {grid.size} points, Ω₁={cfg.omega1:g}, Ω₃={cfg.omega3:g}, "
        f"Δ₁={cfg.delta1:g}, β={cfg.beta:g}"
    )
    return Spectrum(config=cfg, delta3=grid, absorption=np.array(values))


def eit_cooling_assess(spectrum: Spectrum, nu: float, carrier_detuning: float) -> EITCoolingFigure:
    """
    Cooling selectivity of a spectrum for a trap frequency ν

    The red sideband absorbs at Δ₃ = carrier + ν (the photon is supplemented
    by one phonon), the blue sideband at carrier − ν.

    Args:
        spectrum: Absorption spectrum covering [carrier − ν, carrier + ν]
        nu: Trap frequency, in the units of the spectrum
        carrier_detuning: Δ₃ at which the carrier is placed

    Returns:
        EITCoolingFigure with ratio A_red/(A_carrier + A_blue)

    Raises:
        ValueError: If the grid does not resolve the requested offsets
    """
    if nu <= 0:
        raise ValueError(f"nu must be positive, got {nu}")
    a_red = spectrum.value_at(carrier_detuning + nu)
    a_carrier = spectrum.value_at(carrier_detuning)
    a_blue = spectrum.value_at(carrier_detuning - nu)
    denominator = a_carrier + a_blue
    ratio = a_red / denominator if denominator > 0 else math.inf
    if ratio < 1:
        logger.warning(f"EIT placement favours heating: red/(carrier+blue) = {ratio:.3g}")
    return EITCoolingFigure(a_red=a_red, a_carrier=a_carrier, a_blue=a_blue, ratio=ratio)
