"""
Resistive cooling of a charge oscillating between two parallel plates

The moving charge induces image charges on the plates; the image current
through an external resistor dissipates the motional energy exponentially.
"""

import logging
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from ..constants import K_B
from ..dynamics.observables import Trajectory


logger = logging.getLogger(__name__)


class ResistiveConfig(BaseModel):
    """Charge between plates at ±z₀ connected through a resistor"""

    model_config = ConfigDict(frozen=True)

    mass: float = Field(gt=0, description="kg")
    charge: float = Field(gt=0, description="C")
    half_gap: float = Field(gt=0, description="Plate half-separation z₀, m")
    resistance: float = Field(gt=0, description="Ω")
    initial_energy: float = Field(gt=0, description="E₀, J")
    resistor_temperature: float = Field(default=0.0, ge=0, description="Johnson-noise temperature of R, K")


def resistive_time_constant(cfg: ResistiveConfig) -> float:
    """τ = 4mz₀²/(q²R), s"""
    return 4.0 * cfg.mass * cfg.half_gap**2 / (cfg.charge**2 * cfg.resistance)


def image_charges(cfg: ResistiveConfig, z: float) -> Tuple[float, float]:
    """
    Magnitudes of the charges induced on the plates at +z₀ and −z₀

    q′ = (z₀ ± z)q/2z₀; they always add up to q.
    """
    if abs(z) > cfg.half_gap:
        raise ValueError(f"Position {z} lies outside the plates at ±{cfg.half_gap}")
    scale = cfg.charge / (2.0 * cfg.half_gap)
    return (cfg.half_gap + z) * scale, (cfg.half_gap - z) * scale


def induced_current(cfg: ResistiveConfig, velocity):
    """i = qv/2z₀, A"""
    return cfg.charge * np.asarray(velocity, dtype=float) / (2.0 * cfg.half_gap)


def dissipated_power(cfg: ResistiveConfig, velocity):
    """Instantaneous i²R, W"""
    return induced_current(cfg, velocity) ** 2 * cfg.resistance


def energy_rate(cfg: ResistiveConfig, energy: float) -> float:
    """
    dE/dt = −q²R(E − k_B T_R)/(4mz₀²)

    Averaging i²R over an oscillation uses ⟨v²⟩ = E/m.
    """
    equilibrium = K_B * cfg.resistor_temperature
    return -(energy - equilibrium) / resistive_time_constant(cfg)


def resistive_energy(cfg: ResistiveConfig, t):
    """E(t) = k_B T_R + (E₀ − k_B T_R) e^{−t/τ}, J"""
    tau = resistive_time_constant(cfg)
    equilibrium = K_B * cfg.resistor_temperature
    decay = np.exp(-np.asarray(t, dtype=float) / tau)
    energy = equilibrium + (cfg.initial_energy - equilibrium) * decay
    return float(energy) if np.ndim(energy) == 0 else energy


def resistive_cooling_trajectory(cfg: ResistiveConfig, duration: float, num_points: int = 201) -> Trajectory:
    """Energy and temperature-equivalent E/k_B on a uniform grid over [0, duration]"""
    if duration <= 0:
        raise ValueError(f"duration must be positive, got {duration}")
    times = np.linspace(0.0, duration, num_points)
    energies = resistive_energy(cfg, times)
    logger.debug(f"Resistive cooling: τ = {resistive_time_constant(cfg):.6g} s over {duration:.6g} s")
    return Trajectory(
        times=times,
        observables={"E_J": energies, "T_K": energies / K_B},
        metadata={"tau_s": resistive_time_constant(cfg)},
    )
