"""
Pydantic models for runtime settings, experiment configs and run manifests

Physical quantities in experiment parameters carry their unit in the key name:
`_hz`, `_amu`, `_k`, `_s`, `_m`, `_ohm`, `_ev`, `_e` for SI-like lab units,
`_gamma` for multiples of the transition linewidth Γ and `_nu` for multiples
of the trap frequency ν (times in units of 1/ν).
"""

from typing import Any, Dict, List, Literal, Optional, Type

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..constants import (
    DEFAULT_DETUNING_LINEWIDTHS,
    DEFAULT_EMISSION_PROJECTION,
    DEFAULT_LOG_LEVEL,
    DEFAULT_OUTPUT_DIR,
    DEFAULT_SATURATION,
    DEFAULT_THREADS,
)


ExperimentName = Literal[
    "doppler",
    "doppler-limit",
    "resistive",
    "sideband-cool",
    "eit-spectrum",
    "magic",
    "chain-modes",
    "multimode-cool",
    "rabi-flop",
]


class ConfigSettings(BaseModel):
    """Application configuration settings"""

    threads: int = Field(default=DEFAULT_THREADS, ge=1)
    output_dir: str = DEFAULT_OUTPUT_DIR
    species_file: Optional[str] = None

    # Logging
    log_level: str = DEFAULT_LOG_LEVEL
    log_file: Optional[str] = None


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class DopplerParameters(StrictModel):
    """Temperature trajectory of a thermal ensemble under two red-detuned beams"""

    species: str = "Rb"
    t0_k: float = Field(default=300.0, gt=0)
    detuning_gamma: float = DEFAULT_DETUNING_LINEWIDTHS
    saturation: float = Field(default=DEFAULT_SATURATION, ge=0)
    duration_s: float = Field(default=20.0, gt=0)
    emission_projection: float = Field(default=DEFAULT_EMISSION_PROJECTION, ge=0, le=1)
    num_points: int = Field(default=201, ge=2)


class DopplerLimitParameters(StrictModel):
    """Doppler temperature ħγ/2k_B of a species"""

    species: str = "Rb"


class ResistiveParameters(StrictModel):
    """Exponential energy loss of a charge between plates through a resistor"""

    mass_amu: float = Field(default=1.007276, gt=0)
    charge_e: float = Field(default=1.0, gt=0)
    half_gap_m: float = Field(default=5e-3, gt=0)
    resistance_ohm: float = Field(default=1e6, gt=0)
    initial_energy_ev: float = Field(default=1.0, gt=0)
    resistor_temperature_k: float = Field(default=0.0, ge=0)
    duration_s: float = Field(default=30.0, gt=0)
    num_points: int = Field(default=201, ge=2)


class SidebandCoolParameters(StrictModel):
    """Red-sideband drive with effective decay on a thermal mode, in units of ν"""

    initial_nbar: float = Field(default=5.0, ge=0)
    eta: float = Field(default=0.1, ge=0)
    rabi_nu: float = Field(default=0.1, ge=0)
    detuning_nu: float = -1.0
    repump_nu: float = Field(default=0.05, gt=0)
    heating_nu: float = Field(default=0.0, ge=0)
    duration_nu: float = Field(default=3500.0, gt=0)
    fock_cutoff: int = Field(default=40, ge=1)
    mode: Literal["rwa", "full"] = "rwa"
    recoil: bool = False
    num_points: int = Field(default=201, ge=2)


class EITSpectrumParameters(StrictModel):
    """Probe absorption of the three-level system, in units of Γ"""

    omega1_gamma: float = Field(default=1.0, ge=0)
    omega3_gamma: float = Field(default=0.01, ge=0)
    delta1_gamma: float = 0.0
    beta: float = Field(default=0.5, ge=0, le=1)
    delta3_min_gamma: float = -2.0
    delta3_max_gamma: float = 2.0
    num_points: int = Field(default=2001, ge=2)
    nu_gamma: Optional[float] = Field(default=None, gt=0)
    carrier_gamma: Optional[float] = None

    @model_validator(mode="after")
    def _check_range(self) -> "EITSpectrumParameters":
        if self.delta3_max_gamma <= self.delta3_min_gamma:
            raise ValueError("delta3_max_gamma must exceed delta3_min_gamma")
        return self


class MagicParameters(StrictModel):
    """Gradient-induced coupling for an RF-driven hyperfine transition"""

    nu_hz: float = Field(default=1e5, gt=0)
    mass_amu: float = Field(default=171.0, gt=0)
    gradient_hz_per_m: float = Field(default=1e10, ge=0)
    eta: float = Field(default=0.0, ge=0)
    rabi_hz: float = Field(default=1e3, ge=0)


class ChainModesParameters(StrictModel):
    """Axial normal modes of a linear chain"""

    num_ions: int = Field(default=2, ge=1)
    nu_hz: float = Field(default=1e6, gt=0)
    mass_amu: float = Field(default=40.0, gt=0)
    charge_e: float = Field(default=1.0, gt=0)


class MultimodeCoolParameters(StrictModel):
    """Single-frequency cooling of every chain mode, in units of the COM frequency ν"""

    num_ions: int = Field(default=3, ge=1, le=4)
    eta_eff: float = Field(default=0.1, ge=0)
    rabi_nu: float = Field(default=0.05, ge=0)
    linewidth_nu: float = Field(default=0.1, gt=0)
    initial_nbar: float = Field(default=5.0, ge=0)
    heating_nu: float = Field(default=0.0, ge=0)
    duration_nu: float = Field(default=1e5, gt=0)
    design_gradient: bool = True
    drive_detuning_nu: Optional[float] = None
    num_points: int = Field(default=201, ge=2)


class RabiFlopParameters(StrictModel):
    """Coherent carrier or sideband oscillation from |i, n⟩, in units of ν"""

    branch: Literal["carrier", "blue", "red"] = "blue"
    eta: float = Field(default=0.1, ge=0)
    rabi_nu: float = Field(default=0.1, ge=0)
    initial_internal: Literal["g", "e"] = "g"
    initial_n: int = Field(default=0, ge=0)
    fock_cutoff: int = Field(default=20, ge=1)
    duration_nu: float = Field(default=2000.0, gt=0)
    decay_nu: float = Field(default=0.0, ge=0)
    num_points: int = Field(default=801, ge=2)

    @model_validator(mode="after")
    def _check_fock(self) -> "RabiFlopParameters":
        if self.initial_n >= self.fock_cutoff:
            raise ValueError("initial_n must be below fock_cutoff")
        return self


EXPERIMENT_PARAMETERS: Dict[str, Type[StrictModel]] = {
    "doppler": DopplerParameters,
    "doppler-limit": DopplerLimitParameters,
    "resistive": ResistiveParameters,
    "sideband-cool": SidebandCoolParameters,
    "eit-spectrum": EITSpectrumParameters,
    "magic": MagicParameters,
    "chain-modes": ChainModesParameters,
    "multimode-cool": MultimodeCoolParameters,
    "rabi-flop": RabiFlopParameters,
}


class GridSpec(StrictModel):
    """Sweep of one parameter, either explicit values or a linear range"""

    parameter: str
    values: Optional[List[float]] = None
    start: Optional[float] = None
    stop: Optional[float] = None
    num: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_form(self) -> "GridSpec":
        has_values = self.values is not None
        has_range = any(v is not None for v in (self.start, self.stop, self.num))
        if has_values == has_range:
            raise ValueError("grid needs either 'values' or all of 'start', 'stop', 'num'")
        if has_range and None in (self.start, self.stop, self.num):
            raise ValueError("grid range needs 'start', 'stop' and 'num'")
        if has_values and not self.values:
            raise ValueError("grid 'values' must not be empty")
        return self

    def points(self) -> List[float]:
        if self.values is not None:
            return [float(v) for v in self.values]
        return [float(v) for v in np.linspace(self.start, self.stop, self.num)]


class ExperimentConfig(StrictModel):
    """One run: an experiment, its parameters, an output directory and an optional sweep"""

    experiment: ExperimentName
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output: Optional[str] = None
    grid: Optional[GridSpec] = None

    def typed_parameters(self) -> StrictModel:
        return EXPERIMENT_PARAMETERS[self.experiment].model_validate(self.parameters)


class ArtifactRecord(BaseModel):
    """File written by a run"""

    path: str
    sha256: str
    size_bytes: int


class RunManifest(BaseModel):
    """Record of a completed run, written after every artifact"""

    tool_version: str
    experiment: str
    config: Dict[str, Any]
    artifacts: List[ArtifactRecord] = Field(default_factory=list)
    wall_time_s: float = 0.0
