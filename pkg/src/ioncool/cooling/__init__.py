"""
Cooling models: Doppler, resistive, sideband, EIT and multi-mode chains
"""

from .species import SpeciesParams, SpeciesTable, get_species, load_species_table
from .doppler import (
    DopplerResult,
    default_detuning,
    doppler_cool_trajectory,
    doppler_force,
    doppler_friction_slope,
    doppler_limit,
    equilibrium_temperature,
    optimal_detuning,
    thermal_rates,
)
from .resistive import (
    ResistiveConfig,
    image_charges,
    induced_current,
    resistive_cooling_trajectory,
    resistive_energy,
    resistive_time_constant,
)
from .sideband import (
    cooling_rate_per_phonon,
    sideband_cool,
    sideband_rate_model,
    sideband_transition_rate,
)
from .eit import EITCoolingFigure, Spectrum, eit_absorption_spectrum, eit_cooling_assess
from .chain import ChainModes, chain_length_scale, chain_normal_modes, equilibrium_positions
from .multimode import (
    GradientDesign,
    MultimodeResult,
    assign_ions_to_modes,
    design_simultaneous_gradient,
    multimode_cool_sim,
)

__all__ = [
    "SpeciesParams", "SpeciesTable", "get_species", "load_species_table",
    "DopplerResult", "default_detuning", "doppler_cool_trajectory", "doppler_force",
    "doppler_friction_slope",
    "doppler_limit", "equilibrium_temperature", "optimal_detuning", "thermal_rates",
    "ResistiveConfig", "image_charges", "induced_current", "resistive_cooling_trajectory",
    "resistive_energy", "resistive_time_constant",
    "sideband_cool", "sideband_rate_model", "sideband_transition_rate", "cooling_rate_per_phonon",
    "Spectrum", "EITCoolingFigure", "eit_absorption_spectrum", "eit_cooling_assess",
    "ChainModes", "chain_normal_modes", "chain_length_scale", "equilibrium_positions",
    "GradientDesign", "MultimodeResult", "assign_ions_to_modes",
    "design_simultaneous_gradient", "multimode_cool_sim",
]
