"""
Time evolution, master equations and steady states
"""

from .channels import (
    CollapseChannel,
    decay_channel,
    dephasing_channel,
    eit_decay_channels,
    heating_channels,
    recoil_channels,
    validate_channels,
)
from .observables import (
    Trajectory,
    check_population_contracts,
    excited_population_operator,
    fit_rabi_frequency,
    phonon_populations,
    phonon_statistics,
    populations_in_range,
    scattering_rate,
)
from .schrodinger import evolve_schrodinger, output_grid
from .lindblad import check_density_contracts, lindblad_evolve, liouvillian
from .steady_state import SteadyStateInfo, steady_state, steady_state_with_info

__all__ = [
    "CollapseChannel", "decay_channel", "dephasing_channel", "heating_channels",
    "recoil_channels", "eit_decay_channels", "validate_channels",
    "Trajectory", "scattering_rate", "phonon_statistics", "phonon_populations",
    "fit_rabi_frequency", "populations_in_range", "check_population_contracts",
    "excited_population_operator",
    "evolve_schrodinger", "output_grid",
    "lindblad_evolve", "liouvillian", "check_density_contracts",
    "steady_state", "steady_state_with_info", "SteadyStateInfo",
]
