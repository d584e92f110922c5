"""
Hamiltonians and coupling parameters for trapped-ion cooling
"""

from .params import EITConfig, LaserDrive, MagicParams, TrapParams
from .sideband import (
    FullInteractionHamiltonian,
    blue_sideband_hamiltonian,
    carrier_hamiltonian,
    conserved_charge,
    debye_waller_coupling,
    full_interaction_hamiltonian,
    get_sideband_hamiltonian,
    lamb_dicke_factor,
    lamb_dicke_parameter,
    rabi_coupling,
    raman_effective_ldp,
    red_sideband_hamiltonian,
    time_average,
)
from .magic import classical_analogy, effective_ldp, magic_displacement, magic_hamiltonian, magic_kappa
from .eit import (
    EIT_SPACE,
    dressed_states,
    eit_cooling_design,
    eit_dark_state,
    eit_hamiltonian,
    eit_light_shift,
)

__all__ = [
    "TrapParams", "LaserDrive", "MagicParams", "EITConfig",
    "carrier_hamiltonian", "blue_sideband_hamiltonian", "red_sideband_hamiltonian",
    "get_sideband_hamiltonian", "conserved_charge",
    "FullInteractionHamiltonian", "full_interaction_hamiltonian", "time_average",
    "rabi_coupling", "debye_waller_coupling", "lamb_dicke_parameter", "lamb_dicke_factor",
    "raman_effective_ldp",
    "magic_kappa", "magic_displacement", "classical_analogy", "effective_ldp", "magic_hamiltonian",
    "EIT_SPACE", "eit_hamiltonian", "dressed_states", "eit_dark_state", "eit_light_shift",
    "eit_cooling_design",
]
