"""
Magnetic-gradient induced coupling experiment
"""

import math

from ..config.models import MagicParameters
from ..hamiltonians import TrapParams, classical_analogy, effective_ldp, magic_displacement, magic_kappa
from .base_experiment import BaseExperiment, ExperimentResult


class MagicExperiment(BaseExperiment):
    """Coupling constant κ and effective Lamb-Dicke parameter for an RF transition"""

    name = "magic"
    description = "Gradient coupling κ, η_eff = η + iκ and the RF sideband Rabi frequency"

    def run(self, params: MagicParameters) -> ExperimentResult:
        trap = TrapParams.from_lab_units(params.nu_hz, params.mass_amu)
        gradient = 2.0 * math.pi * params.gradient_hz_per_m
        kappa = magic_kappa(trap, gradient)
        force, shift = magic_displacement(trap, gradient)
        _, shift_energy = classical_analogy(trap, force, 0.0)
        magic = effective_ldp(params.eta, kappa)
        return ExperimentResult(
            summary={
                "kappa": kappa,
                "kappa_from_displacement": magic_kappa(trap, gradient, method="displacement"),
                "eta_eff_abs": magic.eta_prime,
                "theta_rad": magic.theta,
                "z0_m": trap.z0,
                "force_N": force,
                "displacement_m": shift,
                "shift_energy_J": shift_energy,
                "sideband_rabi_hz": magic.eta_prime * params.rabi_hz,
            },
        )
