"""
Resistive cooling experiment
"""

from ..config.models import ResistiveParameters
from ..constants import ATOMIC_MASS, ELECTRON_VOLT, ELEMENTARY_CHARGE
from ..cooling.resistive import ResistiveConfig, resistive_cooling_trajectory, resistive_time_constant
from .base_experiment import BaseExperiment, ExperimentResult


class ResistiveExperiment(BaseExperiment):
    """Energy of a trapped charge damped by an external resistor"""

    name = "resistive"
    description = "Resistive cooling E(t) = E₀e^{−t/τ} with τ = 4mz₀²/q²R"

    def run(self, params: ResistiveParameters) -> ExperimentResult:
        cfg = ResistiveConfig(
            mass=params.mass_amu * ATOMIC_MASS,
            charge=params.charge_e * ELEMENTARY_CHARGE,
            half_gap=params.half_gap_m,
            resistance=params.resistance_ohm,
            initial_energy=params.initial_energy_ev * ELECTRON_VOLT,
            resistor_temperature=params.resistor_temperature_k,
        )
        trajectory = resistive_cooling_trajectory(cfg, params.duration_s, params.num_points)
        return ExperimentResult(
            tables={"trajectory.csv": trajectory.to_frame(time_column="t_s")},
            summary={
                "tau_s": resistive_time_constant(cfg),
                "E_final_J": float(trajectory["E_J"][-1]),
            },
        )
