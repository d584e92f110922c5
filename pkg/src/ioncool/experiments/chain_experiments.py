"""
Ion-chain mode and simultaneous multi-mode cooling experiments
"""

import math

import numpy as np
import pandas as pd

from ..config.models import ChainModesParameters, MultimodeCoolParameters
from ..constants import ATOMIC_MASS, ELEMENTARY_CHARGE
from ..cooling.chain import chain_normal_modes
from ..cooling.multimode import design_simultaneous_gradient, multimode_cool_sim
from .base_experiment import BaseExperiment, ExperimentResult

# frequencies in units of ν do not depend on mass or charge
REFERENCE_MASS = 40.0 * ATOMIC_MASS


class ChainModesExperiment(BaseExperiment):
    """Equilibrium positions and axial normal modes of N ions"""

    name = "chain-modes"
    description = "Axial mode frequencies, mode vectors and ion positions of a linear chain"

    def run(self, params: ChainModesParameters) -> ExperimentResult:
        nu = 2.0 * math.pi * params.nu_hz
        modes = chain_normal_modes(
            params.num_ions, nu, params.mass_amu * ATOMIC_MASS, params.charge_e * ELEMENTARY_CHARGE
        )
        design = design_simultaneous_gradient(modes)

        table = {
            "mode": np.arange(1, modes.num_ions + 1),
            "nu_hz": modes.frequencies / (2.0 * math.pi),
            "nu_ratio": modes.relative_frequencies,
        }
        for ion in range(modes.num_ions):
            table[f"b_ion{ion + 1}"] = modes.mode_vectors[ion]
        positions = pd.DataFrame(
            {"ion": np.arange(1, modes.num_ions + 1), "position_m": modes.equilibrium_positions}
        )
        return ExperimentResult(
            tables={"modes.csv": pd.DataFrame(table), "positions.csv": positions},
            summary={
                "nu_ratio": modes.relative_frequencies,
                "length_scale_m": modes.length_scale,
                "gradient_offsets_hz": design.offsets / (2.0 * math.pi),
                "ion_to_mode": design.assignment + 1,
                "highest_nu_ratio": float(modes.relative_frequencies[-1]),
            },
        )


class MultimodeCoolExperiment(BaseExperiment):
    """Rate-equation cooling of every chain mode with one drive frequency"""

    name = "multimode-cool"
    description = "Simultaneous cooling of all modes with gradient-shifted resonances, in units of ν"

    def run(self, params: MultimodeCoolParameters) -> ExperimentResult:
        modes = chain_normal_modes(params.num_ions, 1.0, REFERENCE_MASS, ELEMENTARY_CHARGE)
        if params.design_gradient:
            design = design_simultaneous_gradient(modes)
            offsets, assignment = design.offsets, design.assignment + 1
        else:
            offsets, assignment = np.zeros(modes.num_ions), None

        result = multimode_cool_sim(
            modes,
            offsets,
            eta_eff=params.eta_eff,
            rabi=params.rabi_nu,
            linewidth=params.linewidth_nu,
            initial_nbar=params.initial_nbar,
            duration=params.duration_nu,
            heating_rate=params.heating_nu,
            drive_detuning=params.drive_detuning_nu,
            num_points=params.num_points,
        )
        summary = {
            "offsets_nu": offsets,
            "final_nbar": result.final_nbar,
            "max_final_nbar": float(np.max(result.final_nbar)),
            "cooling_rates_nu": result.cooling_rates,
            "blue_sideband_rates_nu": result.heating_rates,
            "steady_state_nbar": result.steady_state_nbar,
        }
        if assignment is not None:
            summary["ion_to_mode"] = assignment
        return ExperimentResult(
            tables={"trajectory.csv": result.trajectory.to_frame(time_column="t_nu")},
            summary=summary,
        )
