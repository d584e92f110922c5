"""
EIT absorption spectrum experiment
"""

import numpy as np

from ..config.models import EITSpectrumParameters
from ..cooling.eit import eit_absorption_spectrum, eit_cooling_assess
from ..hamiltonians import EITConfig, eit_light_shift
from .base_experiment import BaseExperiment, ExperimentResult


class EITSpectrumExperiment(BaseExperiment):
    """Probe absorption versus Δ₃ with an optional cooling assessment"""

    name = "eit-spectrum"
    description = "Dark-resonance absorption spectrum, normalized, in units of Γ"

    def run(self, params: EITSpectrumParameters) -> ExperimentResult:
        cfg = EITConfig(
            omega1=params.omega1_gamma,
            omega3=params.omega3_gamma,
            delta1=params.delta1_gamma,
            gamma=1.0,
            beta=params.beta,
        )
        grid = np.linspace(params.delta3_min_gamma, params.delta3_max_gamma, params.num_points)
        spectrum = eit_absorption_spectrum(cfg, grid, max_workers=self.max_workers)

        summary = {
            "dark_point_gamma": spectrum.minimum(),
            "peaks_gamma": spectrum.peaks(),
            "narrow_resonance_shift_gamma": eit_light_shift(cfg.omega1, cfg.delta1),
        }
        if params.nu_gamma is not None:
            carrier = params.delta1_gamma if params.carrier_gamma is None else params.carrier_gamma
            figure = eit_cooling_assess(spectrum, params.nu_gamma, carrier)
            summary.update(
                {
                    "a_red": figure.a_red,
                    "a_carrier": figure.a_carrier,
                    "a_blue": figure.a_blue,
                    "cooling_ratio": figure.ratio,
                }
            )
        return ExperimentResult(tables={"spectrum.csv": spectrum.to_frame()}, summary=summary)
