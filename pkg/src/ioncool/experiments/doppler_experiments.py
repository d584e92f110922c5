"""
Doppler cooling experiments
"""

import logging

from ..config.models import DopplerLimitParameters, DopplerParameters
from ..cooling.doppler import doppler_cool_trajectory, doppler_limit
from .base_experiment import BaseExperiment, ExperimentResult


logger = logging.getLogger(__name__)


class DopplerExperiment(BaseExperiment):
    """Temperature of a thermal ensemble under two counter-propagating beams"""

    name = "doppler"
    description = "Doppler-cooling temperature trajectory T(t) and its equilibrium"

    def run(self, params: DopplerParameters) -> ExperimentResult:
        species = self.species(params.species)
        result = doppler_cool_trajectory(
            T0=params.t0_k,
            detuning=params.detuning_gamma * species.linewidth,
            sat=params.saturation,
            species=species,
            t_span=(0.0, params.duration_s),
            emission_projection=params.emission_projection,
            num_points=params.num_points,
        )
        return ExperimentResult(
            tables={"trajectory.csv": result.trajectory.to_frame(time_column="t_s")},
            summary={
                "species": species.name,
                "T_final_K": result.final_T,
                "T_equilibrium_K": result.equilibrium_T,
                "T_doppler_K": result.doppler_limit_T,
                "converged": result.converged,
            },
        )


class DopplerLimitExperiment(BaseExperiment):
    """Closed-form Doppler temperature of a species"""

    name = "doppler-limit"
    description = "Doppler limit ħγ/2k_B from the species table"

    def run(self, params: DopplerLimitParameters) -> ExperimentResult:
        species = self.species(params.species)
        temperature = doppler_limit(species)
        logger.info(f"Doppler limit of {species.name}: {temperature * 1e6:.1f} μK")
        return ExperimentResult(summary={"T_K": temperature, "species": species.name})
