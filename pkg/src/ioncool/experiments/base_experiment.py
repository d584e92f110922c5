"""
Base experiment class and factory functions
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Type

import pandas as pd
from pydantic import BaseModel

from ..config.models import EXPERIMENT_PARAMETERS
from ..constants import VALID_EXPERIMENTS
from ..exceptions import ConfigError


@dataclass
class ExperimentResult:
    """Tables to write as CSV (by file name) and the result.json summary"""

    tables: Dict[str, pd.DataFrame] = field(default_factory=dict)
    summary: Dict[str, Any] = field(default_factory=dict)


class BaseExperiment(ABC):
    """Abstract base class for runnable experiments"""

    name: str = ""
    description: str = ""

    def __init__(self, species_file: Optional[str] = None, max_workers: int = 1):
        """
        Initialize experiment

        Args:
            species_file: Alternative species table (optional)
            max_workers: Thread cap for internal sweeps
        """
        self.species_file = species_file
        self.max_workers = max_workers

    @classmethod
    def parameters_model(cls) -> Type[BaseModel]:
        return EXPERIMENT_PARAMETERS[cls.name]

    @classmethod
    def parameter_table(cls) -> List[Dict[str, Any]]:
        """Key, type, default and description of every parameter"""
        rows = []
        for key, info in cls.parameters_model().model_fields.items():
            annotation = getattr(info.annotation, "__name__", None)
            if annotation is None:
                annotation = str(info.annotation).replace("typing.", "")
            constraints = ", ".join(str(m) for m in info.metadata)
            rows.append(
                {
                    "key": key,
                    "type": annotation,
                    "default": None if info.is_required() else info.default,
                    "constraints": constraints,
                }
            )
        return rows

    def parse(self, parameters: Dict[str, Any]) -> BaseModel:
        return self.parameters_model().model_validate(parameters)

    @abstractmethod
    def run(self, params: BaseModel) -> ExperimentResult:
        """
        Execute the experiment

        Args:
            params: Validated parameter model

        Returns:
            ExperimentResult with tables and summary
        """
        pass

    def species(self, name: str):
        from ..cooling.species import get_species

        try:
            return get_species(name, self.species_file)
        except KeyError as e:
            raise ConfigError(e.args[0], key="parameters.species") from e

    def sweep_row(self, result: ExperimentResult) -> Dict[str, Any]:
        """Scalar summary entries for one row of sweep.csv"""
        return {
            key: value
            for key, value in sorted(result.summary.items())
            if isinstance(value, (int, float)) and not isinstance(value, bool)
        }


def get_experiment(name: str, species_file: Optional[str] = None, max_workers: int = 1) -> BaseExperiment:
    """
    Factory function to get the experiment for a config's `experiment` value

    Args:
        name: Experiment name
        species_file: Alternative species table (optional)
        max_workers: Thread cap for internal sweeps

    Returns:
        Experiment instance

    Raises:
        ConfigError: If the name is unknown
    """
    # Import here to avoid circular imports
    if name == "doppler":
        from .doppler_experiments import DopplerExperiment

        return DopplerExperiment(species_file, max_workers)
    elif name == "doppler-limit":
        from .doppler_experiments import DopplerLimitExperiment

        return DopplerLimitExperiment(species_file, max_workers)
    elif name == "resistive":
        from .resistive_experiment import ResistiveExperiment

        return ResistiveExperiment(species_file, max_workers)
    elif name == "sideband-cool":
        from .sideband_experiments import SidebandCoolExperiment

        return SidebandCoolExperiment(species_file, max_workers)
    elif name == "rabi-flop":
        from .sideband_experiments import RabiFlopExperiment

        return RabiFlopExperiment(species_file, max_workers)
    elif name == "eit-spectrum":
        from .eit_experiment import EITSpectrumExperiment

        return EITSpectrumExperiment(species_file, max_workers)
    elif name == "magic":
        from .magic_experiment import MagicExperiment

        return MagicExperiment(species_file, max_workers)
    elif name == "chain-modes":
        from .chain_experiments import ChainModesExperiment

        return ChainModesExperiment(species_file, max_workers)
    elif name == "multimode-cool":
        from .chain_experiments import MultimodeCoolExperiment

        return MultimodeCoolExperiment(species_file, max_workers)
    else:
        raise ConfigError(f"Unknown experiment: {name}. Supported: {VALID_EXPERIMENTS}", key="experiment")
