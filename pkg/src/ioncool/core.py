"""
Core CoolingLab class providing the main API
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from .config.config_manager import ConfigManager, load_experiment_config, parse_experiment_config
from .config.models import ExperimentConfig, RunManifest
from .constants import VALID_EXPERIMENTS
from .experiments.base_experiment import get_experiment
from .experiments.runner import ExperimentRunner


logger = logging.getLogger(__name__)


class CoolingLab:
    """Main class for running trapped-ion cooling experiments"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize the CoolingLab

        Args:
            config_path: Path to .env config file (optional)
        """
        self.config = ConfigManager(config_path)
        self.runner = ExperimentRunner(
            max_workers=self.config.get("threads"),
            species_file=self.config.get("species_file"),
            output_dir=self.config.get("output_dir"),
        )

    def run(
        self,
        config: Union[str, Path, Dict[str, Any], ExperimentConfig],
        output_dir: Optional[Union[str, Path]] = None,
    ) -> RunManifest:
        """
        Run an experiment config and write its artifacts

        Args:
            config: Path to a JSON config, a decoded config or an ExperimentConfig
            output_dir: Output directory override

        Returns:
            RunManifest of the written artifacts

        Raises:
            ConfigError: If the config is invalid (names the offending key)
            NumericalError: On numerical failure
        """
        if isinstance(config, ExperimentConfig):
            experiment_config = config
        elif isinstance(config, dict):
            experiment_config = parse_experiment_config(config)
        else:
            experiment_config = load_experiment_config(config)
        return self.runner.run(experiment_config, output_dir)

    def list_experiments(self) -> List[Dict[str, Any]]:
        """Name, description and parameter keys of every experiment"""
        listing = []
        for name in VALID_EXPERIMENTS:
            experiment = get_experiment(name)
            listing.append(
                {
                    "name": name,
                    "description": experiment.description,
                    "keys": [row["key"] for row in experiment.parameter_table()],
                }
            )
        return listing

    def schema(self, name: str) -> List[Dict[str, Any]]:
        """Parameter table of one experiment"""
        return get_experiment(name).parameter_table()
