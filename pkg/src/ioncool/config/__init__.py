"""
Configuration management
"""

from .config_manager import ConfigManager, load_experiment_config, parse_experiment_config
from .models import (
    EXPERIMENT_PARAMETERS,
    ArtifactRecord,
    ConfigSettings,
    ExperimentConfig,
    GridSpec,
    RunManifest,
)

__all__ = [
    "ConfigManager", "ConfigSettings", "ExperimentConfig", "GridSpec", "RunManifest", "ArtifactRecord",
    "EXPERIMENT_PARAMETERS", "load_experiment_config", "parse_experiment_config",
]
