"""
Configuration management for ioncool
"""

import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional, Union

from dotenv import load_dotenv
from pydantic import ValidationError

from ..constants import DEFAULT_LOG_LEVEL, DEFAULT_OUTPUT_DIR, DEFAULT_THREADS
from ..exceptions import ConfigError
from .models import EXPERIMENT_PARAMETERS, ConfigSettings, ExperimentConfig


logger = logging.getLogger(__name__)

VALID_LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


class ConfigManager:
    """Manages runtime settings from IONCOOL_* environment variables and .env files"""

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration manager

        Args:
            config_path: Path to .env file (optional, will search automatically)
        """
        self.config_path = self._find_config_file(config_path)
        self._load_config()
        self._settings = self._parse_settings()

    def _find_config_file(self, config_path: Optional[str]) -> Optional[Path]:
        """Find configuration file"""
        if config_path:
            path = Path(config_path)
            if path.exists():
                return path
            logger.warning(f"Config file {config_path} not found, searching for .env")

        current_dir = Path.cwd()
        for parent in [current_dir] + list(current_dir.parents):
            env_file = parent / ".env"
            if env_file.exists():
                return env_file

        logger.debug("No .env file found. Using environment and defaults.")
        return None

    def _load_config(self):
        """Load configuration from file"""
        if self.config_path:
            load_dotenv(self.config_path)

    def _parse_settings(self) -> ConfigSettings:
        """Parse environment variables into ConfigSettings"""
        raw_threads = os.getenv("IONCOOL_THREADS", str(DEFAULT_THREADS))
        try:
            threads = int(raw_threads)
        except ValueError as e:
            raise ConfigError(
                f"IONCOOL_THREADS must be an integer, got '{raw_threads}'", key="IONCOOL_THREADS"
            ) from e
        try:
            return ConfigSettings(
                threads=threads,
                output_dir=os.getenv("IONCOOL_OUTPUT_DIR", DEFAULT_OUTPUT_DIR),
                species_file=os.getenv("IONCOOL_SPECIES_FILE") or None,
                log_level=os.getenv("IONCOOL_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
                log_file=os.getenv("IONCOOL_LOG_FILE") or None,
            )
        except ValidationError as e:
            raise config_error_from_validation(e, prefix="IONCOOL") from e

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get a configuration value

        Args:
            key: Configuration key
            default: Default value if key not found

        Returns:
            Configuration value
        """
        return getattr(self._settings, key, default)

    def set(self, key: str, value: Any) -> None:
        """
        Set a configuration value (in-memory only)

        Args:
            key: Configuration key
            value: Value to set
        """
        if hasattr(self._settings, key):
            setattr(self._settings, key, value)
        else:
            logger.warning(f"Unknown configuration key: {key}")

    def get_all(self) -> Dict[str, Any]:
        """Get all configuration as dictionary"""
        return self._settings.model_dump()

    @property
    def settings(self) -> ConfigSettings:
        return self._settings

    def validate_config(self) -> Dict[str, str]:
        """
        Validate configuration and return any issues

        Returns:
            Dictionary of validation issues (key -> error message)
        """
        issues = {}

        if self._settings.threads < 1:
            issues["threads"] = f"IONCOOL_THREADS must be at least 1, got {self._settings.threads}"

        if self._settings.log_level.upper() not in VALID_LOG_LEVELS:
            issues["log_level"] = (
                f"Invalid log level: {self._settings.log_level}. Must be one of {VALID_LOG_LEVELS}"
            )

        if self._settings.species_file and not Path(self._settings.species_file).exists():
            issues["species_file"] = f"Species file not found: {self._settings.species_file}"

        return issues


def _dotted(location) -> str:
    return ".".join(str(part) for part in location)


def config_error_from_validation(error: ValidationError, prefix: str = "") -> ConfigError:
    """ConfigError naming the first offending key as a dotted path"""
    head = [prefix] if prefix else []
    key = _dotted(head + list(error.errors()[0]["loc"]))
    details = "; ".join(f"{_dotted(head + list(item['loc']))}: {item['msg']}" for item in error.errors())
    return ConfigError(f"Invalid configuration key '{key}': {details}", key=key)


def parse_experiment_config(raw: Dict[str, Any]) -> ExperimentConfig:
    """
    Validate a decoded config, including its experiment-specific parameters

    Raises:
        ConfigError: With the dotted path of the offending key
    """
    try:
        config = ExperimentConfig.model_validate(raw)
    except ValidationError as e:
        raise config_error_from_validation(e) from e
    try:
        config.typed_parameters()
    except ValidationError as e:
        raise config_error_from_validation(e, prefix="parameters") from e

    if config.grid is not None:
        allowed = EXPERIMENT_PARAMETERS[config.experiment].model_fields
        if config.grid.parameter not in allowed:
            raise ConfigError(
                f"Invalid configuration key 'grid.parameter': '{config.grid.parameter}' is not a "
                f"parameter of {config.experiment}",
                key="grid.parameter",
            )
        for value in config.grid.points():
            try:
                EXPERIMENT_PARAMETERS[config.experiment].model_validate(
                    {**config.parameters, config.grid.parameter: value}
                )
            except ValidationError as e:
                raise config_error_from_validation(e, prefix="grid") from e
    return config


def load_experiment_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and validate a JSON experiment config

    Args:
        path: Config file path

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: If the file is unreadable, not JSON, or fails the schema
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise ConfigError(f"Config file not found: {path}", key=str(path)) from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Config file {path} is not valid JSON: {e}", key=str(path)) from e
    if not isinstance(raw, dict):
        raise ConfigError(f"Config file {path} must contain a JSON object", key=str(path))
    logger.debug(f"Loaded experiment config from {path}")
    return parse_experiment_config(raw)
