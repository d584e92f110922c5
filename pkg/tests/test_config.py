"""
Tests for runtime settings and experiment config validation
"""

import json

import pytest

from ioncool.config import ConfigManager, GridSpec, load_experiment_config, parse_experiment_config
from ioncool.config.models import DopplerParameters, SidebandCoolParameters
from ioncool.exceptions import ConfigError


class TestConfigManager:
    """Test suite for ConfigManager"""

    def test_defaults(self, isolated_dir):
        """Test settings fall back to defaults without environment or .env"""
        manager = ConfigManager()
        assert manager.config_path is None
        assert manager.get("threads") == 1
        assert manager.get("output_dir") == "output"
        assert manager.get("log_level") == "INFO"
        assert manager.get("species_file") is None
        assert manager.validate_config() == {}

    def test_environment_overrides(self, isolated_dir, monkeypatch):
        """Test IONCOOL_* variables are read"""
        monkeypatch.setenv("IONCOOL_THREADS", "4")
        monkeypatch.setenv("IONCOOL_LOG_LEVEL", "debug")
        monkeypatch.setenv("IONCOOL_OUTPUT_DIR", "runs")
        manager = ConfigManager()
        assert manager.get("threads") == 4
        assert manager.get("log_level") == "DEBUG"
        assert manager.get("output_dir") == "runs"

    def test_env_file(self, isolated_dir):
        """Test an explicit .env file is loaded"""
        env_file = isolated_dir / "custom.env"
        env_file.write_text("IONCOOL_THREADS=3\n", encoding="utf-8")
        manager = ConfigManager(str(env_file))
        assert manager.config_path == env_file
        assert manager.get("threads") == 3

    def test_env_file_discovery(self, isolated_dir):
        """Test a .env in the working directory is found automatically"""
        (isolated_dir / ".env").write_text("IONCOOL_OUTPUT_DIR=found\n", encoding="utf-8")
        manager = ConfigManager()
        assert manager.get("output_dir") == "found"

    def test_invalid_threads(self, isolated_dir, monkeypatch):
        """Test a non-integer thread count raises ConfigError naming the variable"""
        monkeypatch.setenv("IONCOOL_THREADS", "many")
        with pytest.raises(ConfigError) as exc_info:
            ConfigManager()
        assert exc_info.value.key == "IONCOOL_THREADS"

    def test_zero_threads(self, isolated_dir, monkeypatch):
        """Test thread counts below one are rejected"""
        monkeypatch.setenv("IONCOOL_THREADS", "0")
        with pytest.raises(ConfigError, match="IONCOOL.threads"):
            ConfigManager()

    def test_validate_config(self, isolated_dir, monkeypatch):
        """Test unknown log levels and missing species files are reported"""
        monkeypatch.setenv("IONCOOL_LOG_LEVEL", "LOUD")
        monkeypatch.setenv("IONCOOL_SPECIES_FILE", str(isolated_dir / "missing.json"))
        issues = ConfigManager().validate_config()
        assert set(issues) == {"log_level", "species_file"}

    def test_get_set(self, isolated_dir):
        """Test in-memory updates and unknown keys"""
        manager = ConfigManager()
        manager.set("threads", 8)
        assert manager.get("threads") == 8
        assert manager.get("missing", "fallback") == "fallback"
        assert manager.get_all()["threads"] == 8


class TestExperimentConfig:
    """Test suite for experiment config parsing"""

    def test_minimal_config(self):
        """Test an experiment name alone is valid and gets default parameters"""
        config = parse_experiment_config({"experiment": "doppler"})
        params = config.typed_parameters()
        assert isinstance(params, DopplerParameters)
        assert params.species == "Rb"
        assert params.detuning_gamma == pytest.approx(-0.5)

    def test_parameters_are_typed(self):
        """Test parameters validate against the experiment's model"""
        config = parse_experiment_config({"experiment": "sideband-cool", "parameters": {"fock_cutoff": 12}})
        params = config.typed_parameters()
        assert isinstance(params, SidebandCoolParameters)
        assert params.fock_cutoff == 12

    def test_unknown_parameter(self):
        """Test a misspelt key is reported with its dotted path"""
        with pytest.raises(ConfigError) as exc_info:
            parse_experiment_config({"experiment": "doppler", "parameters": {"detunng": -0.5}})
        assert exc_info.value.key == "parameters.detunng"
        assert "parameters.detunng" in str(exc_info.value)

    def test_out_of_range_parameter(self):
        """Test constraint violations name the key"""
        with pytest.raises(ConfigError) as exc_info:
            parse_experiment_config({"experiment": "doppler", "parameters": {"saturation": -1.0}})
        assert exc_info.value.key == "parameters.saturation"

    def test_unknown_experiment(self):
        """Test unknown experiment names are rejected"""
        with pytest.raises(ConfigError) as exc_info:
            parse_experiment_config({"experiment": "laser-ablation"})
        assert exc_info.value.key == "experiment"

    def test_unknown_top_level_key(self):
        """Test extra top-level keys are rejected"""
        with pytest.raises(ConfigError, match="outputs"):
            parse_experiment_config({"experiment": "doppler", "outputs": "runs"})

    def test_cross_field_validation(self):
        """Test model validators run on parameters"""
        with pytest.raises(ConfigError, match="delta3_max_gamma"):
            parse_experiment_config(
                {
                    "experiment": "eit-spectrum",
                    "parameters": {"delta3_min_gamma": 1.0, "delta3_max_gamma": -1.0},
                }
            )

    def test_grid_unknown_parameter(self):
        """Test grid.parameter must belong to the experiment"""
        with pytest.raises(ConfigError) as exc_info:
            parse_experiment_config(
                {"experiment": "resistive", "grid": {"parameter": "eta", "values": [0.1]}}
            )
        assert exc_info.value.key == "grid.parameter"

    def test_grid_invalid_point(self):
        """Test every grid value is validated"""
        with pytest.raises(ConfigError) as exc_info:
            parse_experiment_config(
                {"experiment": "resistive", "grid": {"parameter": "resistance_ohm", "values": [1e6, -1.0]}}
            )
        assert exc_info.value.key == "grid.resistance_ohm"


class TestGridSpec:
    """Test suite for sweep grids"""

    def test_values(self):
        """Test explicit values are kept in order"""
        assert GridSpec(parameter="x", values=[3, 1, 2]).points() == [3.0, 1.0, 2.0]

    def test_range(self):
        """Test a linear range includes both ends"""
        assert GridSpec(parameter="x", start=0.0, stop=1.0, num=3).points() == [0.0, 0.5, 1.0]

    @pytest.mark.parametrize(
        "fields",
        [
            {},
            {"values": [1.0], "start": 0.0, "stop": 1.0, "num": 2},
            {"start": 0.0, "stop": 1.0},
            {"values": []},
        ],
    )
    def test_invalid_forms(self, fields):
        """Test a grid needs exactly one complete form"""
        with pytest.raises(ValueError):
            GridSpec(parameter="x", **fields)


class TestLoadExperimentConfig:
    """Test suite for reading config files"""

    def test_load(self, write_config):
        """Test a valid file loads"""
        path = write_config({"experiment": "chain-modes", "parameters": {"num_ions": 3}})
        config = load_experiment_config(path)
        assert config.experiment == "chain-modes"

    def test_missing_file(self, tmp_path):
        """Test a missing file raises ConfigError"""
        with pytest.raises(ConfigError, match="not found"):
            load_experiment_config(tmp_path / "absent.json")

    def test_invalid_json(self, tmp_path):
        """Test malformed JSON raises ConfigError"""
        path = tmp_path / "broken.json"
        path.write_text("{experiment: doppler", encoding="utf-8")
        with pytest.raises(ConfigError, match="not valid JSON"):
            load_experiment_config(path)

    def test_non_object(self, tmp_path):
        """Test a JSON array is rejected"""
        path = tmp_path / "list.json"
        path.write_text(json.dumps(["doppler"]), encoding="utf-8")
        with pytest.raises(ConfigError, match="JSON object"):
            load_experiment_config(path)
