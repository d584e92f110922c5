"""
Pytest configuration and fixtures
"""
import json
import os
import sys
from pathlib import Path

import pytest

# Add src directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Drop IONCOOL_* variables so settings come from defaults"""
    for key in list(os.environ):
        if key.startswith("IONCOOL_"):
            monkeypatch.delenv(key, raising=False)


@pytest.fixture
def isolated_dir(tmp_path, monkeypatch):
    """Run inside an empty directory without a .env file"""
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture
def write_config(tmp_path):
    """Write an experiment config to a JSON file and return its path"""

    def _write(data, name="config.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data, indent=2), encoding="utf-8")
        return path

    return _write


@pytest.fixture
def small_eit_config():
    """Coarse EIT spectrum that still resolves the dark resonance"""
    return {
        "experiment": "eit-spectrum",
        "parameters": {
            "omega1_gamma": 1.0,
            "omega3_gamma": 0.01,
            "delta1_gamma": 0.0,
            "delta3_min_gamma": -1.0,
            "delta3_max_gamma": 1.0,
            "num_points": 201,
        },
    }
