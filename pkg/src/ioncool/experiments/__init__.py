"""
Runnable experiments, artifact writers and the sweep runner
"""

from .base_experiment import BaseExperiment, ExperimentResult, get_experiment
from .runner import ExperimentRunner, verify_manifest
from .writers import file_sha256, to_jsonable, write_csv, write_json

__all__ = [
    "BaseExperiment", "ExperimentResult", "get_experiment",
    "ExperimentRunner", "verify_manifest",
    "write_csv", "write_json", "file_sha256", "to_jsonable",
]
