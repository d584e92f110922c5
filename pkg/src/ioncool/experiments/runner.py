"""
Experiment runner: single runs, parameter sweeps and the run manifest
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd
from pydantic import BaseModel, ValidationError

from .. import __version__
from ..config.config_manager import config_error_from_validation
from ..config.models import ArtifactRecord, ExperimentConfig, RunManifest
from ..constants import DEFAULT_OUTPUT_DIR, MANIFEST_FILENAME, RESULT_FILENAME, SWEEP_FILENAME
from ..exceptions import ConfigError, IonCoolError
from .base_experiment import BaseExperiment, ExperimentResult, get_experiment
from .writers import file_sha256, write_csv, write_json


logger = logging.getLogger(__name__)


class ExperimentRunner:
    """Runs experiment configs and writes their artifacts"""

    def __init__(
        self, max_workers: int = 1, species_file: Optional[str] = None, output_dir: str = DEFAULT_OUTPUT_DIR
    ):
        """
        Initialize experiment runner

        Args:
            max_workers: Maximum number of worker threads (IONCOOL_THREADS)
            species_file: Alternative species table (optional)
            output_dir: Output directory when neither the config nor the caller names one
        """
        self.max_workers = max(1, int(max_workers))
        self.species_file = species_file
        self.output_dir = output_dir

    def resolve_output_dir(
        self, config: ExperimentConfig, output_dir: Optional[Union[str, Path]] = None
    ) -> Path:
        if output_dir is not None:
            return Path(output_dir)
        if config.output:
            return Path(config.output)
        return Path(self.output_dir)

    def run(self, config: ExperimentConfig, output_dir: Optional[Union[str, Path]] = None) -> RunManifest:
        """
        Run one config and write its artifacts, the manifest last

        Args:
            config: Validated experiment config
            output_dir: Overrides config.output

        Returns:
            RunManifest describing every written file

        Raises:
            ConfigError: If parameters are rejected by the experiment
            NumericalError: On truncation overflow or non-convergence
        """
        started = time.perf_counter()
        out = self.resolve_output_dir(config, output_dir)
        out.mkdir(parents=True, exist_ok=True)
        logger.info(f"Running {config.experiment} → {out}")

        if config.grid is None:
            experiment = get_experiment(config.experiment, self.species_file, self.max_workers)
            result = self._execute(experiment, config.parameters)
            written = self._write_result(result, out)
        else:
            written = self._run_sweep(config, out)

        wall_time = time.perf_counter() - started
        manifest = RunManifest(
            tool_version=__version__,
            experiment=config.experiment,
            config=config.model_dump(mode="json", exclude_none=True),
            artifacts=[self._record(path, out) for path in sorted(written)],
            wall_time_s=wall_time,
        )
        write_json(manifest.model_dump(mode="json"), out / MANIFEST_FILENAME)
        logger.info(f"Finished {config.experiment}: {len(written)} artifacts in {wall_time:.2f} s")
        return manifest

    def _execute(self, experiment: BaseExperiment, parameters: Dict[str, Any]) -> ExperimentResult:
        try:
            params: BaseModel = experiment.parse(parameters)
        except ValidationError as e:
            raise config_error_from_validation(e, prefix="parameters") from e
        try:
            return experiment.run(params)
        except IonCoolError:
            raise
        except (ValueError, KeyError) as e:
            raise ConfigError(f"{experiment.name}: {e}", key="parameters") from e

    def _write_result(self, result: ExperimentResult, out: Path) -> List[Path]:
        written = []
        for filename, frame in sorted(result.tables.items()):
            written.append(write_csv(frame, out / filename))
        written.append(write_json(result.summary, out / RESULT_FILENAME))
        return written

    def _run_sweep(self, config: ExperimentConfig, out: Path) -> List[Path]:
        """Run every grid point on a thread pool; outputs are ordered by grid index"""
        grid = config.grid
        points = grid.points()
        logger.info(f"Sweeping {grid.parameter} over {len(points)} points with {self.max_workers} workers")

        def run_point(value: float) -> ExperimentResult:
            # the pool is spent on grid points, so experiments run single-threaded
            experiment = get_experiment(config.experiment, self.species_file, 1)
            return self._execute(experiment, {**config.parameters, grid.parameter: value})

        results: List[Optional[ExperimentResult]] = [None] * len(points)
        if self.max_workers > 1 and len(points) > 1:
            with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
                future_to_index = {
                    executor.submit(run_point, value): index for index, value in enumerate(points)
                }
                for future in as_completed(future_to_index):
                    index = future_to_index[future]
                    results[index] = future.result()
                    logger.debug(f"Grid point {index} done")
        else:
            results = [run_point(value) for value in points]

        experiment = get_experiment(config.experiment, self.species_file, 1)
        written: List[Path] = []
        rows = []
        for index, (value, result) in enumerate(zip(points, results)):
            written.extend(self._write_result(result, out / f"point_{index:03d}"))
            rows.append({"index": index, grid.parameter: value, **experiment.sweep_row(result)})
        written.append(write_csv(pd.DataFrame(rows), out / SWEEP_FILENAME))
        return written

    @staticmethod
    def _record(path: Path, root: Path) -> ArtifactRecord:
        return ArtifactRecord(
            path=path.relative_to(root).as_posix(),
            sha256=file_sha256(path),
            size_bytes=path.stat().st_size,
        )


def verify_manifest(out: Union[str, Path]) -> List[str]:
    """
    Check that every artifact listed in a manifest exists and matches its hash

    Returns:
        Relative paths that are missing or modified
    """
    out = Path(out)
    manifest = RunManifest.model_validate_json((out / MANIFEST_FILENAME).read_text(encoding="utf-8"))
    problems = []
    for artifact in manifest.artifacts:
        path = out / artifact.path
        if not path.exists() or file_sha256(path) != artifact.sha256:
            problems.append(artifact.path)
    return problems
