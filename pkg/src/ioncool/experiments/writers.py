"""
Deterministic artifact writers for CSV tables and JSON summaries
"""

import hashlib
import json
import logging
import math
from pathlib import Path
from typing import Any, Dict

import numpy as np
import pandas as pd

from ..constants import CSV_FLOAT_FORMAT, CSV_LINE_TERMINATOR


logger = logging.getLogger(__name__)


def to_jsonable(value: Any) -> Any:
    """
    Convert numpy scalars and arrays to plain JSON types

    Non-finite floats become the strings "inf", "-inf" and "nan" so the
    output stays strict JSON.
    """
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if isinstance(value, (np.floating, float)):
        value = float(value)
        if math.isfinite(value):
            return value
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")
    return value


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write a table with a header row, Unix newlines and 17 significant digits"""
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, float_format=CSV_FLOAT_FORMAT, lineterminator=CSV_LINE_TERMINATOR, index=False)
    logger.debug(f"Wrote {len(frame)} rows to {path}")
    return path


def write_json(data: Dict[str, Any], path: Path) -> Path:
    """Write a JSON object with sorted keys and a trailing newline"""
    path.parent.mkdir(parents=True, exist_ok=True)
    text = json.dumps(to_jsonable(data), indent=2, sort_keys=True, ensure_ascii=False)
    path.write_text(text + "\n", encoding="utf-8", newline="\n")
    logger.debug(f"Wrote {path}")
    return path


def file_sha256(path: Path) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()
