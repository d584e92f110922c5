"""
Species reference table for the Doppler model
"""

import json
import logging
import math
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..constants import ATOMIC_MASS, ELEMENTARY_CHARGE


logger = logging.getLogger(__name__)

SPECIES_RESOURCE = "data/species.json"


class SpeciesParams(BaseModel):
    """Atom or ion with a closed cooling transition"""

    model_config = ConfigDict(frozen=True)

    name: str
    mass: float = Field(gt=0, description="kg")
    wavelength: float = Field(gt=0, description="Cooling-transition wavelength, m")
    linewidth: float = Field(gt=0, description="Natural linewidth γ, rad/s")
    charge: float = Field(default=0.0, ge=0, description="C")

    @property
    def wavenumber(self) -> float:
        """k = 2π/λ, 1/m"""
        return 2.0 * math.pi / self.wavelength

    @classmethod
    def from_table_entry(cls, name: str, entry: Dict) -> "SpeciesParams":
        return cls(
            name=name,
            mass=float(entry["mass_amu"]) * ATOMIC_MASS,
            wavelength=float(entry["wavelength_nm"]) * 1e-9,
            linewidth=2.0 * math.pi * float(entry["linewidth_mhz"]) * 1e6,
            charge=float(entry.get("charge_e", 0)) * ELEMENTARY_CHARGE,
        )


class SpeciesTable(BaseModel):
    """Versioned collection of species"""

    version: str
    species: Dict[str, SpeciesParams]

    def get(self, name: str) -> SpeciesParams:
        if name not in self.species:
            raise KeyError(f"Unknown species '{name}'. Available: {', '.join(sorted(self.species))}")
        return self.species[name]

    def names(self):
        return sorted(self.species)


def _read_raw(path: Optional[Union[str, Path]]) -> Dict:
    if path is None:
        text = resources.files("ioncool").joinpath(SPECIES_RESOURCE).read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


@lru_cache(maxsize=8)
def _load_cached(path: Optional[str]) -> SpeciesTable:
    raw = _read_raw(path)
    try:
        entries = {
            name: SpeciesParams.from_table_entry(name, entry) for name, entry in raw["species"].items()
        }
        table = SpeciesTable(version=str(raw["version"]), species=entries)
    except (KeyError, TypeError, ValidationError) as e:
        raise ValueError(f"Malformed species table {path or SPECIES_RESOURCE}: {e}") from e
    logger.debug(f"Loaded species table v{table.version} with {len(entries)} entries")
    return table


def load_species_table(path: Optional[Union[str, Path]] = None) -> SpeciesTable:
    """
    Load the bundled species table or a replacement file

    Args:
        path: Optional JSON file with the same layout as the bundled table

    Returns:
        SpeciesTable
    """
    return _load_cached(str(path) if path is not None else None)


def get_species(name: str, path: Optional[Union[str, Path]] = None) -> SpeciesParams:
    return load_species_table(path).get(name)
