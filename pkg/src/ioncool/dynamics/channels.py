"""
Collapse channels for the Lindblad master equation
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..constants import RECOIL_PATTERN_FACTOR
from ..hamiltonians.eit import EIT_SPACE, LEVEL_1, LEVEL_2, LEVEL_3
from ..hamiltonians.params import EITConfig
from ..quantum import HilbertSpace, Operator, internal_operators, ladder_operators, transition_operator


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollapseChannel:
    """Jump operator already scaled by √rate"""

    operator: Operator
    label: str

    def __post_init__(self):
        if not np.all(np.isfinite(self.operator.matrix)):
            raise ValueError(f"Collapse channel '{self.label}' has non-finite entries")

    @property
    def space(self) -> HilbertSpace:
        return self.operator.space


def _check_rate(rate: float, name: str) -> None:
    if rate < 0 or not math.isfinite(rate):
        raise ValueError(f"{name} must be a finite non-negative rate, got {rate}")


def validate_channels(channels: Sequence[CollapseChannel], space: HilbertSpace) -> None:
    """Raise ValueError if any channel lives on a different space"""
    for channel in channels:
        if channel.space != space:
            raise ValueError(f"Channel '{channel.label}' acts on {channel.space}, expected {space}")


def decay_channel(space: HilbertSpace, rate: float) -> CollapseChannel:
    """Spontaneous emission √Γ σ₋ that leaves the motion untouched"""
    _check_rate(rate, "decay rate")
    _, _, sigma_minus = internal_operators(space)
    return CollapseChannel(sigma_minus * math.sqrt(rate), "decay")


def dephasing_channel(space: HilbertSpace, rate: float) -> CollapseChannel:
    """Pure dephasing √(γ/2) σ_z; coherences decay at rate γ"""
    _check_rate(rate, "dephasing rate")
    sigma_z, _, _ = internal_operators(space)
    return CollapseChannel(sigma_z * math.sqrt(0.5 * rate), "dephasing")


def heating_channels(space: HilbertSpace, rate: float) -> List[CollapseChannel]:
    """
    Constant phonon heating at `rate` quanta per unit time

    The pair √r a and √r a† gives d⟨a†a⟩/dt = r away from the truncation edge.
    """
    _check_rate(rate, "heating rate")
    if rate == 0:
        return []
    a, a_dag = ladder_operators(space)
    scale = math.sqrt(rate)
    return [CollapseChannel(a * scale, "heating_down"), CollapseChannel(a_dag * scale, "heating_up")]


def recoil_channels(
    space: HilbertSpace, rate: float, eta: float, alpha: float = RECOIL_PATTERN_FACTOR
) -> List[CollapseChannel]:
    """
    Spontaneous emission with photon recoil to first order in η

    Emission along a random direction projects on the trap axis with mean
    square αη²; that fraction goes into the σ₋a and σ₋a† channels while the
    carrier keeps 1 − 2αη².

    Args:
        space: Two-level composite space
        rate: Total decay rate Γ
        eta: Lamb-Dicke parameter of the emitted photon
        alpha: Mean squared projection of the emission pattern (2/5 for a dipole)

    Returns:
        Carrier, red and blue decay channels
    """
    _check_rate(rate, "decay rate")
    weight = alpha * eta**2
    if 2.0 * weight >= 1.0:
        raise ValueError(f"Recoil model needs 2αη² < 1, got {2.0 * weight:.3f}")
    _, _, sigma_minus = internal_operators(space)
    a, a_dag = ladder_operators(space)
    return [
        CollapseChannel(sigma_minus * math.sqrt(rate * (1.0 - 2.0 * weight)), "decay_carrier"),
        CollapseChannel((sigma_minus @ a) * math.sqrt(rate * weight), "decay_red"),
        CollapseChannel((sigma_minus @ a_dag) * math.sqrt(rate * weight), "decay_blue"),
    ]


def eit_decay_channels(cfg: EITConfig, space: Optional[HilbertSpace] = None) -> List[CollapseChannel]:
    """Decay of |2⟩ with rate (1−β)Γ into |1⟩ and βΓ into |3⟩"""
    space = space or EIT_SPACE
    channels = []
    to_1 = (1.0 - cfg.beta) * cfg.gamma
    to_3 = cfg.beta * cfg.gamma
    if to_1 > 0:
        lower = transition_operator(space, LEVEL_1, LEVEL_2)
        channels.append(CollapseChannel(lower * math.sqrt(to_1), "decay_2_to_1"))
    if to_3 > 0:
        lower = transition_operator(space, LEVEL_3, LEVEL_2)
        channels.append(CollapseChannel(lower * math.sqrt(to_3), "decay_2_to_3"))
    return channels
