"""
Three-level Λ system for dark resonances

Basis order |1⟩, |2⟩, |3⟩ with |2⟩ the decaying level. In the rotating frame |1⟩
sits at 0, |2⟩ at −Δ₁ and |3⟩ at Δ₃ − Δ₁; the frame only shifts the diagonal, so
absorption observables do not depend on it.
"""

import logging
import math
from typing import Optional, Tuple

import numpy as np

from ..quantum import HilbertSpace, Operator
from .params import EITConfig


logger = logging.getLogger(__name__)

EIT_SPACE = HilbertSpace(internal_dim=3, fock_cutoff=0)
LEVEL_1, LEVEL_2, LEVEL_3 = 0, 1, 2


def eit_hamiltonian(cfg: EITConfig, space: Optional[HilbertSpace] = None, hbar: float = 1.0) -> Operator:
    """
    Semiclassical rotating-frame Hamiltonian

    H/ħ = −Δ₁|2⟩⟨2| + (Δ₃−Δ₁)|3⟩⟨3| + (Ω₁/2)(|1⟩⟨2| + h.c.) + (Ω₃/2)(|2⟩⟨3| + h.c.)

    Raises:
        ValueError: If the space is not the bare three-level space
    """
    space = space or EIT_SPACE
    if space.internal_dim != 3 or space.fock_cutoff != 0:
        raise ValueError(f"EIT Hamiltonian needs a three-level space without motion, got {space}")
    h = np.zeros((3, 3), dtype=complex)
    h[LEVEL_2, LEVEL_2] = -cfg.delta1
    h[LEVEL_3, LEVEL_3] = cfg.delta3 - cfg.delta1
    h[LEVEL_1, LEVEL_2] = h[LEVEL_2, LEVEL_1] = 0.5 * cfg.omega1
    h[LEVEL_2, LEVEL_3] = h[LEVEL_3, LEVEL_2] = 0.5 * cfg.omega3
    return Operator(space, hbar * h)


def dressed_states(omega1: float, delta1: float) -> Tuple[np.ndarray, np.ndarray]:
    """
    Eigenpairs of the drive-coupled {|1⟩, |2⟩} block

    Args:
        omega1: Drive Rabi frequency Ω₁
        delta1: Drive detuning Δ₁

    Returns:
        Tuple of (energies ascending, states as columns in the {|1⟩, |2⟩} basis).
        The splitting is √(Δ₁² + Ω₁²).
    """
    block = np.array([[0.0, 0.5 * omega1], [0.5 * omega1, -delta1]])
    energies, states = np.linalg.eigh(block)
    # fix the sign so the |1⟩ amplitude is non-negative
    signs = np.where(states[0, :] < 0, -1.0, 1.0)
    return energies, states * signs[None, :]


def eit_dark_state(cfg: EITConfig) -> np.ndarray:
    """Normalized dark state ∝ Ω₃|1⟩ − Ω₁|3⟩"""
    norm = math.hypot(cfg.omega1, cfg.omega3)
    if norm == 0:
        raise ValueError("Dark state is undefined when both Rabi frequencies vanish")
    vec = np.zeros(3, dtype=complex)
    vec[LEVEL_1] = cfg.omega3 / norm
    vec[LEVEL_3] = -cfg.omega1 / norm
    return vec


def eit_light_shift(omega1: float, delta1: float) -> float:
    """
    Distance of the narrow resonance from the dark point

    δ = (√(Δ₁² + Ω₁²) − |Δ₁|)/2; the narrow peak sits at Δ₃ = Δ₁ + sign(Δ₁)·δ.
    """
    return 0.5 * (math.hypot(delta1, omega1) - abs(delta1))


def eit_cooling_design(nu: float, omega1: float) -> float:
    """
    Drive detuning Δ₁ ≥ 0 that puts the narrow resonance one trap frequency above the dark point

    Solves eit_light_shift(Ω₁, Δ₁) = ν, giving Δ₁ = (Ω₁² − 4ν²)/(4ν).

    Raises:
        ValueError: If Ω₁ < 2ν (the light shift can never reach ν)
    """
    if nu <= 0:
        raise ValueError(f"nu must be positive, got {nu}")
    if omega1 < 2.0 * nu:
        raise ValueError(f"Drive Ω₁={omega1} too weak: light shift ≤ Ω₁/2 cannot reach ν={nu}")
    return (omega1**2 - 4.0 * nu**2) / (4.0 * nu)
