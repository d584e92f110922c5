"""
Magnetic-gradient-induced coupling (MAGIC) for RF sideband cooling

A static gradient makes the internal resonance frequency position dependent.
Flipping the internal state then shifts the trap minimum, which couples the
RF-driven transition to the motion with an effective Lamb-Dicke parameter
η_eff = η + iκ.
"""

import cmath
import logging
import math
from typing import Tuple

import numpy as np

from ..constants import HBAR
from ..quantum import HilbertSpace, Operator, motional_annihilation
from .params import MagicParams, TrapParams


logger = logging.getLogger(__name__)


def magic_displacement(trap: TrapParams, freq_gradient: float) -> Tuple[float, float]:
    """
    Force on the ion and resulting shift of its equilibrium position

    Args:
        trap: Trap parameters
        freq_gradient: |∂_z ω(z)|, rad/(s·m)

    Returns:
        Tuple of (F = (ħ/2)|∂_z ω| in N, Δz = F/(mν²) in m)
    """
    if freq_gradient < 0:
        raise ValueError(f"freq_gradient must be non-negative, got {freq_gradient}")
    force = 0.5 * HBAR * freq_gradient
    shift = force / (trap.mass * trap.nu**2)
    return force, shift


def magic_kappa(trap: TrapParams, freq_gradient: float, method: str = "direct") -> float:
    """
    Gradient coupling constant κ

    Args:
        trap: Trap parameters
        freq_gradient: |∂_z ω(z)|, rad/(s·m)
        method: "direct" evaluates z₀|∂_z ω|/ν, "displacement" evaluates Δz/z₀

    Returns:
        Dimensionless κ
    """
    if freq_gradient < 0:
        raise ValueError(f"freq_gradient must be non-negative, got {freq_gradient}")
    if method == "direct":
        return trap.z0 * freq_gradient / trap.nu
    if method == "displacement":
        _, shift = magic_displacement(trap, freq_gradient)
        return shift / trap.z0
    raise ValueError(f"Invalid method: {method}. Must be 'direct' or 'displacement'")


def classical_analogy(trap: TrapParams, force: float, duration: float) -> Tuple[float, float]:
    """
    Classical picture of the state-dependent kick

    Returns:
        Tuple of (momentum kick Δp = F·Δt, potential energy ½mν²Δz² of the shifted minimum)
    """
    shift = force / (trap.mass * trap.nu**2)
    return force * duration, 0.5 * trap.mass * trap.nu**2 * shift**2


def effective_ldp(eta: float, kappa: float) -> MagicParams:
    """η_eff = η + iκ in polar form η′e^{iθ}"""
    if eta < 0 or kappa < 0:
        raise ValueError(f"eta and kappa must be non-negative, got ({eta}, {kappa})")
    return MagicParams(
        eta=eta,
        kappa=kappa,
        theta=math.atan2(kappa, eta),
        eta_prime=math.hypot(eta, kappa),
    )


def magic_hamiltonian(
    rabi: float,
    magic: MagicParams,
    detuning: float,
    nu_z: float,
    phi: float,
    t: float,
    space: HilbertSpace,
    hbar: float = 1.0,
) -> Operator:
    """
    First-order MAGIC Hamiltonian in the interaction picture

    H = (ħΩ_R/2)[e^{−i(Δt+φ)} σ₊ (1 + iη_eff(a†e^{iν_z t} + a e^{−iν_z t})) + h.c.]

    Args:
        rabi: RF Rabi frequency Ω_R
        magic: Effective Lamb-Dicke parameter
        detuning: Δ, with Δ = −ν_z addressing the red sideband
        nu_z: Secular frequency of the coupled mode
        phi: RF phase
        t: Time
        space: Two-level composite space
        hbar: Value of ħ

    Returns:
        Hermitian operator at time t
    """
    if space.internal_dim != 2:
        raise ValueError(f"MAGIC Hamiltonian needs internal_dim = 2, got {space.internal_dim}")
    a_m = motional_annihilation(space.fock_cutoff)
    eye = np.eye(space.motional_dim, dtype=complex)
    motional = eye + 1j * magic.eta_eff * (
        a_m.conj().T * cmath.exp(1j * nu_z * t) + a_m * cmath.exp(-1j * nu_z * t)
    )
    sigma_plus = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
    upper = np.kron(sigma_plus, motional) * (0.5 * hbar * rabi * cmath.exp(-1j * (detuning * t + phi)))
    return Operator(space, upper + upper.conj().T)
