"""
Axial normal modes of a linear ion chain

Positions are measured in units of ℓ = (q²/(4πε₀mν²))^{1/3}, in which the
potential reads Σuᵢ²/2 + Σ_{i<j} 1/|uᵢ − uⱼ| and its Hessian gives the mode
frequencies directly in units of the COM frequency ν.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from ..constants import EPSILON_0, NEWTON_MAX_ITERATIONS, NEWTON_TOL
from ..exceptions import NumericalError


logger = logging.getLogger(__name__)

GRADIENT_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class ChainModes:
    """Equilibrium and axial modes of N ions; mode_vectors[i, p] is ion i in mode p"""

    nu: float
    frequencies: np.ndarray
    mode_vectors: np.ndarray
    equilibrium_positions: np.ndarray
    length_scale: float

    @property
    def num_ions(self) -> int:
        return int(self.frequencies.size)

    @property
    def relative_frequencies(self) -> np.ndarray:
        """ν_p/ν"""
        return self.frequencies / self.nu

    @property
    def participation(self) -> np.ndarray:
        """b_ip², each column sums to one"""
        return self.mode_vectors**2


def chain_length_scale(nu: float, mass: float, charge: float) -> float:
    """ℓ = (q²/(4πε₀mν²))^{1/3}, m"""
    return (charge**2 / (4.0 * math.pi * EPSILON_0 * mass * nu**2)) ** (1.0 / 3.0)


def _initial_guess(n: int) -> np.ndarray:
    index = np.arange(1, n + 1)
    return 3.94 * n**0.387 * np.sin(np.arcsin(1.75 * n ** (-0.982) * (index - (n + 1) / 2.0)) / 3.0)


def _pair_terms(u: np.ndarray):
    separation = u[:, None] - u[None, :]
    np.fill_diagonal(separation, np.inf)
    return separation, np.abs(separation)


def potential_gradient(u: np.ndarray) -> np.ndarray:
    """∂V/∂uᵢ of the dimensionless chain potential"""
    separation, distance = _pair_terms(u)
    return u - np.sum(np.sign(separation) / distance**2, axis=1)


def potential_hessian(u: np.ndarray) -> np.ndarray:
    """∂²V/∂uᵢ∂uⱼ of the dimensionless chain potential"""
    _, distance = _pair_terms(u)
    coupling = 2.0 / distance**3
    hessian = -coupling
    np.fill_diagonal(hessian, 1.0 + np.sum(coupling, axis=1))
    return hessian


def equilibrium_positions(n: int) -> np.ndarray:
    """
    Dimensionless equilibrium positions by Newton iteration, ascending

    Raises:
        NumericalError: If the iteration does not converge
    """
    if n < 1:
        raise ValueError(f"Ion count must be at least 1, got {n}")
    if n == 1:
        return np.zeros(1)

    u = _initial_guess(n)
    for iteration in range(NEWTON_MAX_ITERATIONS):
        step = np.linalg.solve(potential_hessian(u), potential_gradient(u))
        u = u - step
        if np.max(np.abs(step)) <= NEWTON_TOL * max(1.0, float(np.max(np.abs(u)))):
            break
    else:
        raise NumericalError(
            f"Chain equilibrium did not converge in {NEWTON_MAX_ITERATIONS} Newton steps (N={n})"
        )

    residual = float(np.max(np.abs(potential_gradient(u))))
    if residual > GRADIENT_TOL or np.any(np.diff(u) <= 0):
        raise NumericalError(
            f"Chain equilibrium for N={n} is not a valid ordered minimum (residual {residual:.3e})"
        )
    logger.debug(f"Chain N={n} converged after {iteration + 1} Newton steps")
    return u


def chain_normal_modes(n: int, nu: float, mass: float, charge: float) -> ChainModes:
    """
    Axial normal modes of N ions in a harmonic trap

    Args:
        n: Number of ions
        nu: COM (single-ion) axial frequency, rad/s
        mass: Ion mass, kg
        charge: Ion charge, C

    Returns:
        ChainModes with ascending frequencies, orthonormal mode vectors and SI positions

    Raises:
        NumericalError: If the equilibrium search fails
    """
    if nu <= 0 or mass <= 0 or charge <= 0:
        raise ValueError("nu, mass and charge must be positive")
    u = equilibrium_positions(n)
    eigenvalues, vectors = np.linalg.eigh(potential_hessian(u) if n > 1 else np.ones((1, 1)))
    if eigenvalues[0] <= 0:
        raise NumericalError(
            f"Chain Hessian is not positive definite (lowest eigenvalue {eigenvalues[0]:.3e})"
        )

    # sign convention: first significant component positive
    for p in range(n):
        leading = vectors[np.argmax(np.abs(vectors[:, p]) > 1e-12), p]
        if leading < 0:
            vectors[:, p] *= -1.0

    scale = chain_length_scale(nu, mass, charge)
    modes = ChainModes(
        nu=nu,
        frequencies=nu * np.sqrt(eigenvalues),
        mode_vectors=vectors,
        equilibrium_positions=u * scale,
        length_scale=scale,
    )
    logger.info(f"Chain modes N={n}: ν_p/ν = {np.array2string(modes.relative_frequencies, precision=6)}")
    return modes
