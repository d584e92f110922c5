"""
One-dimensional two-beam Doppler cooling model

The ensemble is a thermal velocity distribution of width σ = √(k_B T/m). The
thermal averages of the Lorentzian scattering rates are evaluated in closed
form through the Faddeeva function, so the temperature ODE needs no quadrature.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq, minimize_scalar
from scipy.special import wofz

from ..constants import (
    DEFAULT_DETUNING_LINEWIDTHS,
    DEFAULT_EMISSION_PROJECTION,
    DEFAULT_SATURATION,
    HBAR,
    K_B,
)
from ..dynamics.observables import Trajectory
from .species import SpeciesParams


logger = logging.getLogger(__name__)

DOPPLER_CONVERGENCE_TOL = 0.05


@dataclass(frozen=True, eq=False)
class DopplerResult:
    """Temperature trajectory with its equilibrium and the Doppler limit"""

    trajectory: Trajectory
    equilibrium_T: Optional[float]
    doppler_limit_T: float
    converged: bool
    detuning: float
    saturation: float

    @property
    def final_T(self) -> float:
        return float(self.trajectory["T_K"][-1])


def doppler_limit(species: SpeciesParams) -> float:
    """Doppler temperature T = ħγ/(2k_B), K"""
    return HBAR * species.linewidth / (2.0 * K_B)


def doppler_force(v, detuning: float, sat: float, species: SpeciesParams):
    """
    Scattering force of two counter-propagating beams

    F(v) = (ħkγ/2)[s₀/(1+s₀+(2(Δ−kv)/γ)²) − s₀/(1+s₀+(2(Δ+kv)/γ)²)]

    Args:
        v: Velocity, m/s (scalar or array)
        detuning: Δ, rad/s
        sat: Saturation parameter s₀ per beam
        species: Cooled species

    Returns:
        Force in N, same shape as v
    """
    if sat < 0:
        raise ValueError(f"Saturation parameter must be non-negative, got {sat}")
    k, gamma = species.wavenumber, species.linewidth
    v = np.asarray(v, dtype=float)
    plus = sat / (1.0 + sat + (2.0 * (detuning - k * v) / gamma) ** 2)
    minus = sat / (1.0 + sat + (2.0 * (detuning + k * v) / gamma) ** 2)
    force = 0.5 * HBAR * k * gamma * (plus - minus)
    return float(force) if force.ndim == 0 else force


def doppler_friction_slope(detuning: float, sat: float, species: SpeciesParams) -> float:
    """dF/dv at v = 0: 8ħk²s₀Δ / (γ(1+s₀+(2Δ/γ)²)²), kg/s"""
    k, gamma = species.wavenumber, species.linewidth
    denominator = 1.0 + sat + (2.0 * detuning / gamma) ** 2
    return 8.0 * HBAR * k**2 * sat * detuning / (gamma * denominator**2)


def _beam_averages(v0: float, c: float, amplitude: float, sigma: float) -> Tuple[float, float]:
    """
    Gaussian averages ⟨L⟩ and ⟨vL⟩ of L(v) = amplitude/((v − v0)² + c²)

    With z = (v0 + ic)/(σ√2) = x + iy the averages are
    ⟨L⟩ = amplitude·√π Re w(z)/(2σ²y) and ⟨vL⟩ = amplitude·√π (x Re w − y Im w)/(√2 σ y).
    """
    scale = sigma * math.sqrt(2.0)
    x, y = v0 / scale, c / scale
    w = wofz(complex(x, y))
    mean = amplitude * math.sqrt(math.pi) * w.real / (2.0 * sigma**2 * y)
    mean_v = amplitude * math.sqrt(math.pi) * (x * w.real - y * w.imag) / (scale * y)
    return mean, mean_v


def thermal_rates(
    temperature: float, detuning: float, sat: float, species: SpeciesParams
) -> Tuple[float, float]:
    """
    Thermal averages of the two-beam scattering rate and of the cooling power

    Returns:
        Tuple of (⟨R_sc⟩ in 1/s, ⟨F·v⟩ in W)
    """
    if temperature <= 0:
        raise ValueError(f"Temperature must be positive, got {temperature}")
    k, gamma = species.wavenumber, species.linewidth
    sigma = math.sqrt(K_B * temperature / species.mass)
    width = gamma * math.sqrt(1.0 + sat) / (2.0 * k)
    amplitude = 0.5 * gamma * sat * gamma**2 / (4.0 * k**2)
    rate_1, v_rate_1 = _beam_averages(detuning / k, width, amplitude, sigma)
    rate_2, v_rate_2 = _beam_averages(-detuning / k, width, amplitude, sigma)
    scattering = rate_1 + rate_2
    power = HBAR * k * (v_rate_1 - v_rate_2)
    return scattering, power


def energy_rate(
    temperature: float,
    detuning: float,
    sat: float,
    species: SpeciesParams,
    emission_projection: float = DEFAULT_EMISSION_PROJECTION,
) -> float:
    """
    d⟨E⟩/dt = ⟨F·v⟩ + (1+ξ)ħ²k²⟨R_sc⟩/2m

    The absorption kick always lies on the beam axis; ξ is the mean squared
    projection of the emission kick on that axis.
    """
    scattering, power = thermal_rates(temperature, detuning, sat, species)
    recoil = (1.0 + emission_projection) * (HBAR * species.wavenumber) ** 2 / (2.0 * species.mass)
    return power + recoil * scattering


def equilibrium_temperature(
    detuning: float,
    sat: float,
    species: SpeciesParams,
    emission_projection: float = DEFAULT_EMISSION_PROJECTION,
) -> Optional[float]:
    """
    Lowest stable fixed point of the temperature equation, K

    Scans a logarithmic temperature grid for the first heating-to-cooling sign
    change and refines it with Brent's method. Returns None when the light only
    heats (blue detuning) within the scanned range.
    """
    t_ref = doppler_limit(species)
    grid = np.geomspace(1e-3 * t_ref, 1e8 * t_ref, 221)
    values = np.array([energy_rate(t, detuning, sat, species, emission_projection) for t in grid])
    crossings = np.nonzero((values[:-1] > 0) & (values[1:] <= 0))[0]
    if crossings.size == 0:
        return None
    i = int(crossings[0])
    return float(
        brentq(
            lambda t: energy_rate(t, detuning, sat, species, emission_projection),
            grid[i],
            grid[i + 1],
            xtol=1e-15,
            rtol=1e-12,
        )
    )


def doppler_cool_trajectory(
    T0: float,
    detuning: float,
    sat: float,
    species: SpeciesParams,
    t_span: Tuple[float, float],
    emission_projection: float = DEFAULT_EMISSION_PROJECTION,
    num_points: int = 201,
) -> DopplerResult:
    """
    Integrate the kinetic temperature of a thermal ensemble under Doppler light

    In 1-D ⟨E⟩ = ½k_B T, so dT/dt = (2/k_B) d⟨E⟩/dt. The ODE is solved for ln T
    with an implicit method since relaxation near equilibrium is much faster
    than the capture of a hot ensemble.

    Args:
        T0: Initial temperature, K
        detuning: Δ, rad/s
        sat: Saturation parameter per beam
        species: Cooled species
        t_span: (t0, t1) in s
        emission_projection: ξ, emission-recoil projection on the axis
        num_points: Output samples

    Returns:
        DopplerResult; converged is False when the final temperature is not
        within 5% of the equilibrium
    """
    if T0 <= 0:
        raise ValueError(f"Initial temperature must be positive, got {T0}")
    if not t_span[1] > t_span[0]:
        raise ValueError(f"t_span must be increasing, got {t_span}")

    def rhs(_t, y):
        temperature = math.exp(y[0])
        d_temperature = 2.0 / K_B * energy_rate(temperature, detuning, sat, species, emission_projection)
        return [d_temperature / temperature]

    times = np.linspace(float(t_span[0]), float(t_span[1]), num_points)
    solution = solve_ivp(
        rhs,
        (float(t_span[0]), float(t_span[1])),
        [math.log(T0)],
        method="LSODA",
        t_eval=times,
        rtol=1e-10,
        atol=1e-12,
    )
    if not solution.success:
        logger.warning(f"Doppler integration stopped early: {solution.message}")
        times = solution.t
    temperatures = np.exp(solution.y[0])

    limit = doppler_limit(species)
    equilibrium = equilibrium_temperature(detuning, sat, species, emission_projection)
    converged = bool(
        solution.success
        and equilibrium is not None
        and abs(temperatures[-1] / equilibrium - 1.0) < DOPPLER_CONVERGENCE_TOL
    )
    if not converged:
        logger.warning(
            f"Doppler cooling did not reach equilibrium in {t_span[1] - t_span[0]:.3g} s "
            f"(final T = {temperatures[-1]:.4g} K, equilibrium = {equilibrium})"
        )
    else:
        logger.info(f"Doppler cooling converged to {temperatures[-1]:.4g} K (limit {limit:.4g} K)")

    trajectory = Trajectory(
        times=times,
        observables={"T_K": temperatures, "E_J": 0.5 * K_B * temperatures},
        metadata={"species": species.name},
    )
    return DopplerResult(
        trajectory=trajectory,
        equilibrium_T=equilibrium,
        doppler_limit_T=limit,
        converged=converged,
        detuning=detuning,
        saturation=sat,
    )


def optimal_detuning(
    species: SpeciesParams,
    sat: float = DEFAULT_SATURATION,
    emission_projection: float = DEFAULT_EMISSION_PROJECTION,
) -> Tuple[float, float]:
    """
    Red detuning that minimizes the equilibrium temperature

    Returns:
        Tuple of (Δ in rad/s, equilibrium temperature in K)
    """
    gamma = species.linewidth

    def objective(x: float) -> float:
        temperature = equilibrium_temperature(x * gamma, sat, species, emission_projection)
        return math.inf if temperature is None else temperature

    result = minimize_scalar(objective, bounds=(-5.0, -0.01), method="bounded", options={"xatol": 1e-6})
    return float(result.x * gamma), float(result.fun)


def default_detuning(species: SpeciesParams) -> float:
    """Δ = −γ/2"""
    return DEFAULT_DETUNING_LINEWIDTHS * species.linewidth
