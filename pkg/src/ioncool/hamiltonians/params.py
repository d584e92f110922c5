"""
Pydantic models for drive, trap and three-level parameters
"""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..constants import ATOMIC_MASS, HBAR


class TrapParams(BaseModel):
    """Harmonic trap along the cooled axis"""

    model_config = ConfigDict(frozen=True)

    nu: float = Field(gt=0, description="Secular angular frequency, rad/s")
    mass: float = Field(gt=0, description="Ion mass, kg")

    @property
    def z0(self) -> float:
        """Ground-state extension √(ħ/2mν), m"""
        return math.sqrt(HBAR / (2.0 * self.mass * self.nu))

    @classmethod
    def from_lab_units(cls, nu_hz: float, mass_amu: float) -> "TrapParams":
        return cls(nu=2.0 * math.pi * nu_hz, mass=mass_amu * ATOMIC_MASS)


class LaserDrive(BaseModel):
    """Coherent drive of a two-level transition"""

    model_config = ConfigDict(frozen=True)

    rabi: float = Field(ge=0, description="Rabi frequency Ω, rad/s")
    detuning: float = Field(default=0.0, description="Δ = ω_L − ω_a, rad/s")
    phase: float = Field(default=0.0, description="Laser phase φ, rad")
    ldp: float = Field(default=0.0, ge=0, description="Lamb-Dicke parameter η")


class MagicParams(BaseModel):
    """Effective Lamb-Dicke parameter η_eff = η + iκ = η′e^{iθ}"""

    model_config = ConfigDict(frozen=True)

    eta: float = Field(ge=0)
    kappa: float = Field(ge=0)
    theta: float
    eta_prime: float = Field(ge=0)

    @model_validator(mode="after")
    def _check_polar_form(self) -> "MagicParams":
        expected_prime = math.hypot(self.eta, self.kappa)
        expected_theta = math.atan2(self.kappa, self.eta)
        if not math.isclose(self.eta_prime, expected_prime, rel_tol=1e-12, abs_tol=1e-300):
            raise ValueError(f"eta_prime {self.eta_prime} differs from √(η²+κ²) = {expected_prime}")
        if not math.isclose(self.theta, expected_theta, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError(f"theta {self.theta} differs from atan2(κ, η) = {expected_theta}")
        return self

    @property
    def eta_eff(self) -> complex:
        return complex(self.eta, self.kappa)


class EITConfig(BaseModel):
    """
    Three-level Λ system: |1⟩ and |3⟩ are ground states, |2⟩ decays with total rate Γ

    Frequencies are in units of Γ unless the caller chooses otherwise; only ratios enter.
    """

    model_config = ConfigDict(frozen=True)

    omega1: float = Field(ge=0, description="Drive Rabi frequency Ω₁ on |1⟩↔|2⟩")
    omega3: float = Field(ge=0, description="Probe Rabi frequency Ω₃ on |3⟩↔|2⟩")
    delta1: float = Field(default=0.0, description="Drive detuning Δ₁")
    delta3: float = Field(default=0.0, description="Probe detuning Δ₃")
    gamma: float = Field(default=1.0, gt=0, description="Total decay rate Γ of |2⟩")
    beta: float = Field(default=0.5, ge=0, le=1, description="Branching fraction into |3⟩")

    def with_delta3(self, delta3: float) -> "EITConfig":
        return self.model_copy(update={"delta3": float(delta3)})
