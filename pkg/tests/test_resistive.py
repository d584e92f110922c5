"""
Tests for resistive cooling between parallel plates
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from ioncool.constants import ATOMIC_MASS, ELECTRON_VOLT, ELEMENTARY_CHARGE, K_B
from ioncool.cooling import (
    ResistiveConfig,
    image_charges,
    induced_current,
    resistive_cooling_trajectory,
    resistive_energy,
    resistive_time_constant,
)
from ioncool.cooling.resistive import dissipated_power, energy_rate


class TestResistiveCooling:
    """Test suite for the resistive cooling model"""

    def setup_method(self):
        """Setup test fixtures"""
        self.cfg = ResistiveConfig(
            mass=1.007276 * ATOMIC_MASS,
            charge=ELEMENTARY_CHARGE,
            half_gap=5e-3,
            resistance=1e6,
            initial_energy=ELECTRON_VOLT,
        )

    def test_proton_time_constant(self):
        """Test τ ≈ 6.5 s for a proton with z₀ = 5 mm and R = 1 MΩ"""
        assert resistive_time_constant(self.cfg) == pytest.approx(6.51, rel=0.005)

    def test_doubled_charge(self):
        """Test τ scales as 1/q²"""
        doubled = self.cfg.model_copy(update={"charge": 2 * ELEMENTARY_CHARGE})
        assert resistive_time_constant(doubled) == pytest.approx(resistive_time_constant(self.cfg) / 4)

    def test_energy_after_one_time_constant(self):
        """Test E(τ) = E₀/e"""
        tau = resistive_time_constant(self.cfg)
        assert resistive_energy(self.cfg, tau) == pytest.approx(ELECTRON_VOLT / math.e)

    def test_semigroup(self):
        """Test cooling for t₁ then t₂ equals cooling for t₁ + t₂"""
        e1 = resistive_energy(self.cfg, 2.0)
        restarted = self.cfg.model_copy(update={"initial_energy": e1})
        assert resistive_energy(restarted, 3.0) == pytest.approx(resistive_energy(self.cfg, 5.0), rel=1e-12)

    def test_rate_matches_derivative(self):
        """Test dE/dt = −E/τ at a cold resistor"""
        energy = resistive_energy(self.cfg, 1.0)
        tau = resistive_time_constant(self.cfg)
        assert energy_rate(self.cfg, energy) == pytest.approx(-energy / tau)

    def test_averaged_power(self):
        """Test i²R at ⟨v²⟩ = E/m equals E/τ"""
        energy = self.cfg.initial_energy
        v_rms = math.sqrt(energy / self.cfg.mass)
        power = dissipated_power(self.cfg, v_rms)
        assert power == pytest.approx(energy / resistive_time_constant(self.cfg))

    def test_induced_current(self):
        """Test i = qv/2z₀"""
        assert induced_current(self.cfg, 10.0) == pytest.approx(ELEMENTARY_CHARGE * 10.0 / 1e-2)

    def test_image_charges_sum(self):
        """Test the induced charges add up to q"""
        upper, lower = image_charges(self.cfg, 1e-3)
        assert upper + lower == pytest.approx(ELEMENTARY_CHARGE)
        assert upper > lower

    def test_image_charges_outside_plates(self):
        """Test positions beyond the plates raise ValueError"""
        with pytest.raises(ValueError, match="outside the plates"):
            image_charges(self.cfg, 6e-3)

    def test_warm_resistor_limit(self):
        """Test the energy relaxes to k_B T_R"""
        warm = self.cfg.model_copy(update={"resistor_temperature": 4.0})
        assert resistive_energy(warm, 1e3) == pytest.approx(K_B * 4.0, rel=1e-9)

    def test_trajectory(self):
        """Test the sampled trajectory and its temperature column"""
        traj = resistive_cooling_trajectory(self.cfg, 30.0, num_points=31)
        assert traj.times[-1] == pytest.approx(30.0)
        np.testing.assert_allclose(traj["T_K"], traj["E_J"] / K_B)
        assert traj.metadata["tau_s"] == pytest.approx(resistive_time_constant(self.cfg))

    def test_trajectory_requires_positive_duration(self):
        """Test a zero duration raises ValueError"""
        with pytest.raises(ValueError, match="duration"):
            resistive_cooling_trajectory(self.cfg, 0.0)

    def test_config_validation(self):
        """Test non-positive resistances are rejected"""
        with pytest.raises(ValidationError):
            ResistiveConfig(mass=1.0, charge=1.0, half_gap=1.0, resistance=0.0, initial_energy=1.0)
