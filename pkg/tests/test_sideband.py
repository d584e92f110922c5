"""
Tests for resolved-sideband cooling and the phonon rate equations
"""

import logging

import numpy as np
import pytest

from ioncool.cooling import (
    cooling_rate_per_phonon,
    sideband_cool,
    sideband_rate_model,
    sideband_transition_rate,
)
from ioncool.exceptions import NumericalError
from ioncool.hamiltonians import LaserDrive, TrapParams
from ioncool.quantum import HilbertSpace, basis_state, thermal_populations

UNIT_TRAP = TrapParams(nu=1.0, mass=1.0)


class TestSidebandCool:
    """Test suite for the sideband cooling master equation"""

    def setup_method(self):
        """Setup test fixtures"""
        self.drive = LaserDrive(rabi=0.1, detuning=-1.0, ldp=0.1)

    def test_short_run_cools(self):
        """Test n̄ drops from a small thermal state"""
        traj = sideband_cool(1.0, self.drive, UNIT_TRAP, 0.05, 0.0, 800.0, fock_cutoff=20, num_points=11)
        n_bar = traj["n_bar"]
        assert n_bar[0] == pytest.approx(1.0, rel=1e-4)
        assert n_bar[-1] < n_bar[5] < n_bar[0]
        assert n_bar[-1] < 0.5
        assert traj.metadata["mode"] == "rwa"
        assert traj["p_n"].shape == (11, 21)

    def test_populations_are_probabilities(self):
        """Test P(n), P(e) and P(g,0) stay in [0, 1]"""
        traj = sideband_cool(1.0, self.drive, UNIT_TRAP, 0.05, 0.0, 200.0, fock_cutoff=15, num_points=5)
        np.testing.assert_allclose(traj["p_n"].sum(axis=1), 1.0, atol=1e-8)
        for name in ["p_excited", "p_ground"]:
            assert np.all(traj[name] >= -1e-9) and np.all(traj[name] <= 1 + 1e-9)

    @pytest.mark.slow
    def test_reference_cooling(self):
        """Test n̄₀ = 5 is cooled below 0.05 within 3500/ν"""
        traj = sideband_cool(5.0, self.drive, UNIT_TRAP, 0.05, 0.0, 3500.0, fock_cutoff=40, num_points=36)
        assert traj["n_bar"][-1] < 0.05
        assert traj["p_ground"][-1] > 0.95
        assert np.all(np.diff(traj["n_bar"]) <= 1e-6)

    def test_ground_state_stays_cold(self):
        """Test |g,0⟩ is dark to the red sideband and stays put"""
        start = basis_state(HilbertSpace(internal_dim=2, fock_cutoff=6), "g", 0)
        traj = sideband_cool(
            0.0, self.drive, UNIT_TRAP, 0.05, 0.0, 2000.0, fock_cutoff=6, initial_state=start, num_points=51
        )
        assert np.max(traj["n_bar"]) < 1e-10
        assert np.min(traj["p_ground"]) > 1.0 - 1e-10

    def test_single_phonon_one_cycle(self):
        """Test |g,1⟩ reaches |g,0⟩ through |e,0⟩ without ever populating n ≥ 2"""
        start = basis_state(HilbertSpace(internal_dim=2, fock_cutoff=6), "g", 1)
        traj = sideband_cool(
            1.0, self.drive, UNIT_TRAP, 0.05, 0.0, 5000.0, fock_cutoff=6, initial_state=start, num_points=51
        )
        assert traj["n_bar"][0] == pytest.approx(1.0)
        assert traj["p_ground"][-1] > 0.999
        assert np.all(np.diff(traj["n_bar"]) <= 1e-6)
        assert np.max(traj["p_n"][:, 2:]) < 1e-10

    def test_heating_limits_cooling(self):
        """Test heating raises the final occupation"""
        cold = sideband_cool(0.5, self.drive, UNIT_TRAP, 0.05, 0.0, 400.0, fock_cutoff=15, num_points=3)
        warm = sideband_cool(0.5, self.drive, UNIT_TRAP, 0.05, 1e-3, 400.0, fock_cutoff=15, num_points=3)
        assert warm["n_bar"][-1] > cold["n_bar"][-1]

    def test_recoil_channels(self):
        """Test cooling still works with emission-recoil channels"""
        traj = sideband_cool(
            0.5, self.drive, UNIT_TRAP, 0.05, 0.0, 100.0, fock_cutoff=12, recoil=True, num_points=3
        )
        assert traj["n_bar"][-1] < 0.5

    def test_full_mode(self):
        """Test the time-dependent first-order interaction runs"""
        traj = sideband_cool(
            0.3, self.drive, UNIT_TRAP, 0.05, 0.0, 30.0, fock_cutoff=8, mode="full", num_points=4
        )
        assert traj.metadata["mode"] == "full"
        assert traj.metadata["integrator"] == "rk"
        assert np.trace(traj.final_state.data).real == pytest.approx(1.0, abs=1e-8)

    def test_truncation_overflow(self):
        """Test strong heating into a tiny Fock space raises NumericalError"""
        with pytest.raises(NumericalError, match="Truncation overflow"):
            sideband_cool(0.0, self.drive, UNIT_TRAP, 0.05, 0.05, 200.0, fock_cutoff=3, num_points=5)

    def test_lamb_dicke_warning(self, caplog):
        """Test a warning outside the Lamb-Dicke regime"""
        drive = LaserDrive(rabi=0.1, detuning=-1.0, ldp=0.5)
        with caplog.at_level(logging.WARNING):
            sideband_cool(1.0, drive, UNIT_TRAP, 0.05, 0.0, 1.0, fock_cutoff=30, num_points=2)
        assert "Lamb-Dicke" in caplog.text

    def test_invalid_mode(self):
        """Test unknown modes raise ValueError"""
        with pytest.raises(ValueError, match="Invalid mode"):
            sideband_cool(1.0, self.drive, UNIT_TRAP, 0.05, 0.0, 10.0, mode="exact")


class TestRateModel:
    """Test suite for the phonon-ladder rate equations"""

    def setup_method(self):
        """Setup test fixtures"""
        self.drive = LaserDrive(rabi=0.1, detuning=-1.0, ldp=0.1)

    def test_weak_drive_rate(self):
        """Test the weak-drive cooling rate (ηΩ)²/Γ"""
        assert cooling_rate_per_phonon(self.drive, 0.05) == pytest.approx(2e-3)

    def test_transition_rate_limits(self):
        """Test the pumping rate saturates at Γ/2 for strong coupling"""
        assert sideband_transition_rate(100.0, 1.0) == pytest.approx(0.5, rel=1e-3)
        assert sideband_transition_rate(0.0, 1.0) == 0.0

    def test_pure_heating(self):
        """Test n̄ grows linearly without cooling"""
        idle = LaserDrive(rabi=0.0, ldp=0.1)
        pops = thermal_populations(0.0, 30)
        traj = sideband_rate_model(pops, idle, 0.05, 0.01, np.linspace(0.0, 10.0, 6))
        np.testing.assert_allclose(traj["n_bar"], 0.01 * traj.times, atol=1e-8)

    def test_cooling_conserves_probability(self):
        """Test the ladder keeps Σ P(n) = 1 while cooling"""
        pops = thermal_populations(2.0, 30)
        traj = sideband_rate_model(pops, self.drive, 0.05, 0.0, np.linspace(0.0, 1000.0, 11))
        np.testing.assert_allclose(traj["p_n"].sum(axis=1), 1.0, atol=1e-8)
        assert traj["n_bar"][-1] < traj["n_bar"][0]
