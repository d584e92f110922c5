"""
Tests for EIT absorption spectra and cooling assessment
"""

import numpy as np
import pytest

from ioncool.cooling import eit_absorption_spectrum, eit_cooling_assess
from ioncool.hamiltonians import EITConfig, eit_cooling_design, eit_light_shift


class TestAbsorptionSpectrum:
    """Test suite for the dark-resonance spectrum"""

    def setup_method(self):
        """Setup test fixtures"""
        self.cfg = EITConfig(omega1=1.0, omega3=0.01, delta1=0.0)
        self.grid = np.linspace(-1.0, 1.0, 201)

    def test_dark_resonance_on_two_photon_resonance(self):
        """Test absorption vanishes at Δ₃ = Δ₁ between Autler-Townes peaks at ±Ω₁/2"""
        spectrum = eit_absorption_spectrum(self.cfg, self.grid)
        assert spectrum.minimum() == pytest.approx(0.0, abs=0.003)
        peaks = np.sort(spectrum.peaks())
        assert len(peaks) == 2
        np.testing.assert_allclose(peaks, [-0.5, 0.5], atol=0.01)

    def test_dark_point_on_fine_grid(self):
        """Test the 2001-point spectrum: a dark point below 1e-6, peaks at ±0.5 and mirror symmetry"""
        grid = np.linspace(-1.0, 1.0, 2001)
        spectrum = eit_absorption_spectrum(self.cfg, grid)
        norm = spectrum.absorption_norm
        assert abs(grid[1000]) < 1e-15
        assert norm[1000] < 1e-6
        np.testing.assert_allclose(np.sort(spectrum.peaks()), [-0.5, 0.5], atol=0.02)
        np.testing.assert_allclose(norm, norm[::-1], atol=1e-6)

    def test_dark_point_never_negative(self):
        """Test the scattering rate on exact two-photon resonance is clamped at zero"""
        spectrum = eit_absorption_spectrum(self.cfg, [-0.5, 0.0, 0.5])
        assert spectrum.absorption[1] >= 0.0
        assert spectrum.absorption_norm[1] < 1e-6

    @pytest.mark.parametrize(
        "omega1, beta, delta1",
        [(1.0, 0.5, 0.0), (1.0, 0.5, 1.0), (2.0, 0.3, -0.5), (0.5, 0.8, 2.4), (1.5, 0.9, 0.7)],
    )
    def test_dark_point_at_two_photon_resonance(self, omega1, beta, delta1):
        """Test absorption at Δ₃ = Δ₁ stays below 1e-6 of the peak for any drive and branching"""
        cfg = EITConfig(omega1=omega1, omega3=0.05, delta1=delta1, beta=beta)
        grid = delta1 + np.linspace(-2.0, 2.0, 401)
        spectrum = eit_absorption_spectrum(cfg, grid)
        assert spectrum.absorption_norm[200] < 1e-6

    def test_normalized_absorption(self):
        """Test the normalized column peaks at one and stays non-negative"""
        spectrum = eit_absorption_spectrum(self.cfg, self.grid)
        assert spectrum.absorption_norm.max() == pytest.approx(1.0)
        assert np.all(spectrum.absorption_norm >= 0.0)

    def test_detuned_drive_narrow_peak(self):
        """Test a detuned drive moves the dark point and opens a narrow resonance beside it"""
        cfg = EITConfig(omega1=1.0, omega3=0.01, delta1=1.0)
        spectrum = eit_absorption_spectrum(cfg, np.linspace(0.5, 1.5, 1001))
        assert spectrum.minimum() == pytest.approx(1.0, abs=0.002)
        expected = 1.0 + eit_light_shift(1.0, 1.0)
        assert expected == pytest.approx(1.207, abs=1e-3)
        assert np.any(np.abs(spectrum.peaks() - expected) < 0.01)

    def test_stronger_omega3_detuned_drive(self):
        """Test Ω₃ = 0.2 with Δ₁ = 1 keeps the zero at Δ₃ = 1.00"""
        cfg = EITConfig(omega1=1.0, omega3=0.2, delta1=1.0, beta=0.5)
        spectrum = eit_absorption_spectrum(cfg, np.linspace(-1.0, 3.0, 2001))
        assert spectrum.minimum() == pytest.approx(1.0, abs=0.01)
        assert spectrum.value_at(1.0) < 1e-6

    def test_threaded_matches_serial(self):
        """Test the thread pool returns points in grid order"""
        grid = np.linspace(-0.6, 0.6, 13)
        serial = eit_absorption_spectrum(self.cfg, grid)
        threaded = eit_absorption_spectrum(self.cfg, grid, max_workers=4)
        np.testing.assert_allclose(threaded.absorption, serial.absorption, rtol=1e-12)

    def test_to_frame(self):
        """Test the table columns"""
        frame = eit_absorption_spectrum(self.cfg, self.grid[:5]).to_frame()
        assert list(frame.columns) == ["delta3", "absorption_norm"]
        assert len(frame) == 5

    @pytest.mark.parametrize("grid", [[], [[0.0, 1.0]], [0.0, float("nan")]])
    def test_invalid_grid(self, grid):
        """Test empty, nested and non-finite grids raise ValueError"""
        with pytest.raises(ValueError, match="delta3_grid"):
            eit_absorption_spectrum(self.cfg, grid)

    def test_value_at_coarse_grid(self):
        """Test interpolation refuses samples further than 0.02Γ away"""
        spectrum = eit_absorption_spectrum(self.cfg, [-1.0, 0.0, 1.0])
        with pytest.raises(ValueError, match="too coarse"):
            spectrum.value_at(0.5)


class TestCoolingAssessment:
    """Test suite for sideband selectivity of a spectrum"""

    def setup_method(self):
        """Setup test fixtures"""
        self.nu = 0.1
        self.delta1 = eit_cooling_design(self.nu, 1.0)
        cfg = EITConfig(omega1=1.0, omega3=0.01, delta1=self.delta1)
        self.spectrum = eit_absorption_spectrum(cfg, np.linspace(2.0, 3.0, 1001))

    def test_designed_detuning(self):
        """Test the design places the narrow peak one trap frequency above the carrier"""
        assert self.delta1 == pytest.approx(2.4)
        assert eit_light_shift(1.0, self.delta1) == pytest.approx(self.nu)

    def test_red_sideband_favoured(self):
        """Test the carrier sits in the dark point while the red sideband hits the narrow peak"""
        figure = eit_cooling_assess(self.spectrum, self.nu, self.delta1)
        assert figure.a_red > 0.5
        assert figure.a_carrier < 0.01
        assert figure.ratio > 5

    def test_heating_placement_warns(self, caplog):
        """Test a carrier on the narrow peak is reported as heating"""
        with caplog.at_level("WARNING"):
            figure = eit_cooling_assess(self.spectrum, self.nu, self.delta1 + 0.2)
        assert figure.ratio < 1
        assert "favours heating" in caplog.text

    def test_invalid_nu(self):
        """Test a non-positive trap frequency raises ValueError"""
        with pytest.raises(ValueError, match="nu"):
            eit_cooling_assess(self.spectrum, 0.0, self.delta1)
