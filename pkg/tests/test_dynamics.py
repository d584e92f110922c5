"""
Tests for Schrödinger and Lindblad evolution, steady states and observables
"""

import logging
import math

import numpy as np
import pytest

from ioncool.dynamics import (
    Trajectory,
    check_density_contracts,
    check_population_contracts,
    decay_channel,
    dephasing_channel,
    eit_decay_channels,
    evolve_schrodinger,
    excited_population_operator,
    fit_rabi_frequency,
    heating_channels,
    lindblad_evolve,
    liouvillian,
    output_grid,
    phonon_statistics,
    populations_in_range,
    recoil_channels,
    scattering_rate,
    steady_state,
    steady_state_with_info,
)
from ioncool.exceptions import NumericalError
from ioncool.hamiltonians import (
    EITConfig,
    LaserDrive,
    carrier_hamiltonian,
    conserved_charge,
    get_sideband_hamiltonian,
    rabi_coupling,
    red_sideband_hamiltonian,
)
from ioncool.quantum import (
    HilbertSpace,
    Operator,
    QuantumState,
    basis_state,
    number_operator,
    projector,
    thermal_state,
    transition_operator,
)


class TestSchrodinger:
    """Test suite for evolve_schrodinger"""

    def setup_method(self):
        """Setup test fixtures"""
        self.space = HilbertSpace(internal_dim=2, fock_cutoff=3)
        self.drive = LaserDrive(rabi=0.5)
        self.H = carrier_hamiltonian(self.drive, self.space)
        self.psi0 = basis_state(self.space, "g", 1)
        self.observables = {"p_excited": projector(self.space, 1)}

    def test_carrier_rabi_flop(self):
        """Test P(e) = sin²(Ωt/2) under a static carrier drive"""
        traj = evolve_schrodinger(self.H, self.psi0, (0.0, 20.0), observables=self.observables, num_points=81)
        expected = np.sin(0.25 * traj.times) ** 2
        np.testing.assert_allclose(traj["p_excited"], expected, atol=1e-12)
        assert traj.metadata["method"] == "expm"

    def test_time_dependent_source(self):
        """Test the midpoint integrator agrees with exact propagation"""
        traj = evolve_schrodinger(
            lambda t: self.H, self.psi0, (0.0, 20.0), observables=self.observables, num_points=41
        )
        expected = np.sin(0.25 * traj.times) ** 2
        np.testing.assert_allclose(traj["p_excited"], expected, atol=1e-9)
        assert traj.metadata["method"] == "midpoint"

    def test_norm_preserved(self):
        """Test the final state stays normalized"""
        traj = evolve_schrodinger(self.H, self.psi0, (0.0, 7.3), num_points=11)
        assert np.linalg.norm(traj.final_state.data) == pytest.approx(1.0, abs=1e-12)

    def test_explicit_output_grid(self):
        """Test t_eval sets the sample times"""
        traj = evolve_schrodinger(self.H, self.psi0, (0.0, 4.0), t_eval=[0.0, 1.0, 4.0])
        np.testing.assert_allclose(traj.times, [0.0, 1.0, 4.0])

    def test_rejects_density_matrix(self):
        """Test mixed initial states are refused"""
        with pytest.raises(ValueError, match="pure state"):
            evolve_schrodinger(self.H, self.psi0.to_density(), (0.0, 1.0))

    def test_rejects_non_hermitian(self):
        """Test a non-Hermitian Hamiltonian raises ValueError"""
        bad = transition_operator(self.space, 1, 0)
        with pytest.raises(ValueError, match="not Hermitian"):
            evolve_schrodinger(bad, self.psi0, (0.0, 1.0))

    def test_output_grid_validation(self):
        """Test decreasing spans and out-of-range t_eval are rejected"""
        with pytest.raises(ValueError, match="increasing"):
            output_grid((1.0, 0.0))
        with pytest.raises(ValueError, match="inside t_span"):
            output_grid((0.0, 1.0), t_eval=[0.0, 2.0])


class TestSidebandFlopping:
    """Test suite for coherent dynamics under the resonant sideband Hamiltonians"""

    def setup_method(self):
        """Setup test fixtures"""
        self.space = HilbertSpace(internal_dim=2, fock_cutoff=20)
        self.drive = LaserDrive(rabi=1.0, ldp=0.1)
        self.period = 2.0 * math.pi / (self.drive.ldp * self.drive.rabi)

    @pytest.mark.parametrize(
        "branch, n, expected",
        [
            ("blue", 0, 0.1),
            ("blue", 1, 0.1 * math.sqrt(2)),
            ("blue", 2, 0.1 * math.sqrt(3)),
            ("blue", 3, 0.2),
            ("red", 1, 0.1),
            ("red", 2, 0.1 * math.sqrt(2)),
            ("red", 3, 0.1 * math.sqrt(3)),
        ],
    )
    def test_fitted_sideband_frequency(self, branch, n, expected):
        """Test P(e) from |g,n⟩ oscillates at ηΩ√(n+1) on the blue and ηΩ√n on the red sideband"""
        H = get_sideband_hamiltonian(branch)(self.drive, self.space)
        traj = evolve_schrodinger(
            H,
            basis_state(self.space, "g", n),
            (0.0, 10.0 * 2.0 * math.pi / expected),
            observables={"p_excited": excited_population_operator(self.space)},
            num_points=801,
        )
        assert fit_rabi_frequency(traj.times, traj["p_excited"]) == pytest.approx(expected, rel=1e-3)
        assert expected == pytest.approx(rabi_coupling(n, branch, self.drive))

    def test_red_sideband_blockade(self):
        """Test |g,0⟩ does not move under the red sideband over 20 Rabi periods"""
        H = red_sideband_hamiltonian(self.drive, self.space)
        ground = Operator(self.space, basis_state(self.space, "g", 0).density_matrix())
        traj = evolve_schrodinger(
            H,
            basis_state(self.space, "g", 0),
            (0.0, 20.0 * self.period),
            observables={"p_ground": ground},
            num_points=201,
        )
        assert np.max(1.0 - traj["p_ground"]) < 1e-8

    @pytest.mark.parametrize("branch", ["blue", "red"])
    @pytest.mark.parametrize("static", [True, False])
    def test_conserved_charge_does_not_drift(self, branch, static):
        """Test ⟨a†a ∓ |e⟩⟨e|⟩ stays constant over 10 Rabi periods"""
        H = get_sideband_hamiltonian(branch)(self.drive, self.space)
        vector = basis_state(self.space, "g", 2).data + basis_state(self.space, "e", 4).data
        psi0 = QuantumState.pure(self.space, vector / math.sqrt(2.0))
        traj = evolve_schrodinger(
            H if static else (lambda t: H),
            psi0,
            (0.0, 10.0 * self.period),
            observables={"charge": conserved_charge(self.space, branch)},
            num_points=101,
        )
        charge = traj["charge"]
        assert np.max(np.abs(charge - charge[0])) < 1e-8


class TestLindblad:
    """Test suite for lindblad_evolve"""

    def setup_method(self):
        """Setup test fixtures"""
        self.space = HilbertSpace(internal_dim=2, fock_cutoff=0)
        self.zero = Operator.zero(self.space)
        self.excited = basis_state(self.space, "e", 0)

    @pytest.mark.parametrize("method", ["expm", "rk"])
    def test_spontaneous_decay(self, method):
        """Test P(e) = e^{−Γt} with either propagator"""
        traj = lindblad_evolve(
            self.zero,
            [decay_channel(self.space, 0.3)],
            self.excited,
            (0.0, 10.0),
            observables={"p_excited": projector(self.space, 1)},
            num_points=21,
            method=method,
        )
        np.testing.assert_allclose(traj["p_excited"], np.exp(-0.3 * traj.times), atol=1e-8)
        assert traj.metadata["method"] == method

    def test_dephasing_rate(self):
        """Test coherences decay at the dephasing rate"""
        plus = np.array([1.0, 1.0]) / math.sqrt(2.0)
        rho0 = QuantumState.pure(self.space, plus)
        traj = lindblad_evolve(
            self.zero,
            [dephasing_channel(self.space, 0.2)],
            rho0,
            (0.0, 5.0),
            observables={"coherence": lambda s: s.data[1, 0]},
            num_points=6,
        )
        np.testing.assert_allclose(np.real(traj["coherence"]), 0.5 * np.exp(-0.2 * traj.times), atol=1e-10)

    def test_heating_rate(self):
        """Test d⟨n⟩/dt equals the heating rate away from the cutoff"""
        space = HilbertSpace(internal_dim=2, fock_cutoff=25)
        traj = lindblad_evolve(
            Operator.zero(space),
            heating_channels(space, 0.01),
            basis_state(space, "g", 0),
            (0.0, 10.0),
            observables={"n_bar": number_operator(space)},
            num_points=11,
        )
        np.testing.assert_allclose(traj["n_bar"], 0.01 * traj.times, atol=1e-7)

    def test_trace_and_positivity(self):
        """Test the driven-damped state stays a density matrix"""
        space = HilbertSpace(internal_dim=2, fock_cutoff=4)
        H = carrier_hamiltonian(LaserDrive(rabi=1.0), space)
        rho0 = thermal_state(0.5, space)
        traj = lindblad_evolve(H, [decay_channel(space, 0.5)], rho0, (0.0, 8.0), num_points=9)
        rho = traj.final_state.data
        assert np.trace(rho).real == pytest.approx(1.0, abs=1e-8)
        assert np.min(np.linalg.eigvalsh(rho)) > -1e-8

    def test_expm_needs_static_hamiltonian(self):
        """Test exponential propagation refuses H(t)"""
        with pytest.raises(ValueError, match="time-independent"):
            lindblad_evolve(lambda t: self.zero, [], self.excited, (0.0, 1.0), method="expm")

    def test_channel_space_mismatch(self):
        """Test channels on another space are rejected"""
        other = HilbertSpace(internal_dim=2, fock_cutoff=2)
        with pytest.raises(ValueError, match="acts on"):
            lindblad_evolve(self.zero, [decay_channel(other, 1.0)], self.excited, (0.0, 1.0))

    def test_liouvillian_trace_preserving(self):
        """Test Tr L(ρ) = 0 for an arbitrary matrix"""
        space = HilbertSpace(internal_dim=2, fock_cutoff=2)
        H = carrier_hamiltonian(LaserDrive(rabi=0.7, phase=0.2), space)
        L = liouvillian(H, [decay_channel(space, 0.4), *heating_channels(space, 0.1)])
        rng = np.random.default_rng(3)
        rho = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
        out = (L @ rho.reshape(-1)).reshape(6, 6)
        assert abs(np.trace(out)) < 1e-12

    def test_contract_violation(self):
        """Test check_density_contracts raises NumericalError on trace drift"""
        with pytest.raises(NumericalError, match="Trace drift"):
            check_density_contracts(np.diag([0.7, 0.2]), 1.5)
        with pytest.raises(NumericalError, match="Positivity"):
            check_density_contracts(np.diag([1.2, -0.2]), 0.0)


class TestChannels:
    """Test suite for collapse channels"""

    def setup_method(self):
        """Setup test fixtures"""
        self.space = HilbertSpace(internal_dim=2, fock_cutoff=5)

    def test_negative_rate(self):
        """Test negative rates raise ValueError"""
        with pytest.raises(ValueError, match="non-negative"):
            decay_channel(self.space, -1.0)

    def test_zero_heating_has_no_channels(self):
        """Test zero heating adds nothing"""
        assert heating_channels(self.space, 0.0) == []

    def test_recoil_weights(self):
        """Test recoil channels conserve the total decay rate"""
        channels = recoil_channels(self.space, 1.0, 0.1)
        assert [c.label for c in channels] == ["decay_carrier", "decay_red", "decay_blue"]
        carrier = channels[0].operator.matrix
        element = carrier[self.space.index(0, 0), self.space.index(1, 0)]
        assert abs(element) ** 2 == pytest.approx(1 - 2 * 0.4 * 0.01)

    def test_recoil_requires_small_eta(self):
        """Test the first-order recoil model refuses large η"""
        with pytest.raises(ValueError, match="2αη²"):
            recoil_channels(self.space, 1.0, 1.2)

    def test_eit_branching(self):
        """Test the |2⟩ decay splits into (1−β)Γ and βΓ"""
        channels = eit_decay_channels(EITConfig(omega1=1.0, omega3=0.1, beta=0.25, gamma=2.0))
        rates = {c.label: float(np.sum(np.abs(c.operator.matrix) ** 2)) for c in channels}
        assert rates["decay_2_to_1"] == pytest.approx(1.5)
        assert rates["decay_2_to_3"] == pytest.approx(0.5)

    def test_eit_single_branch(self):
        """Test β = 0 leaves only the decay into |1⟩"""
        channels = eit_decay_channels(EITConfig(omega1=1.0, omega3=0.1, beta=0.0))
        assert [c.label for c in channels] == ["decay_2_to_1"]


class TestSteadyState:
    """Test suite for steady-state solves"""

    def setup_method(self):
        """Setup test fixtures"""
        self.space = HilbertSpace(internal_dim=2, fock_cutoff=0)

    def test_driven_two_level(self):
        """Test ρ_ee = (Ω²/4)/(Δ² + Ω²/2 + Γ²/4)"""
        rabi, detuning, gamma = 0.8, 0.3, 1.0
        H = carrier_hamiltonian(LaserDrive(rabi=rabi), self.space) - projector(self.space, 1) * detuning
        rho = steady_state(H, [decay_channel(self.space, gamma)])
        expected = 0.25 * rabi**2 / (detuning**2 + 0.5 * rabi**2 + 0.25 * gamma**2)
        assert rho.data[1, 1].real == pytest.approx(expected, rel=1e-10)
        assert scattering_rate(rho, gamma, "e") == pytest.approx(gamma * expected, rel=1e-10)

    def test_unique_null_space(self):
        """Test diagnostics report a unique solution"""
        H = carrier_hamiltonian(LaserDrive(rabi=0.5), self.space)
        _, info = steady_state_with_info(H, [decay_channel(self.space, 1.0)])
        assert info.null_dim == 1
        assert not info.degenerate
        assert info.residual < 1e-10

    def test_degenerate_null_space(self, caplog):
        """Test pure dephasing has a degenerate steady state and warns"""
        with caplog.at_level(logging.WARNING):
            rho, info = steady_state_with_info(
                Operator.zero(self.space), [dephasing_channel(self.space, 1.0)]
            )
        assert info.degenerate
        assert info.null_dim == 2
        assert np.trace(rho.data).real == pytest.approx(1.0)
        assert "not unique" in caplog.text

    def test_requires_channels(self):
        """Test a steady state without dissipation is refused"""
        with pytest.raises(ValueError, match="at least one"):
            steady_state(Operator.zero(self.space), [])


class TestObservables:
    """Test suite for trajectories and observable helpers"""

    def test_fit_rabi_frequency(self):
        """Test the fitted frequency of a clean sinusoid"""
        times = np.linspace(0.0, 100.0, 801)
        values = np.sin(0.15 * times) ** 2
        assert fit_rabi_frequency(times, values) == pytest.approx(0.3, rel=1e-6)

    def test_fit_rejects_flat_signal(self):
        """Test a constant population raises ValueError"""
        with pytest.raises(ValueError, match="does not oscillate"):
            fit_rabi_frequency(np.linspace(0, 1, 20), np.zeros(20))

    def test_phonon_statistics(self):
        """Test mean and distribution of a Fock state"""
        space = HilbertSpace(internal_dim=2, fock_cutoff=4)
        n_bar, pops = phonon_statistics(basis_state(space, "e", 3))
        assert n_bar == pytest.approx(3.0)
        np.testing.assert_allclose(pops, [0, 0, 0, 1, 0])

    def test_trajectory_frame_expands_vectors(self):
        """Test vector observables become one column per component"""
        series = {"n_bar": [1.0, 0.5], "p_n": [[0.5, 0.5], [0.7, 0.3]]}
        traj = Trajectory(times=[0.0, 1.0], observables=series)
        frame = traj.to_frame(time_column="t_nu")
        assert list(frame.columns) == ["t_nu", "n_bar", "p_n_0", "p_n_1"]

    def test_trajectory_validates_lengths(self):
        """Test mismatched observable lengths raise ValueError"""
        with pytest.raises(ValueError, match="samples"):
            Trajectory(times=[0.0, 1.0, 2.0], observables={"x": [1.0, 2.0]})

    def test_trajectory_requires_increasing_times(self):
        """Test non-increasing time grids are rejected"""
        with pytest.raises(ValueError, match="strictly increasing"):
            Trajectory(times=[0.0, 0.0])

    def test_populations_in_range(self):
        """Test the [0, 1] check honours its tolerance"""
        assert populations_in_range(np.array([0.0, 0.5, 1.0]))
        assert populations_in_range(np.array([-1e-10, 1.0 + 1e-10]))
        assert not populations_in_range(np.array([0.2, -1e-6]))
        assert not populations_in_range(np.array([1.001]))

    def test_population_contracts(self):
        """Test a population series leaving [0, 1] raises NumericalError naming it"""
        good = Trajectory(times=[0.0, 1.0], observables={"p_n": [[0.5, 0.5], [1.0, 0.0]]})
        check_population_contracts(good, ["p_n"])
        bad = Trajectory(times=[0.0, 1.0], observables={"p_excited": [0.2, -0.01]})
        with pytest.raises(NumericalError, match="p_excited"):
            check_population_contracts(bad, ["p_excited"])

    def test_excited_population_operator(self):
        """Test the excited-level projector on two- and three-level spaces"""
        space = HilbertSpace(internal_dim=2, fock_cutoff=3)
        np.testing.assert_array_equal(excited_population_operator(space).matrix, projector(space, 1).matrix)
        lam = HilbertSpace(internal_dim=3, fock_cutoff=0)
        np.testing.assert_array_equal(excited_population_operator(lam, "2").matrix, projector(lam, 1).matrix)
