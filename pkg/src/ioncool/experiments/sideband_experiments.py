"""
Sideband cooling and Rabi flopping experiments, in units of the trap frequency
"""

import logging

from ..config.models import RabiFlopParameters, SidebandCoolParameters
from ..cooling.sideband import cooling_rate_per_phonon, sideband_cool
from ..dynamics import (
    decay_channel,
    evolve_schrodinger,
    excited_population_operator,
    fit_rabi_frequency,
    lindblad_evolve,
)
from ..hamiltonians import LaserDrive, TrapParams, get_sideband_hamiltonian, rabi_coupling
from ..quantum import HilbertSpace, basis_state, number_operator
from .base_experiment import BaseExperiment, ExperimentResult


logger = logging.getLogger(__name__)

UNIT_TRAP = TrapParams(nu=1.0, mass=1.0)


class SidebandCoolExperiment(BaseExperiment):
    """Thermal mode cooled by a red-sideband drive and an effective decay"""

    name = "sideband-cool"
    description = "Resolved-sideband cooling master equation, n̄(t) and P(n)(t)"

    def run(self, params: SidebandCoolParameters) -> ExperimentResult:
        drive = LaserDrive(rabi=params.rabi_nu, detuning=params.detuning_nu, ldp=params.eta)
        trajectory = sideband_cool(
            initial_nbar=params.initial_nbar,
            drive=drive,
            trap=UNIT_TRAP,
            repump_rate=params.repump_nu,
            heating_rate=params.heating_nu,
            duration=params.duration_nu,
            fock_cutoff=params.fock_cutoff,
            mode=params.mode,
            recoil=params.recoil,
            num_points=params.num_points,
        )
        return ExperimentResult(
            tables={"trajectory.csv": trajectory.to_frame(time_column="t_nu")},
            summary={
                "final_nbar": float(trajectory["n_bar"][-1]),
                "final_ground_population": float(trajectory["p_ground"][-1]),
                "lamb_dicke_factor": trajectory.metadata["lamb_dicke_factor"],
                "weak_drive_rate_per_phonon": cooling_rate_per_phonon(drive, params.repump_nu),
            },
        )


def expected_flop_frequency(branch: str, internal: str, n: int, drive: LaserDrive) -> float:
    """Rabi frequency of the two-state manifold containing |internal, n⟩"""
    if branch == "carrier":
        return drive.rabi
    if internal == "g":
        return rabi_coupling(n, branch, drive)
    # |e,n⟩ pairs with |g,n+1⟩ on the red and |g,n−1⟩ on the blue sideband
    if branch == "red":
        return rabi_coupling(n + 1, "red", drive)
    return rabi_coupling(n - 1, "blue", drive) if n >= 1 else 0.0


class RabiFlopExperiment(BaseExperiment):
    """Coherent oscillation on the carrier or a motional sideband"""

    name = "rabi-flop"
    description = "P(e)(t) on carrier/blue/red from |i,n⟩ with the fitted Rabi frequency"

    def run(self, params: RabiFlopParameters) -> ExperimentResult:
        space = HilbertSpace(internal_dim=2, fock_cutoff=params.fock_cutoff)
        drive = LaserDrive(rabi=params.rabi_nu, ldp=params.eta)
        H = get_sideband_hamiltonian(params.branch)(drive, space)
        initial = basis_state(space, params.initial_internal, params.initial_n)
        observables = {"p_excited": excited_population_operator(space), "n_bar": number_operator(space)}

        if params.decay_nu > 0:
            trajectory = lindblad_evolve(
                H,
                [decay_channel(space, params.decay_nu)],
                initial.to_density(),
                (0.0, params.duration_nu),
                observables=observables,
                num_points=params.num_points,
            )
        else:
            trajectory = evolve_schrodinger(
                H, initial, (0.0, params.duration_nu), observables=observables, num_points=params.num_points
            )

        expected = expected_flop_frequency(params.branch, params.initial_internal, params.initial_n, drive)
        try:
            fitted = fit_rabi_frequency(trajectory.times, trajectory["p_excited"])
        except ValueError:
            logger.info("No population oscillation to fit")
            fitted = 0.0
        logger.info(f"Rabi flop ({params.branch}): fitted ω = {fitted:.6g}, expected {expected:.6g}")
        return ExperimentResult(
            tables={"trajectory.csv": trajectory.to_frame(time_column="t_nu")},
            summary={"fitted_frequency_nu": fitted, "expected_frequency_nu": expected},
        )
