"""
Resolved-sideband cooling of a single motional mode
"""

import logging
import math
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp

from ..constants import (
    LAMB_DICKE_WARNING_THRESHOLD,
    RK_ATOL,
    RK_RTOL,
    TRUNCATION_OVERFLOW_THRESHOLD,
    VALID_SIDEBAND_MODES,
)
from ..dynamics import (
    check_population_contracts,
    decay_channel,
    excited_population_operator,
    heating_channels,
    lindblad_evolve,
    phonon_populations,
    recoil_channels,
)
from ..dynamics.observables import Trajectory
from ..exceptions import NumericalError
from ..hamiltonians import (
    FullInteractionHamiltonian,
    LaserDrive,
    TrapParams,
    lamb_dicke_factor,
    red_sideband_hamiltonian,
)
from ..quantum import (
    HilbertSpace,
    Operator,
    QuantumState,
    basis_state,
    number_operator,
    thermal_state,
)


logger = logging.getLogger(__name__)


def sideband_cool(
    initial_nbar: float,
    drive: LaserDrive,
    trap: TrapParams,
    repump_rate: float,
    heating_rate: float,
    duration: float,
    fock_cutoff: int = 40,
    mode: str = "rwa",
    recoil: bool = False,
    num_points: int = 201,
    initial_state: Optional[QuantumState] = None,
    hbar: float = 1.0,
) -> Trajectory:
    """
    Red-sideband drive plus effective spontaneous decay acting on a thermal mode

    In "rwa" mode the Hamiltonian is the Jaynes–Cummings coupling with the
    residual sideband detuning δ = Δ + ν on the excited level. "full" mode
    keeps the time-dependent first-order interaction, which includes the
    off-resonant carrier and blue sideband.

    Args:
        initial_nbar: Mean phonon number of the initial thermal state (internal |g⟩)
        drive: Laser drive; Δ = −ν addresses the red sideband
        trap: Trap parameters (ν)
        repump_rate: Effective decay rate Γ_eff of the excited level
        heating_rate: Constant phonon heating, quanta per unit time
        duration: Cooling time
        fock_cutoff: Highest Fock state kept
        mode: "rwa" or "full"
        recoil: Add first-order emission-recoil channels
        num_points: Output samples
        initial_state: Overrides the thermal initial state
        hbar: Value of ħ

    Returns:
        Trajectory with n_bar, p_n (P(n) per sample), p_excited and p_ground

    Raises:
        NumericalError: If population leaks into the top Fock level beyond 1e−4
    """
    if mode not in VALID_SIDEBAND_MODES:
        raise ValueError(f"Invalid mode: {mode}. Must be one of {VALID_SIDEBAND_MODES}")
    if duration <= 0:
        raise ValueError(f"duration must be positive, got {duration}")
    space = HilbertSpace(internal_dim=2, fock_cutoff=fock_cutoff)

    if initial_state is None:
        rho0 = thermal_state(initial_nbar, space, "g")
    else:
        if initial_state.space != space:
            raise ValueError(f"initial_state lives on {initial_state.space}, expected {space}")
        rho0 = initial_state.to_density()
    start_nbar = float(np.real(np.trace(rho0.data @ number_operator(space).matrix)))

    ld_factor = lamb_dicke_factor(drive.ldp, start_nbar)
    if ld_factor > LAMB_DICKE_WARNING_THRESHOLD:
        logger.warning(f"Outside the Lamb-Dicke regime: η√(2n̄+1) = {ld_factor:.3f}")

    initial_top = float(phonon_populations(rho0)[-1])
    if initial_top > TRUNCATION_OVERFLOW_THRESHOLD:
        logger.warning(
            f"Initial population {initial_top:.3e} in Fock level {fock_cutoff} exceeds "
            f"{TRUNCATION_OVERFLOW_THRESHOLD:g}; consider a larger cutoff"
        )

    if mode == "rwa":
        sideband_detuning = drive.detuning + trap.nu
        excited = excited_population_operator(space)
        H = red_sideband_hamiltonian(drive, space, hbar) - excited * (hbar * sideband_detuning)
    else:
        H = FullInteractionHamiltonian(drive, trap, space, order="first_order", hbar=hbar)

    if recoil:
        channels = recoil_channels(space, repump_rate, drive.ldp)
    else:
        channels = [decay_channel(space, repump_rate)]
    channels += heating_channels(space, heating_rate)

    ground = basis_state(space, "g", 0).to_density()
    observables = {
        "n_bar": number_operator(space),
        "p_excited": excited_population_operator(space),
        "p_ground": Operator(space, ground.data),
        "p_n": phonon_populations,
    }
    logger.info(
        f"Sideband cooling ({mode}): n̄0={start_nbar:.4g}, η={drive.ldp:g}, Ω={drive.rabi:g}, "
        f"Γ={repump_rate:g}, heating={heating_rate:g}, n_max={fock_cutoff}"
    )
    trajectory = lindblad_evolve(
        H,
        channels,
        rho0,
        (0.0, duration),
        observables=observables,
        num_points=num_points,
        hbar=hbar,
    )

    top = trajectory["p_n"][:, -1]
    peak = float(np.max(top))
    if peak > TRUNCATION_OVERFLOW_THRESHOLD and peak > initial_top + 1e-12:
        raise NumericalError(
            f"Truncation overflow: P(n={fock_cutoff}) reached {peak:.3e}; increase fock_cutoff"
        )
    check_population_contracts(trajectory, ["p_n", "p_excited", "p_ground"])

    logger.info(f"Sideband cooling finished: n̄ = {trajectory['n_bar'][-1]:.4g}")
    return Trajectory(
        times=trajectory.times,
        observables=trajectory.observables,
        final_state=trajectory.final_state,
        metadata={
            "mode": mode,
            "lamb_dicke_factor": ld_factor,
            "fock_cutoff": fock_cutoff,
            "integrator": trajectory.metadata.get("method"),
        },
    )


def sideband_transition_rate(coupling: float, repump_rate: float, detuning: float = 0.0) -> float:
    """
    Optical-pumping rate of a driven transition followed by decay

    Γρ_ee of a two-level steady state: Γ(g²/4)/(δ² + g²/2 + Γ²/4).
    """
    return repump_rate * 0.25 * coupling**2 / (detuning**2 + 0.5 * coupling**2 + 0.25 * repump_rate**2)


def sideband_rate_model(
    initial_pops: np.ndarray,
    drive: LaserDrive,
    repump_rate: float,
    heating_rate: float,
    times: np.ndarray,
) -> Trajectory:
    """
    Phonon-ladder rate equations for resonant red-sideband cooling

    |g,n⟩ → |g,n−1⟩ at rate Γρ_ee for a coupling ηΩ√n; heating moves n → n+1
    at r(n+1) and n → n−1 at rn.

    Args:
        initial_pops: P(n) at t = times[0]
        drive: Laser drive (Ω, η)
        repump_rate: Effective decay Γ_eff
        heating_rate: Phonon heating rate r
        times: Output times

    Returns:
        Trajectory with n_bar and p_n
    """
    pops0 = np.asarray(initial_pops, dtype=float)
    n = np.arange(pops0.size)
    couplings = drive.ldp * drive.rabi * np.sqrt(n)
    cooling = np.array([sideband_transition_rate(g, repump_rate) for g in couplings])
    up = heating_rate * (n + 1.0)
    up[-1] = 0.0
    down = heating_rate * n

    def rhs(_t, p):
        out = -(cooling + up + down) * p
        out[:-1] += (cooling[1:] + down[1:]) * p[1:]
        out[1:] += up[:-1] * p[:-1]
        return out

    times = np.asarray(times, dtype=float)
    solution = solve_ivp(
        rhs, (times[0], times[-1]), pops0, method="LSODA", t_eval=times, rtol=RK_RTOL, atol=RK_ATOL
    )
    if not solution.success:
        raise NumericalError(f"Rate-equation integration failed: {solution.message}")
    pops = solution.y.T
    return Trajectory(times=times, observables={"n_bar": pops @ n, "p_n": pops})


def cooling_rate_per_phonon(drive: LaserDrive, repump_rate: float) -> float:
    """Weak-drive limit (ηΩ)²/Γ of the sideband cooling rate"""
    return (drive.ldp * drive.rabi) ** 2 / repump_rate if repump_rate > 0 else math.inf
