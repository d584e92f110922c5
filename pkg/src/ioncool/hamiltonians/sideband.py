"""
Two-level ion coupled to one motional mode: carrier, sideband and full interaction Hamiltonians

All builders return H in units where the caller picks ħ (default 1, so H is an
angular frequency). The laser phase φ multiplies σ₊ as e^{iφ}.
"""

import cmath
import logging
import math
from typing import Callable, Dict, Optional, Sequence

import numpy as np

from ..constants import VALID_BRANCHES
from ..quantum import (
    HilbertSpace,
    Operator,
    displacement_matrix_element,
    internal_operators,
    ladder_operators,
    motional_annihilation,
    motional_displacement,
    number_operator,
    projector,
)
from .params import LaserDrive, TrapParams


logger = logging.getLogger(__name__)

VALID_ORDERS = ["exact", "first_order"]


def _require_two_level(space: HilbertSpace) -> None:
    if space.internal_dim != 2:
        raise ValueError(f"Two-level Hamiltonian requested on a space with internal_dim={space.internal_dim}")


def carrier_hamiltonian(drive: LaserDrive, space: HilbertSpace, hbar: float = 1.0) -> Operator:
    """H = (ħΩ/2)(e^{iφ}σ₊ + e^{−iφ}σ₋)"""
    _require_two_level(space)
    _, sigma_plus, _ = internal_operators(space)
    coupling = sigma_plus * cmath.exp(1j * drive.phase)
    return (coupling + coupling.dag()) * (0.5 * hbar * drive.rabi)


def blue_sideband_hamiltonian(drive: LaserDrive, space: HilbertSpace, hbar: float = 1.0) -> Operator:
    """Anti-Jaynes–Cummings form H = (ħΩη/2)(e^{iφ}a†σ₊ + h.c.)"""
    _require_two_level(space)
    _, sigma_plus, _ = internal_operators(space)
    _, a_dag = ladder_operators(space)
    coupling = (a_dag @ sigma_plus) * cmath.exp(1j * drive.phase)
    return (coupling + coupling.dag()) * (0.5 * hbar * drive.rabi * drive.ldp)


def red_sideband_hamiltonian(drive: LaserDrive, space: HilbertSpace, hbar: float = 1.0) -> Operator:
    """Jaynes–Cummings form H = (ħΩη/2)(e^{iφ}aσ₊ + h.c.)"""
    _require_two_level(space)
    _, sigma_plus, _ = internal_operators(space)
    a, _ = ladder_operators(space)
    coupling = (a @ sigma_plus) * cmath.exp(1j * drive.phase)
    return (coupling + coupling.dag()) * (0.5 * hbar * drive.rabi * drive.ldp)


SIDEBAND_BUILDERS: Dict[str, Callable[..., Operator]] = {
    "carrier": carrier_hamiltonian,
    "blue": blue_sideband_hamiltonian,
    "red": red_sideband_hamiltonian,
}


def get_sideband_hamiltonian(branch: str) -> Callable[..., Operator]:
    """
    Factory function for the resonant Hamiltonian of a branch

    Args:
        branch: carrier, blue or red

    Returns:
        Builder taking (drive, space, hbar)

    Raises:
        ValueError: If the branch is unknown
    """
    if branch not in VALID_BRANCHES:
        raise ValueError(f"Invalid branch: {branch}. Must be one of {VALID_BRANCHES}")
    return SIDEBAND_BUILDERS[branch]


def conserved_charge(space: HilbertSpace, branch: str) -> Operator:
    """
    Q_blue = a†a − |e⟩⟨e| or Q_red = a†a + |e⟩⟨e|

    Both commute with their sideband Hamiltonian on the truncated space as well.
    """
    _require_two_level(space)
    n_op = number_operator(space)
    excited = projector(space, 1)
    if branch == "blue":
        return n_op - excited
    if branch == "red":
        return n_op + excited
    raise ValueError(f"Conserved charge is defined for 'blue' or 'red', got '{branch}'")


class FullInteractionHamiltonian:
    """
    H̄(t) = (ħΩ/2) e^{iφ} e^{−iΔt} e^{iη(ã+ã†)} σ₊ + h.c., ã = a e^{−iνt}

    The first-order variant replaces the exponential by 1 + iη(ã+ã†). Both are
    assembled from time-independent pieces, so calling the object at many times
    is cheap.
    """

    def __init__(
        self,
        drive: LaserDrive,
        trap: TrapParams,
        space: HilbertSpace,
        order: str = "exact",
        hbar: float = 1.0,
    ):
        """
        Initialize the Hamiltonian source

        Args:
            drive: Rabi frequency, detuning, phase and η
            trap: Trap whose ν sets the phase rotation of the ladder operators
            space: Two-level composite space
            order: "exact" or "first_order"
            hbar: Value of ħ in the caller's units
        """
        _require_two_level(space)
        if order not in VALID_ORDERS:
            raise ValueError(f"Invalid order: {order}. Must be one of {VALID_ORDERS}")
        self.drive = drive
        self.trap = trap
        self.space = space
        self.order = order
        self.hbar = hbar

        self._prefactor = 0.5 * hbar * drive.rabi
        self._sigma_plus = np.array([[0.0, 0.0], [1.0, 0.0]], dtype=complex)
        self._n = np.arange(space.motional_dim)
        if order == "exact":
            self._displacement = motional_displacement(drive.ldp, space.fock_cutoff)
        else:
            a_m = motional_annihilation(space.fock_cutoff)
            self._a = a_m
            self._a_dag = a_m.conj().T

    def motional_factor(self, t: float) -> np.ndarray:
        """Fock-space factor multiplying σ₊ at time t, without drive phases"""
        theta = self.trap.nu * t
        if self.order == "exact":
            rotation = np.exp(1j * theta * self._n)
            return rotation[:, None] * self._displacement * rotation.conj()[None, :]
        eta = self.drive.ldp
        eye = np.eye(self.space.motional_dim, dtype=complex)
        return eye + 1j * eta * (self._a * np.exp(-1j * theta) + self._a_dag * np.exp(1j * theta))

    def matrix(self, t: float) -> np.ndarray:
        phase = cmath.exp(1j * (self.drive.phase - self.drive.detuning * t))
        upper = np.kron(self._sigma_plus, self.motional_factor(t)) * (self._prefactor * phase)
        return upper + upper.conj().T

    def __call__(self, t: float) -> Operator:
        return Operator(self.space, self.matrix(t))


def full_interaction_hamiltonian(
    drive: LaserDrive,
    trap: TrapParams,
    t: float,
    order: str = "exact",
    space: Optional[HilbertSpace] = None,
    hbar: float = 1.0,
) -> Operator:
    """
    Interaction-picture Hamiltonian of a laser-driven trapped ion at time t

    Args:
        drive: Laser drive (Ω, Δ, φ, η)
        trap: Trap parameters (ν)
        t: Time, in the inverse units of the frequencies
        order: "exact" keeps e^{iη(ã+ã†)}, "first_order" expands to 1 + iη(ã+ã†)
        space: Two-level composite space
        hbar: Value of ħ

    Returns:
        Hermitian operator H̄(t)
    """
    if space is None:
        raise ValueError("full_interaction_hamiltonian needs a HilbertSpace")
    return FullInteractionHamiltonian(drive, trap, space, order=order, hbar=hbar)(t)


def time_average(source: Callable[[float], Operator], period: float, samples: int = 64) -> Operator:
    """
    Average of H(t) over one period

    Uses the periodic trapezoid rule, which is exact for trigonometric
    polynomials of degree below the sample count.
    """
    if period <= 0:
        raise ValueError(f"period must be positive, got {period}")
    if samples < 2:
        raise ValueError(f"samples must be at least 2, got {samples}")
    times = np.arange(samples) * (period / samples)
    first = source(float(times[0]))
    total = np.array(first.matrix)
    for t in times[1:]:
        total = total + source(float(t)).matrix
    return Operator(first.space, total / samples)


def rabi_coupling(n: int, branch: str, drive: LaserDrive) -> float:
    """
    Rabi frequency of a transition starting from Fock state |n⟩

    carrier: Ω(1 − η²n), blue: ηΩ√(n+1), red: ηΩ√n (0 for n = 0).

    Args:
        n: Initial phonon number
        branch: carrier, blue or red
        drive: Laser drive providing Ω and η

    Returns:
        Coupling in the units of drive.rabi
    """
    if n < 0:
        raise ValueError(f"Phonon number must be non-negative, got {n}")
    omega, eta = drive.rabi, drive.ldp
    if branch == "carrier":
        return omega * (1.0 - eta**2 * n)
    if branch == "blue":
        return eta * omega * math.sqrt(n + 1)
    if branch == "red":
        return eta * omega * math.sqrt(n)
    raise ValueError(f"Invalid branch: {branch}. Must be one of {VALID_BRANCHES}")


def debye_waller_coupling(n: int, m: int, drive: LaserDrive) -> float:
    """Exact coupling Ω|⟨m|e^{iη(a+a†)}|n⟩| between Fock states n → m"""
    return drive.rabi * abs(displacement_matrix_element(m, n, drive.ldp))


def lamb_dicke_parameter(wavelength: float, trap: TrapParams, angle: float = 0.0) -> float:
    """η = k cos(angle) z₀ for a beam at the given angle to the trap axis"""
    if wavelength <= 0:
        raise ValueError(f"wavelength must be positive, got {wavelength}")
    k = 2.0 * math.pi / wavelength
    return abs(k * math.cos(angle)) * trap.z0


def raman_effective_ldp(
    k1: Sequence[float], k2: Sequence[float], axis: Sequence[float], trap: TrapParams
) -> float:
    """
    Lamb-Dicke parameter of a stimulated Raman transition

    k2 is the beam driving the stimulated emission, so the transferred momentum
    is ħ(k₁ − k₂).

    Args:
        k1: Absorbed-beam wavevector, 1/m
        k2: Stimulated-emission-beam wavevector, 1/m
        axis: Unit vector along the cooled mode
        trap: Trap parameters providing z₀

    Returns:
        |(k₁ − k₂)·axis| z₀

    Raises:
        ValueError: If axis is not normalized
    """
    axis_vec = np.asarray(axis, dtype=float)
    if axis_vec.shape != (3,):
        raise ValueError(f"axis must be a 3-vector, got shape {axis_vec.shape}")
    if abs(np.linalg.norm(axis_vec) - 1.0) > 1e-9:
        raise ValueError(f"axis must be a unit vector, got norm {np.linalg.norm(axis_vec)}")
    delta_k = np.asarray(k1, dtype=float) - np.asarray(k2, dtype=float)
    return float(abs(np.dot(delta_k, axis_vec)) * trap.z0)


def lamb_dicke_factor(eta: float, n_bar: float) -> float:
    """η√(2n̄+1); the Lamb-Dicke regime needs this ≪ 1"""
    return eta * math.sqrt(2.0 * n_bar + 1.0)
