"""
Composite internal ⊗ motional Hilbert space, operators and states

All arrays are dense complex128 and frozen after construction, so operators and
states can be shared freely between worker threads.
"""

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..constants import (
    HERMITIAN_TOL,
    POSITIVITY_TOL,
    STATE_NORM_TOL,
    TRUNCATION_ETA_FACTOR,
    TRUNCATION_MIN_MARGIN,
)


def _frozen(array: np.ndarray) -> np.ndarray:
    """Return a read-only complex copy of an array"""
    out = np.array(array, dtype=complex, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class HilbertSpace:
    """Internal levels ⊗ truncated Fock space, factor order fixed as internal ⊗ motional"""

    internal_dim: int
    fock_cutoff: int

    def __post_init__(self):
        if int(self.internal_dim) != self.internal_dim or self.internal_dim < 2:
            raise ValueError(f"internal_dim must be an integer >= 2, got {self.internal_dim}")
        if int(self.fock_cutoff) != self.fock_cutoff or self.fock_cutoff < 0:
            raise ValueError(f"fock_cutoff must be a non-negative integer, got {self.fock_cutoff}")

    @property
    def motional_dim(self) -> int:
        return self.fock_cutoff + 1

    @property
    def dim(self) -> int:
        return self.internal_dim * self.motional_dim

    def index(self, internal: int, n: int) -> int:
        """Flat basis index of |internal, n⟩"""
        if not 0 <= internal < self.internal_dim:
            raise ValueError(f"Internal level {internal} outside 0..{self.internal_dim - 1}")
        if not 0 <= n <= self.fock_cutoff:
            raise ValueError(f"Fock index {n} outside 0..{self.fock_cutoff}")
        return internal * self.motional_dim + n

    def truncation_margin(self, eta: float = 0.0) -> int:
        """Number of top Fock levels treated as boundary layer for a drive of strength eta"""
        scaled = math.ceil(TRUNCATION_ETA_FACTOR * abs(eta) * math.sqrt(self.fock_cutoff))
        return max(TRUNCATION_MIN_MARGIN, scaled)

    def interior_cutoff(self, eta: float = 0.0) -> int:
        """Largest Fock index on which truncated operators are trusted (may be negative for tiny spaces)"""
        return self.fock_cutoff - self.truncation_margin(eta)


@dataclass(frozen=True, eq=False)
class Operator:
    """Dense operator acting on a HilbertSpace"""

    space: HilbertSpace
    matrix: np.ndarray

    def __post_init__(self):
        matrix = _frozen(self.matrix)
        if matrix.shape != (self.space.dim, self.space.dim):
            raise ValueError(
                f"Operator matrix shape {matrix.shape} does not match space dimension {self.space.dim}"
            )
        object.__setattr__(self, "matrix", matrix)

    @classmethod
    def zero(cls, space: HilbertSpace) -> "Operator":
        return cls(space, np.zeros((space.dim, space.dim), dtype=complex))

    @classmethod
    def identity(cls, space: HilbertSpace) -> "Operator":
        return cls(space, np.eye(space.dim, dtype=complex))

    def dag(self) -> "Operator":
        return Operator(self.space, self.matrix.conj().T)

    def hermiticity_error(self) -> float:
        return float(np.max(np.abs(self.matrix - self.matrix.conj().T), initial=0.0))

    def is_hermitian(self, tol: float = HERMITIAN_TOL) -> bool:
        return self.hermiticity_error() < tol

    def assert_hermitian(self, tol: float = HERMITIAN_TOL) -> "Operator":
        """Verify the Hermiticity flag; returns self for chaining"""
        error = self.hermiticity_error()
        if error >= tol:
            raise ValueError(f"Operator is not Hermitian: max |M - M†| = {error:.3e}")
        return self

    def commutator(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.matrix @ other.matrix - other.matrix @ self.matrix)

    def max_norm(self) -> float:
        return float(np.max(np.abs(self.matrix), initial=0.0))

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def _check_space(self, other: "Operator") -> None:
        if other.space != self.space:
            raise ValueError(f"Space mismatch: {self.space} vs {other.space}")

    def __add__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.matrix + other.matrix)

    def __sub__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.matrix - other.matrix)

    def __neg__(self) -> "Operator":
        return Operator(self.space, -self.matrix)

    def __mul__(self, scalar: complex) -> "Operator":
        if isinstance(scalar, Operator):
            return NotImplemented
        return Operator(self.space, self.matrix * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "Operator":
        return Operator(self.space, self.matrix / scalar)

    def __matmul__(self, other: "Operator") -> "Operator":
        self._check_space(other)
        return Operator(self.space, self.matrix @ other.matrix)


@dataclass(frozen=True, eq=False)
class QuantumState:
    """Pure state vector or density matrix on a HilbertSpace"""

    space: HilbertSpace
    data: np.ndarray

    def __post_init__(self):
        data = _frozen(self.data)
        dim = self.space.dim
        if data.shape not in ((dim,), (dim, dim)):
            raise ValueError(f"State shape {data.shape} does not match space dimension {dim}")
        object.__setattr__(self, "data", data)

    @classmethod
    def pure(cls, space: HilbertSpace, vector: np.ndarray) -> "QuantumState":
        return cls(space, np.asarray(vector, dtype=complex).reshape(space.dim)).validate()

    @classmethod
    def density(cls, space: HilbertSpace, rho: np.ndarray) -> "QuantumState":
        return cls(space, np.asarray(rho, dtype=complex).reshape(space.dim, space.dim)).validate()

    @property
    def is_pure(self) -> bool:
        return self.data.ndim == 1

    @property
    def variant(self) -> str:
        return "pure" if self.is_pure else "density"

    def to_density(self) -> "QuantumState":
        if not self.is_pure:
            return self
        return QuantumState(self.space, np.outer(self.data, self.data.conj()))

    def density_matrix(self) -> np.ndarray:
        return self.to_density().data

    def validate(self, tol: float = STATE_NORM_TOL, positivity_tol: float = POSITIVITY_TOL) -> "QuantumState":
        """Check the norm, trace, Hermiticity and positivity contracts; returns self"""
        if not np.all(np.isfinite(self.data)):
            raise ValueError("State contains non-finite entries")
        if self.is_pure:
            norm = float(np.linalg.norm(self.data))
            if abs(norm - 1.0) > tol:
                raise ValueError(f"Pure state norm {norm:.12f} differs from 1")
            return self
        rho = self.data
        herm_error = float(np.max(np.abs(rho - rho.conj().T)))
        if herm_error > tol:
            raise ValueError(f"Density matrix not Hermitian: max |ρ - ρ†| = {herm_error:.3e}")
        trace = complex(np.trace(rho))
        if abs(trace - 1.0) > tol:
            raise ValueError(f"Density matrix trace {trace.real:.12f} differs from 1")
        min_eig = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
        if min_eig < -positivity_tol:
            raise ValueError(f"Density matrix has negative eigenvalue {min_eig:.3e}")
        return self


OperatorLike = Union[Operator, np.ndarray]
