"""
Quantum state and operator algebra on the internal ⊗ motional space
"""

from .space import HilbertSpace, Operator, QuantumState
from .operators import (
    displacement_matrix_element,
    displacement_operator,
    expectation,
    identity,
    internal_operators,
    ladder_operators,
    matrix_exponential,
    motional_annihilation,
    motional_displacement,
    number_operator,
    projector,
    tensor,
    transition_operator,
)
from .states import (
    basis_state,
    internal_populations,
    partial_trace_internal,
    resolve_level,
    thermal_mean_error_bound,
    thermal_populations,
    thermal_state,
    thermal_tail_probability,
)

__all__ = [
    "HilbertSpace", "Operator", "QuantumState",
    "ladder_operators", "internal_operators", "tensor", "identity", "number_operator",
    "projector", "transition_operator", "matrix_exponential",
    "motional_annihilation", "motional_displacement",
    "displacement_operator", "displacement_matrix_element", "expectation",
    "basis_state", "thermal_state", "thermal_populations", "thermal_tail_probability",
    "thermal_mean_error_bound", "partial_trace_internal", "internal_populations",
    "resolve_level",
]
