from .expansion import evaluate_motion, expand_velocity, velocity_of_motion
from .fields import builtin_field, check_symmetry, field_from_csv, split_even_odd
from .quadrature import adaptive_quad, gram_matrix, inner_product, separated_identities
from .schemas import ModalExpansion, ModalTerm, SeparatedIdentities, VelocityField

__all__ = [
    "ModalExpansion",
    "ModalTerm",
    "SeparatedIdentities",
    "VelocityField",
    "adaptive_quad",
    "builtin_field",
    "check_symmetry",
    "evaluate_motion",
    "expand_velocity",
    "field_from_csv",
    "gram_matrix",
    "inner_product",
    "separated_identities",
    "split_even_odd",
    "velocity_of_motion",
]
