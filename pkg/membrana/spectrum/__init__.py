from .annulus import annulus_find_lambda, annulus_find_lambdas, ring_find_lambdas
from .circle import boundary_series, circle_modes, circle_nodal_radii, circle_roots
from .finder import (
    boundary_value,
    charval_slope_check,
    degenerate_pair_gap,
    find_lambda,
    find_lambdas,
    frequency,
    list_modes,
    mode_shape,
    radial_profile,
)
from .scan import charval_at, scan_roots
from .schemas import CircleMode, MembraneMaterial, MembraneMode, ModeSpec

__all__ = [
    "CircleMode",
    "MembraneMaterial",
    "MembraneMode",
    "ModeSpec",
    "annulus_find_lambda",
    "annulus_find_lambdas",
    "boundary_series",
    "boundary_value",
    "charval_at",
    "charval_slope_check",
    "circle_modes",
    "circle_nodal_radii",
    "circle_roots",
    "degenerate_pair_gap",
    "find_lambda",
    "find_lambdas",
    "frequency",
    "list_modes",
    "mode_shape",
    "radial_profile",
    "ring_find_lambdas",
    "scan_roots",
]
