from .annulus import (
    PRINTED_ANNULUS,
    annulus_derivatives,
    annulus_eval,
    annulus_from_geometry,
    annulus_from_radius,
    annulus_solution,
    annulus_taylor,
    audit_annulus_table,
)
from .functions import (
    RadialFunction,
    bessel_form_bound,
    bessel_form_eval,
    build_radial,
    radial_eval,
    radial_static,
    rho_series_eval,
)
from .schemas import AnnulusParam, RadialTaylor, RadialValue
from .taylor import radial_taylor_coeffs, taylor_sum

__all__ = [
    "AnnulusParam",
    "PRINTED_ANNULUS",
    "RadialFunction",
    "RadialTaylor",
    "RadialValue",
    "annulus_derivatives",
    "annulus_eval",
    "annulus_from_geometry",
    "annulus_from_radius",
    "annulus_solution",
    "annulus_taylor",
    "audit_annulus_table",
    "bessel_form_bound",
    "bessel_form_eval",
    "build_radial",
    "radial_eval",
    "radial_static",
    "radial_taylor_coeffs",
    "rho_series_eval",
    "taylor_sum",
]
