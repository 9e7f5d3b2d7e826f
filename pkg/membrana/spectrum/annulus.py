## λ del anillo: Q nula en los dos contornos homofocales

import logging
import math
from typing import List, Optional

import numpy as np

from membrana.angular.schemas import AngularKind, check_order
from membrana.config import settings
from membrana.coords.schemas import EllipseGeometry
from membrana.exceptions import InvalidParameterError, ShootingAccuracyError
from membrana.radial.annulus import annulus_from_geometry, annulus_from_radius, annulus_solution

from .finder import find_lambda
from .scan import charval_at, scan_roots
from .schemas import MembraneMode, ModeSpec

logger = logging.getLogger(__name__)


def _outer_value(c: float, theta_inner: float, eps_out: float, kind: AngularKind, g: int, lam: float) -> float:
    param = annulus_from_geometry(c, theta_inner, lam)
    R = charval_at(kind, g, lam * c).R
    return float(annulus_solution(param, R, eps_out).y[-1])


def annulus_find_lambdas(
    c: float,
    theta_inner: float,
    theta_outer: float,
    kind: AngularKind,
    g: int,
    count: int,
    tol: Optional[float] = None,
) -> List[MembraneMode]:
    """
    Primeras `count` raices λ con Q(ε_ext) = 0, ε_ext = ϑ_ext − ϑ_in.

    Las dos especies usan la misma forma de Q y solo difieren en R.
    """
    kind = AngularKind(kind)
    check_order(g, kind)
    if not 0 <= theta_inner < theta_outer or c <= 0:
        raise InvalidParameterError(
            f"Se requiere c > 0 y 0 ≤ ϑ_in < ϑ_ext (c={c}, ϑ_in={theta_inner}, ϑ_ext={theta_outer})",
            code="INVALID_ANNULUS",
        )
    tol = settings.LAMBDA_TOL if tol is None else tol
    geometry = EllipseGeometry(c=c, theta=theta_outer)
    eps_out = theta_outer - theta_inner
    width = geometry.semi_major - c * math.cosh(theta_inner)

    roots = scan_roots(
        lambda lam: _outer_value(c, theta_inner, eps_out, kind, g, lam),
        step=math.pi / (8 * width),
        ceiling=settings.LAMBDA_SCAN_CEILING / width,
        count=count,
        start=0.0,
    )
    modes = []
    for i, lam in enumerate(roots, start=1):
        param = annulus_from_geometry(c, theta_inner, lam)
        cv = charval_at(kind, g, lam * c)
        sol = annulus_solution(param, cv.R, eps_out)
        residual = abs(float(sol.y[-1])) / (float(np.max(np.abs(sol.y))) or 1.0)
        if residual > tol:
            raise ShootingAccuracyError(
                message=f"|Q(ε_ext)| relativo {residual:.3g} supera la tolerancia {tol:.3g}",
                code="BOUNDARY_RESIDUAL",
                details={"lambda": lam, "residual": residual},
            )
        modes.append(MembraneMode(
            spec=ModeSpec(kind=kind, order_g=g, radial_index=i),
            lambda_=lam,
            cv=cv,
            geometry=geometry,
            inner_theta=theta_inner,
            boundary_residual=residual,
        ))
    return modes


def annulus_find_lambda(
    c: float,
    theta_inner: float,
    theta_outer: float,
    kind: AngularKind,
    g: int,
    i: int,
    tol: Optional[float] = None,
) -> MembraneMode:
    """
    i-esima λ del anillo.

    Con ϑ_in = 0 y primera especie el contorno interior es el segmento focal,
    donde Q₁ ya se anula: es el modo de la membrana completa.
    """
    if i < 1:
        raise InvalidParameterError(f"El indice radial debe ser ≥ 1 (i={i})", code="INVALID_INDEX")
    if theta_inner == 0 and AngularKind(kind) is AngularKind.ODD and c > 0:
        logger.info("contorno interior degenerado: se resuelve la membrana completa")
        return find_lambda(EllipseGeometry(c=c, theta=theta_outer), kind, g, i, tol)
    return annulus_find_lambdas(c, theta_inner, theta_outer, kind, g, i, tol)[-1]


def ring_find_lambdas(rho_inner: float, rho_outer: float, g: int, count: int) -> List[float]:
    """Anillo circular (c = 0, q_ann = 0): R = g² y ε_ext = log(ρ_ext/ρ_in)."""
    if not 0 < rho_inner < rho_outer:
        raise InvalidParameterError(
            f"Se requiere 0 < ρ_in < ρ_ext (ρ_in={rho_inner}, ρ_ext={rho_outer})", code="INVALID_ANNULUS"
        )
    if g < 0:
        raise InvalidParameterError(f"El orden debe ser ≥ 0 (g={g})", code="INVALID_ORDER")
    eps_out = math.log(rho_outer / rho_inner)
    width = rho_outer - rho_inner

    def outer(lam: float) -> float:
        param = annulus_from_radius(0.0, rho_inner, lam)
        return float(annulus_solution(param, float(g * g), eps_out).y[-1])

    return scan_roots(outer, step=math.pi / (8 * width), ceiling=settings.LAMBDA_SCAN_CEILING / width, count=count)
