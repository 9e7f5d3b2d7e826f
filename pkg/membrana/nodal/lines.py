## Lineas nodales hiperbolicas y elipticas

import logging
import math
from typing import List, Optional, Tuple

import contourpy
import numpy as np

from membrana.angular.functions import build_angular, find_roots
from membrana.angular.schemas import AngularKind
from membrana.config import settings
from membrana.coords.transforms import to_cartesian
from membrana.exceptions import DegeneracyError, NodalCountError
from membrana.radial.annulus import annulus_from_geometry, annulus_solution
from membrana.radial.functions import build_radial
from membrana.spectrum.schemas import MembraneMode

from .schemas import NodalGeometry, SuperposedNodal

logger = logging.getLogger(__name__)

AXIS_TOL = 1e-9
# fraccion de ϑ excluida en cada extremo al buscar ceros de Q
EDGE = 1e-6


def _classify(alphas: List[float]) -> Tuple[bool, bool]:
    major = any(abs(a) <= AXIS_TOL for a in alphas)
    minor = any(abs(a - math.pi / 2) <= AXIS_TOL for a in alphas)
    return major, minor


def hyperbolic_nodal_angles(mode: MembraneMode) -> NodalGeometry:
    """Raices α de P en [0, π) con el eje mayor y el menor señalados."""
    alphas = sorted(find_roots(build_angular(mode.cv), 0.0, math.pi))
    major, minor = _classify(alphas)
    return NodalGeometry(
        kind=mode.spec.kind,
        hyperbolic_alphas=tuple(alphas),
        includes_major_axis=major,
        includes_minor_axis=minor,
        includes_focal_segment=mode.spec.kind is AngularKind.ODD and mode.inner_theta is None,
    )


def _radial_on_beta(mode: MembraneMode):
    """Q en funcion de β, para la elipse completa o el anillo."""
    if mode.inner_theta is None:
        return build_radial(mode.cv), 0.0
    theta_in = mode.inner_theta
    param = annulus_from_geometry(mode.geometry.c, theta_in, mode.lambda_)
    sol = annulus_solution(param, mode.R, mode.geometry.theta - theta_in)
    return (lambda beta: sol(np.asarray(beta, dtype=float) - theta_in)[0]), theta_in


def nodal_ellipses(mode: MembraneMode) -> List[Tuple[float, float, float]]:
    """
    Los i − 1 ceros β de Q entre el contorno interior y ϑ, con sus semiejes.

    Devuelve (β, c·cosh β, c·sinh β). Un numero distinto de i − 1 indica
    que se salto una raiz λ.
    """
    radial, lo = _radial_on_beta(mode)
    theta = mode.geometry.theta
    span = theta - lo
    betas = find_roots(radial, lo + EDGE * span, theta - EDGE * span, points=settings.NODAL_GRID)
    expected = mode.spec.radial_index - 1
    if len(betas) != expected:
        raise NodalCountError(
            message=f"Q tiene {len(betas)} ceros interiores y se esperaban {expected} ({mode.spec.label})",
            details={"betas": betas, "expected": expected},
        )
    c = mode.geometry.c
    return [(b, c * math.cosh(b), c * math.sinh(b)) for b in sorted(betas)]


def nodal_geometry(mode: MembraneMode) -> NodalGeometry:
    """Lineas hiperbolicas y elipses nodales; comprueba los conteos g e i − 1."""
    angular = hyperbolic_nodal_angles(mode)
    if angular.counted_hyperbolic_lines != mode.spec.order_g:
        raise NodalCountError(
            message=(
                f"P tiene {angular.counted_hyperbolic_lines} raices en [0, π) "
                f"y se esperaban {mode.spec.order_g} ({mode.spec.label})"
            ),
            details={"alphas": angular.hyperbolic_alphas},
        )
    ellipses = nodal_ellipses(mode)
    return angular.model_copy(update={
        "ellipse_betas": tuple(e[0] for e in ellipses),
        "ellipse_axes": tuple((e[1], e[2]) for e in ellipses),
    })


def superposed_nodal(
    mode_even: MembraneMode,
    mode_odd: MembraneMode,
    A: float,
    B: float,
    grid: Optional[int] = None,
) -> SuperposedNodal:
    """
    Nodos de w = A·P₁Q₁ + B·P₂Q₂ (P₁ de primera especie, P₂ de segunda).

    Solo tiene sentido fisico si las dos λ casi coinciden. Las curvas se
    extraen con contourpy sobre una malla (α, β) de grid × grid. Las elipses
    nodales se dan por separado para cada modo (ellipse_betas, odd_ellipse_betas).
    """
    grid = grid or settings.NODAL_GRID
    if mode_even.spec.kind is not AngularKind.EVEN or mode_odd.spec.kind is not AngularKind.ODD:
        raise DegeneracyError(message="Se requiere un modo de cada especie", code="KIND_MISMATCH")
    same = (mode_even.spec.order_g, mode_even.spec.radial_index) == (mode_odd.spec.order_g, mode_odd.spec.radial_index)
    if not same or mode_even.geometry != mode_odd.geometry:
        raise DegeneracyError(message="Los modos deben compartir (g, i) y geometria", code="PAIR_MISMATCH")
    gap = abs(mode_even.lambda_ - mode_odd.lambda_) / mode_even.lambda_
    if gap > settings.DEGENERACY_THRESHOLD:
        raise DegeneracyError(
            message=f"Diferencia relativa de λ {gap:.3g} mayor que el umbral {settings.DEGENERACY_THRESHOLD:.3g}",
            details={"gap": gap},
        )

    p_odd = build_angular(mode_odd.cv)
    p_even = build_angular(mode_even.cv)

    def combined(alpha):
        return A * p_odd(alpha) + B * p_even(alpha)

    alphas = sorted(find_roots(combined, 0.0, math.pi))

    geometry = mode_even.geometry
    alpha_grid = np.linspace(0.0, 2 * math.pi, grid)
    beta_grid = np.linspace(0.0, geometry.theta, grid)
    q_odd = build_radial(mode_odd.cv)(beta_grid)
    q_even = build_radial(mode_even.cv)(beta_grid)
    field = A * np.outer(q_odd, p_odd(alpha_grid)) + B * np.outer(q_even, p_even(alpha_grid))

    lines = contourpy.contour_generator(x=alpha_grid, y=beta_grid, z=field).lines(0.0)
    polylines = []
    for line in lines:
        x, y = to_cartesian(geometry.c, line[:, 0], line[:, 1])
        polylines.append(tuple(zip(x.tolist(), y.tolist())))

    # las Q de cada especie se anulan en β proximos pero distintos
    return SuperposedNodal(
        alpha_roots=tuple(alphas),
        ellipse_betas=tuple(b for b, _, _ in nodal_ellipses(mode_even)),
        odd_ellipse_betas=tuple(b for b, _, _ in nodal_ellipses(mode_odd)),
        polylines=tuple(polylines),
        symmetric_about_axes=(A == 0 or B == 0),
        pi_shift="invariant" if mode_even.spec.order_g % 2 == 0 else "sign_change",
    )
