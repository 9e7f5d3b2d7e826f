## Producto interior con peso cosh 2β − cos 2α y cuadratura de Gauss–Legendre

import logging
import math
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from membrana.angular.functions import build_angular
from membrana.config import settings
from membrana.coords.schemas import EllipseGeometry
from membrana.exceptions import InvalidParameterError, QuadratureError
from membrana.radial.functions import build_radial
from membrana.spectrum.schemas import MembraneMode

from .schemas import SeparatedIdentities

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi

# integrando(α nodos, β nodos) -> matriz (nα, nβ)
Integrand = Callable[[np.ndarray, np.ndarray], np.ndarray]


@lru_cache(maxsize=32)
def _nodes(order: int, lo: float, hi: float) -> Tuple[np.ndarray, np.ndarray]:
    x, w = np.polynomial.legendre.leggauss(order)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def weight(alpha: np.ndarray, beta: np.ndarray) -> np.ndarray:
    """cosh 2β − cos 2α, malla (nα, nβ)."""
    return np.cosh(2.0 * beta)[None, :] - np.cos(2.0 * alpha)[:, None]


def tensor_quad(integrand: Integrand, theta: float, order: int) -> Tuple[float, float]:
    """(∬ f, ∬ |f|) sobre α ∈ [0, 2π], β ∈ [0, ϑ] con `order` nodos por eje."""
    a, wa = _nodes(order, 0.0, TWO_PI)
    b, wb = _nodes(order, 0.0, float(theta))
    values = integrand(a, b)
    return float(wa @ values @ wb), float(wa @ np.abs(values) @ wb)


def adaptive_quad(
    integrand: Integrand,
    theta: float,
    order: Optional[int] = None,
    tol: Optional[float] = None,
) -> Tuple[float, int]:
    """
    Dobla el orden hasta que dos resultados sucesivos coinciden a QUAD_TOL.

    La tolerancia es relativa a ∬|f| para que integrales nulas converjan.
    Devuelve (valor, orden usado).
    """
    order = order or settings.QUAD_ORDER
    tol = settings.QUAD_TOL if tol is None else tol
    previous, _ = tensor_quad(integrand, theta, order)
    while 2 * order <= settings.QUAD_MAX_ORDER:
        order *= 2
        value, scale = tensor_quad(integrand, theta, order)
        if abs(value - previous) <= tol * max(scale, np.finfo(float).tiny):
            logger.debug("cuadratura convergida con orden %d", order)
            return value, order
        previous = value
    raise QuadratureError(
        message=f"La cuadratura no converge antes del orden {settings.QUAD_MAX_ORDER}",
        details={"last": previous, "max_order": settings.QUAD_MAX_ORDER},
    )


def check_modes(modes: Sequence[MembraneMode]) -> EllipseGeometry:
    """Todos los modos en la misma elipse completa; devuelve esa geometria."""
    if not modes:
        raise InvalidParameterError("Se requiere al menos un modo", code="EMPTY_MODE_SET")
    geometry = modes[0].geometry
    for mode in modes:
        if mode.geometry != geometry:
            raise InvalidParameterError(
                f"El modo {mode.spec.label} esta en otra geometria", code="GEOMETRY_MISMATCH"
            )
        if mode.inner_theta is not None:
            raise InvalidParameterError(
                f"El modo {mode.spec.label} es de anillo; solo se expande la elipse completa",
                code="ANNULUS_NOT_SUPPORTED",
            )
    return geometry


def shape_factors(mode: MembraneMode, alpha: np.ndarray, beta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return build_angular(mode.cv)(alpha), build_radial(mode.cv)(beta)


def inner_product(mode_a: MembraneMode, mode_b: MembraneMode, quad_order: Optional[int] = None) -> float:
    """∬ (cosh 2β − cos 2α)·P_aP_b·Q_aQ_b dβ dα."""
    geometry = check_modes([mode_a, mode_b])
    if mode_a.spec.kind is not mode_b.spec.kind:
        raise InvalidParameterError("Los modos deben ser de la misma especie", code="KIND_MISMATCH")

    def integrand(alpha, beta):
        Pa, Qa = shape_factors(mode_a, alpha, beta)
        Pb, Qb = shape_factors(mode_b, alpha, beta)
        return weight(alpha, beta) * np.outer(Pa * Pb, Qa * Qb)

    value, _ = adaptive_quad(integrand, geometry.theta, quad_order)
    return value


def gram_matrix(modes: Sequence[MembraneMode], quad_order: Optional[int] = None) -> np.ndarray:
    """
    G[j, k] = producto interior de los modos j y k.

    Entre especies distintas la integral en α se anula sola, asi que se
    rellena con cero.
    """
    geometry = check_modes(modes)
    order = quad_order or settings.QUAD_ORDER
    n = len(modes)
    gram = np.zeros((n, n))

    def entry(j: int, k: int) -> float:
        mj, mk = modes[j], modes[k]

        def integrand(alpha, beta):
            Pj, Qj = shape_factors(mj, alpha, beta)
            Pk, Qk = shape_factors(mk, alpha, beta)
            return weight(alpha, beta) * np.outer(Pj * Pk, Qj * Qk)

        return adaptive_quad(integrand, geometry.theta, order)[0]

    for j in range(n):
        for k in range(j, n):
            if modes[j].spec.kind is modes[k].spec.kind:
                gram[j, k] = gram[k, j] = entry(j, k)
    return gram


def _line_quad(fn: Callable[[np.ndarray], np.ndarray], lo: float, hi: float, order: int) -> Tuple[float, float]:
    previous = None
    while order <= settings.QUAD_MAX_ORDER:
        x, w = _nodes(order, lo, hi)
        values = fn(x)
        value, scale = float(w @ values), float(w @ np.abs(values))
        if previous is not None and abs(value - previous) <= settings.QUAD_TOL * max(scale, np.finfo(float).tiny):
            return value, scale
        previous = value
        order *= 2
    raise QuadratureError(
        message=f"La cuadratura 1-D no converge antes del orden {settings.QUAD_MAX_ORDER}",
        details={"interval": (lo, hi)},
    )


def separated_identities(mode_a: MembraneMode, mode_b: MembraneMode, quad_order: Optional[int] = None) -> SeparatedIdentities:
    """Ambos lados de las identidades angular y radial para el par (a, b)."""
    geometry = check_modes([mode_a, mode_b])
    if mode_a.spec.kind is not mode_b.spec.kind:
        raise InvalidParameterError("Los modos deben ser de la misma especie", code="KIND_MISMATCH")
    order = quad_order or settings.QUAD_ORDER
    Pa, Pb = build_angular(mode_a.cv), build_angular(mode_b.cv)
    Qa, Qb = build_radial(mode_a.cv), build_radial(mode_b.cv)

    dR = mode_a.R - mode_b.R
    dh2 = 2.0 * (mode_a.h ** 2 - mode_b.h ** 2)

    p_int, p_abs = _line_quad(lambda a: Pa(a) * Pb(a), 0.0, TWO_PI, order)
    pc_int, pc_abs = _line_quad(lambda a: Pa(a) * Pb(a) * np.cos(2 * a), 0.0, TWO_PI, order)
    q_int, q_abs = _line_quad(lambda b: Qa(b) * Qb(b), 0.0, geometry.theta, order)
    qc_int, qc_abs = _line_quad(lambda b: Qa(b) * Qb(b) * np.cosh(2 * b), 0.0, geometry.theta, order)

    scale = max(abs(dR) * p_abs, abs(dh2) * pc_abs, abs(dR) * q_abs, abs(dh2) * qc_abs)
    return SeparatedIdentities(
        angular_lhs=dR * p_int,
        angular_rhs=dh2 * pc_int,
        radial_lhs=dR * q_int,
        radial_rhs=dh2 * qc_int,
        scale=scale,
    )


def weighted_norms(values: List[np.ndarray], theta: float, order: int) -> List[float]:
    """√∬ f²·w para cada matriz f ya muestreada en los nodos de `order`."""
    a, wa = _nodes(order, 0.0, TWO_PI)
    b, wb = _nodes(order, 0.0, float(theta))
    w = weight(a, b)
    return [math.sqrt(max(float(wa @ (v * v * w) @ wb), 0.0)) for v in values]


def nodes(order: int, theta: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Nodos y pesos (α, wα, β, wβ) del producto tensorial."""
    a, wa = _nodes(order, 0.0, TWO_PI)
    b, wb = _nodes(order, 0.0, float(theta))
    return a, wa, b, wb
