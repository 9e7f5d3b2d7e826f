## Coordenadas elipticas confocales

import cmath
import math
from typing import Tuple

import numpy as np

from membrana.exceptions import InvalidParameterError

from .schemas import EllipseGeometry, EllipticPoint

# distancia (relativa a c) bajo la cual un punto se considera sobre el segmento focal
FOCAL_SNAP = 1e-14


def _check_focal(geom_c: float) -> None:
    if not math.isfinite(geom_c) or geom_c <= 0:
        raise InvalidParameterError(
            f"La semi-distancia focal debe ser > 0 (c={geom_c}); "
            "para c = 0 use el modulo del circulo",
            code="DEGENERATE_FRAME",
        )


def to_cartesian(geom_c: float, alpha, beta) -> Tuple[np.ndarray, np.ndarray]:
    """Version vectorizada: x = c·cosh β·cos α, y = c·sinh β·sin α."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    return geom_c * np.cosh(beta) * np.cos(alpha), geom_c * np.sinh(beta) * np.sin(alpha)


def elliptic_to_cartesian(geom_c: float, p: EllipticPoint) -> Tuple[float, float]:
    _check_focal(geom_c)
    x = geom_c * math.cosh(p.beta) * math.cos(p.alpha)
    y = geom_c * math.sinh(p.beta) * math.sin(p.alpha)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidParameterError(f"Punto no finito: {p!r}", code="NON_FINITE")
    return x, y


def cartesian_to_elliptic(geom_c: float, x: float, y: float) -> EllipticPoint:
    """
    Inversa canonica (β ≥ 0, α ∈ [0, 2π)).

    cosh(β + iα) = cosh β cos α + i sinh β sin α, asi que basta con la
    rama principal de acosh; el cuadrante de α sale del signo de (x, y).
    """
    _check_focal(geom_c)
    if not (math.isfinite(x) and math.isfinite(y)):
        raise InvalidParameterError(f"Punto no finito: ({x}, {y})", code="NON_FINITE")

    w = cmath.acosh(complex(x, abs(y)) / geom_c)
    beta, alpha = abs(w.real), abs(w.imag)

    if abs(y) <= FOCAL_SNAP * geom_c and abs(x) <= geom_c:
        # sobre el segmento entre los focos
        return EllipticPoint(alpha=math.acos(max(-1.0, min(1.0, x / geom_c))), beta=0.0)

    if y < 0:
        alpha = 2 * math.pi - alpha
    return EllipticPoint(alpha=alpha, beta=beta).canonical()


def metric_weight(p: EllipticPoint) -> float:
    """H² = E²(β) − cos²α; nulo solo en los focos."""
    value = math.cosh(p.beta) ** 2 - math.cos(p.alpha) ** 2
    return max(value, 0.0)


def semi_axes(geometry: EllipseGeometry) -> Tuple[float, float]:
    return geometry.semi_major, geometry.semi_minor


def geometry_from_axes(semi_major: float, semi_minor: float) -> EllipseGeometry:
    if not (semi_major > semi_minor > 0):
        raise InvalidParameterError(
            f"Se requiere A > B > 0 (A={semi_major}, B={semi_minor})",
            code="INVALID_AXES",
        )
    c = math.sqrt(semi_major ** 2 - semi_minor ** 2)
    return EllipseGeometry(c=c, theta=math.atanh(semi_minor / semi_major))


def ellipse_points(geom_c: float, beta: float, n: int = 361) -> Tuple[np.ndarray, np.ndarray]:
    alpha = np.linspace(0.0, 2 * np.pi, n)
    return to_cartesian(geom_c, alpha, np.full_like(alpha, beta))


def hyperbola_points(
    geom_c: float, alpha: float, beta_max: float, n: int = 121
) -> Tuple[np.ndarray, np.ndarray]:
    beta = np.linspace(0.0, beta_max, n)
    return to_cartesian(geom_c, np.full_like(beta, alpha), beta)
