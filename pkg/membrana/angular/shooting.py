## Calculo de R por tiro desde α = 0 hasta α = π/2

import logging
import math
from typing import Optional

import numpy as np
from scipy.optimize import brentq

from membrana.config import settings
from membrana.exceptions import (
    BracketingError,
    InvalidParameterError,
    SeriesDivergenceError,
    ShootingAccuracyError,
)
from membrana.integrator import angular_potential, solve, steps_for

from .schemas import AngularKind, CharacteristicValue, check_order
from .series import charval_series

logger = logging.getLogger(__name__)

HALF_PI = math.pi / 2


def _reference_omega(g: int, h: float) -> float:
    return math.sqrt(g * g + 6.0 * h * h + 4.0)


def initial_state(kind: AngularKind):
    """(P, P′) en α = 0: primera especie (0, 1), segunda especie (1, 0)."""
    return (0.0, 1.0) if kind is AngularKind.ODD else (1.0, 0.0)


def boundary_mismatch(
    R: float,
    g: int,
    kind: AngularKind,
    h: float,
    potential_sign: int = 1,
    steps: Optional[int] = None,
) -> float:
    """
    Θ(R) = θ(π/2) − θ(0) − gπ/2 con el angulo de Prüfer θ = atan2(s·P, P′).

    θ pasa por kπ solo donde P = 0 y siempre creciendo, de modo que Θ es
    creciente en R y su unico cero es la rama con g raices en [0, π).
    """
    omega = _reference_omega(g, h)
    n = steps_for(HALF_PI, omega, steps)
    y0, dy0 = initial_state(kind)
    sol = solve(angular_potential(R, h, potential_sign), 0.0, HALF_PI, y0, dy0, omega, steps=n)
    theta = np.unwrap(np.arctan2(omega * sol.y, sol.dy))
    return float(theta[-1] - theta[0] - g * HALF_PI)


def _bracket(f, center: float, width: float, g: int, kind: AngularKind, h: float):
    lo, hi = center - width, center + width
    f_lo, f_hi = f(lo), f(hi)
    for _ in range(settings.BRACKET_EXPANSIONS):
        if f_lo <= 0.0 <= f_hi:
            return lo, hi, f_lo, f_hi
        if f_lo > 0.0:
            lo -= width
            f_lo = f(lo)
        if f_hi < 0.0:
            hi += width
            f_hi = f(hi)
        width *= 2.0
    if f_lo <= 0.0 <= f_hi:
        return lo, hi, f_lo, f_hi
    raise BracketingError(g=g, kind=kind.value, h=h, interval=(lo, hi))


def _starting_bracket(g, kind, h, potential_sign, r_guess):
    if r_guess is not None:
        return r_guess, 1e-3 * (1.0 + abs(r_guess))
    try:
        cv = charval_series(g, kind, h, potential_sign=potential_sign)
        return cv.R, max(10.0 * cv.error_estimate, 1e-6 * (1.0 + abs(cv.R)))
    except SeriesDivergenceError:
        lo, hi = g * g - 4.0 * h * h, g * g + 4.0 * h * h + 4.0
        return (lo + hi) / 2.0, (hi - lo) / 2.0


def charval_shoot(
    g: int,
    kind: AngularKind,
    h: float,
    tol: Optional[float] = None,
    potential_sign: int = 1,
    r_guess: Optional[float] = None,
) -> CharacteristicValue:
    """
    R tal que P cumple en π/2 la condicion de frontera de su paridad.

    Segunda especie: P(0)=1, P′(0)=0; primera especie: P(0)=0, P′(0)=1.
    La precision se verifica repitiendo el tiro con la mitad del paso.
    """
    kind = AngularKind(kind)
    check_order(g, kind)
    tol = settings.SHOOT_TOL if tol is None else tol
    if not tol > 0:
        raise InvalidParameterError(f"tol debe ser > 0 (tol={tol})", code="INVALID_TOL")
    if not math.isfinite(h) or h < 0:
        raise InvalidParameterError(f"h debe ser finito y ≥ 0 (h={h})", code="INVALID_H")
    if potential_sign not in (1, -1):
        raise InvalidParameterError("potential_sign debe ser +1 o -1", code="INVALID_SIGN")
    if h == 0:
        return CharacteristicValue(
            R=float(g * g), kind=kind, order_g=g, h=0.0, method="shooting",
            residual=0.0, potential_sign=potential_sign,
        )

    steps = steps_for(HALF_PI, _reference_omega(g, h))

    def mismatch(R: float, n: int = steps) -> float:
        return boundary_mismatch(R, g, kind, h, potential_sign, n)

    center, width = _starting_bracket(g, kind, h, potential_sign, r_guess)
    lo, hi, f_lo, f_hi = _bracket(mismatch, center, width, g, kind, h)
    if f_lo == 0.0:
        R = lo
    elif f_hi == 0.0:
        R = hi
    else:
        R = brentq(mismatch, lo, hi, xtol=1e-14 * max(1.0, abs(center)), rtol=4 * np.finfo(float).eps)

    d = 1e-6 * (1.0 + abs(R))
    slope = (mismatch(R + d) - mismatch(R - d)) / (2 * d)
    fine = mismatch(R, 2 * steps)
    delta = abs(fine) / slope if slope > 0 else math.inf
    if delta > tol:
        raise ShootingAccuracyError(
            message=(
                f"La tolerancia {tol:.3g} no se alcanza con el paso configurado "
                f"(g={g}, {kind.value}, h={h}, δR={delta:.3g})"
            ),
            details={"delta_R": delta, "steps": steps},
        )
    logger.debug("charval_shoot g=%s kind=%s h=%s R=%.15g δR=%.3g", g, kind.value, h, R, delta)
    return CharacteristicValue(
        R=float(R), kind=kind, order_g=g, h=h, method="shooting",
        error_estimate=delta, residual=abs(math.sin(fine)),
        potential_sign=potential_sign,
    )
