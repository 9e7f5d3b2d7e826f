## Series de potencias en ν = cos α y ν′ = sin α

import logging
from typing import Optional, Tuple

import numpy as np

from membrana.config import settings
from membrana.exceptions import (
    InvalidParameterError,
    PowerSeriesOverflowError,
    SeriesTruncationError,
)

from .schemas import AngularKind, CharacteristicValue, PowerSeriesRep

logger = logging.getLogger(__name__)

# terminos consecutivos pequeños que exige la convergencia
CONVERGED_RUN = 3


def series_parity(cv: CharacteristicValue, variable: str) -> str:
    """
    Paridad de la serie segun la especie y el orden.

    En ν′ la paridad es la de la especie; en ν la decide el signo de
    P(π − α) = ±P(α).
    """
    even_kind = cv.kind is AngularKind.EVEN
    if variable == "nu_prime":
        return "even" if even_kind else "odd"
    even_g = cv.order_g % 2 == 0
    return "even" if even_kind == even_g else "odd"


def power_coeffs(
    cv: CharacteristicValue,
    variable: str,
    n: Optional[int] = None,
) -> PowerSeriesRep:
    """
    Coeficientes de la serie, coeficiente dominante 1.

    ν′:  c_{k+2} = [(k² − m′)c_k − 4h²c_{k−2}] / [(k+1)(k+2)],  m′ = R − 2h²
    ν :  c_{k+2} = [(k² − m )c_k + 4h²c_{k−2}] / [(k+1)(k+2)],  m  = R + 2h²

    con h² sustituido por −h² si el potencial tiene el signo opuesto.
    """
    if variable not in ("nu", "nu_prime"):
        raise InvalidParameterError(f"Variable desconocida: {variable}", code="INVALID_VARIABLE")
    n = settings.SERIES_MAX_TERMS if n is None else n
    if n < 2:
        raise InvalidParameterError(f"Se requieren al menos 2 terminos (n={n})", code="INVALID_TERMS")

    parity = series_parity(cv, variable)
    if variable == "nu_prime":
        m, four_q = cv.m_minus, -4.0 * cv.q
    else:
        m, four_q = cv.m_plus, 4.0 * cv.q

    k = 0 if parity == "even" else 1
    prev, cur = 0.0, 1.0
    coeffs = [cur]
    while len(coeffs) < n:
        nxt = ((k * k - m) * cur + four_q * prev) / ((k + 1) * (k + 2))
        if not np.isfinite(nxt) or abs(nxt) > settings.SERIES_OVERFLOW:
            raise PowerSeriesOverflowError(
                message=f"Coeficiente {len(coeffs)} de la serie en {variable} excede la cota",
                details={"index": len(coeffs), "bound": settings.SERIES_OVERFLOW},
            )
        coeffs.append(nxt)
        prev, cur = cur, nxt
        k += 2
    return PowerSeriesRep(variable=variable, parity=parity, coeffs=tuple(coeffs))


def recurrence_residual(cv: CharacteristicValue, rep: PowerSeriesRep) -> float:
    """Mayor residuo relativo de la recurrencia sobre los coeficientes dados."""
    if rep.variable == "nu_prime":
        m, four_q = cv.m_minus, -4.0 * cv.q
    else:
        m, four_q = cv.m_plus, 4.0 * cv.q
    c = (0.0,) + rep.coeffs
    offset = 0 if rep.parity == "even" else 1
    worst = 0.0
    for s in range(1, len(c) - 1):
        k = 2 * (s - 1) + offset
        lhs = (k + 1) * (k + 2) * c[s + 1]
        rhs = (k * k - m) * c[s] + four_q * c[s - 1]
        scale = max(abs(lhs), abs((k * k - m) * c[s]), abs(four_q * c[s - 1]), 1e-300)
        worst = max(worst, abs(lhs - rhs) / scale)
    return worst


def evaluate_power(rep: PowerSeriesRep, x, tol: Optional[float] = None) -> Tuple[np.ndarray, np.ndarray]:
    """
    (y, dy/dx) de la serie en x, |x| < 1.

    Converge cuando hay CONVERGED_RUN terminos seguidos por debajo de
    tol·Σ|terminos|; si no ocurre dentro de los coeficientes disponibles
    se informa el error en lugar de truncar.
    """
    tol = settings.SERIES_TOL if tol is None else tol
    x = np.atleast_1d(np.asarray(x, dtype=float))
    c = np.asarray(rep.coeffs)
    offset = 0 if rep.parity == "even" else 1
    exps = 2 * np.arange(len(c)) + offset

    terms = c[None, :] * x[:, None] ** exps[None, :]
    scale = np.sum(np.abs(terms), axis=1)
    small = np.abs(terms) <= tol * scale[:, None]
    window = np.ones(CONVERGED_RUN, dtype=int)
    runs = np.array([np.convolve(row, window, mode="valid").max() for row in small.astype(int)])
    bad = runs < CONVERGED_RUN
    if np.any(bad):
        worst = float(x[bad][np.argmax(np.abs(x[bad]))])
        raise SeriesTruncationError(what=rep.variable, max_terms=len(c), x=worst)

    dexps = np.maximum(exps - 1, 0)
    dterms = (c * exps)[None, :] * x[:, None] ** dexps[None, :]
    return terms.sum(axis=1), dterms.sum(axis=1)


def sign_variations(rep: PowerSeriesRep) -> int:
    """Cambios de signo en la sucesion de coeficientes (los nulos se omiten)."""
    signs = [np.sign(c) for c in rep.coeffs if c != 0.0]
    return int(sum(1 for a, b in zip(signs, signs[1:]) if a != b))
