## Serie de Taylor de Q en β alrededor del segmento focal

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from membrana.angular.functions import build_angular
from membrana.angular.schemas import CharacteristicValue
from membrana.angular.taylor import taylor_coefficients
from membrana.config import settings
from membrana.exceptions import InvalidParameterError, PowerSeriesOverflowError, SeriesTruncationError

from .schemas import RadialTaylor

logger = logging.getLogger(__name__)

CONVERGED_RUN = 3


def _check_overflow(coeffs: Sequence[float], what: str) -> None:
    for k, value in enumerate(coeffs):
        if not math.isfinite(value) or abs(value) > settings.SERIES_OVERFLOW:
            raise PowerSeriesOverflowError(
                message=f"Coeficiente {k} de {what} excede la cota",
                details={"index": k, "bound": settings.SERIES_OVERFLOW},
            )


def radial_taylor_coeffs(cv: CharacteristicValue, n: int = 40, normalized: bool = True) -> RadialTaylor:
    """
    Q de d²Q/dβ² = T·Q con T = R − h²(e^{2β} + e^{−2β}).

    Es la serie en α con los signos alternos suprimidos (α → βi); B y D
    son los de la funcion angular normalizada.
    """
    if n < 2:
        raise InvalidParameterError(f"Se requieren al menos 2 coeficientes (n={n})", code="INVALID_TERMS")
    coeffs = [float(c) for c in taylor_coefficients(float(cv.M), float(cv.q), cv.kind, n, alternating=False)]
    _check_overflow(coeffs, "la serie de Taylor radial")
    potential = (cv.M,) + tuple(-(2.0 ** (2 * i + 1)) * cv.q for i in range(1, n // 2))
    norm = build_angular(cv).scale if normalized else 1.0
    return RadialTaylor(kind=cv.kind, coeffs=tuple(coeffs), norm=norm, potential=potential)


def terms_needed(cv: CharacteristicValue, beta_max: float) -> int:
    """Terminos suficientes para sumar hasta beta_max: (ωβ)ⁿ/n! despreciable."""
    omega = math.sqrt(abs(cv.R) + 2 * abs(cv.q) * math.cosh(2 * beta_max) + 1.0)
    return int(3 * omega * beta_max) + 40


def taylor_sum(coeffs: Sequence[float], x, tol: Optional[float] = None, what: str = "taylor") -> Tuple[np.ndarray, np.ndarray]:
    """(Σ c_n xⁿ, Σ n c_n xⁿ⁻¹) con comprobacion de cola."""
    tol = settings.SERIES_TOL if tol is None else tol
    x = np.atleast_1d(np.asarray(x, dtype=float))
    c = np.asarray(coeffs, dtype=float)
    k = np.arange(len(c))
    terms = c[None, :] * x[:, None] ** k[None, :]
    scale = np.sum(np.abs(terms), axis=1)
    small = (np.abs(terms) <= tol * scale[:, None]).astype(int)
    window = np.ones(CONVERGED_RUN, dtype=int)
    runs = np.array([np.convolve(row, window, mode="valid").max() for row in small])
    if np.any(runs < CONVERGED_RUN):
        raise SeriesTruncationError(what=what, max_terms=len(c), x=float(np.max(np.abs(x))))
    dterms = (c * k)[None, :] * x[:, None] ** np.maximum(k - 1, 0)[None, :]
    return terms.sum(axis=1), dterms.sum(axis=1)
