## Funcion radial Q(β): Taylor en β, serie en ρ′, continuacion y forma de Bessel

import logging
import math
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from scipy.special import jv, jvp

from membrana.angular.functions import build_angular
from membrana.angular.power import evaluate_power
from membrana.angular.schemas import AngularKind, CharacteristicValue, PowerSeriesRep
from membrana.config import settings
from membrana.coords.schemas import EllipseGeometry
from membrana.exceptions import InvalidParameterError, RepresentationError, SeriesTruncationError
from membrana.integrator import TaylorSolution, radial_potential, solve

from .schemas import RadialValue
from .taylor import radial_taylor_coeffs, taylor_sum, terms_needed

logger = logging.getLogger(__name__)

# ρ′ = c: punto donde se ajusta la escala de la forma de Bessel
BESSEL_MATCH_BETA = math.asinh(1.0)


class RadialFunction:
    """
    Q(β) con la normalizacion heredada de P (α → βi).

    Hasta sinh β = RADIAL_SWITCH_SINH se suma la serie de Taylor en β; mas
    alla se continua con el integrador de Taylor a partir de ese punto.
    """

    def __init__(self, cv: CharacteristicValue):
        self.cv = cv
        self.switch = math.asinh(settings.RADIAL_SWITCH_SINH)
        self.taylor = radial_taylor_coeffs(cv, terms_needed(cv, self.switch))
        self._continuation: Optional[TaylorSolution] = None

    @property
    def kind(self) -> AngularKind:
        return self.cv.kind

    @property
    def norm(self) -> float:
        return self.taylor.norm

    def taylor_eval(self, beta) -> Tuple[np.ndarray, np.ndarray]:
        beta = np.atleast_1d(np.asarray(beta, dtype=float))
        limit = float(np.max(np.abs(beta))) if beta.size else 0.0
        coeffs = self.taylor.coeffs
        if limit > self.switch:
            coeffs = radial_taylor_coeffs(self.cv, terms_needed(self.cv, limit), normalized=False).coeffs
        y, dy = taylor_sum(coeffs, beta, what="taylor_beta")
        return self.norm * y, self.norm * dy

    def _continued(self, beta_max: float) -> TaylorSolution:
        sol = self._continuation
        if sol is None or sol.nodes[-1] < beta_max:
            # extremo redondeado: la malla depende solo de (switch, extremo)
            beta_max = math.ceil(beta_max * 4) / 4
            y0, dy0 = self.taylor_eval(self.switch)
            omega = math.sqrt(abs(self.cv.R) + 2 * abs(self.cv.q) * math.cosh(2 * beta_max))
            sol = solve(
                radial_potential(self.cv.R, self.cv.q),
                self.switch, beta_max, float(y0[0]), float(dy0[0]), omega,
            )
            self._continuation = sol
        return sol

    def evaluate(self, beta) -> Tuple[np.ndarray, np.ndarray]:
        """(Q, dQ/dβ) para β ≥ 0."""
        beta = np.atleast_1d(np.asarray(beta, dtype=float))
        if np.any(beta < 0) or not np.all(np.isfinite(beta)):
            raise InvalidParameterError("β debe ser finito y ≥ 0", code="INVALID_BETA")
        y = np.empty_like(beta)
        dy = np.empty_like(beta)
        near = beta <= self.switch
        if np.any(near):
            y[near], dy[near] = self.taylor_eval(beta[near])
        if np.any(~near):
            far = beta[~near]
            y[~near], dy[~near] = self._continued(float(far.max()))(far)
        return y, dy

    def __call__(self, beta) -> np.ndarray:
        return self.evaluate(beta)[0]

    def rho_series(self) -> PowerSeriesRep:
        """Serie en ν′ de P con signos alternos: serie en sinh β = ρ′/c."""
        rep = build_angular(self.cv).nu_prime
        alternated = tuple(c * (-1) ** s for s, c in enumerate(rep.coeffs))
        return PowerSeriesRep(variable="nu_prime", parity=rep.parity, coeffs=alternated)


@lru_cache(maxsize=1024)
def build_radial(cv: CharacteristicValue) -> RadialFunction:
    return RadialFunction(cv)


def rho_series_eval(cv: CharacteristicValue, beta) -> Tuple[np.ndarray, np.ndarray]:
    """
    Q por la serie en ρ′ (valida para ρ′ < c):

    Q₂ = C·Σ (−1)^s k′_s sinh^{2s}β,  Q₁ = C·Σ (−1)^s a′_s sinh^{2s+1}β.
    """
    fn = build_radial(cv)
    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    x = np.sinh(beta)
    if np.any(np.abs(x) >= 1.0):
        raise RepresentationError(
            message="La serie en ρ′ solo converge para ρ′ < c",
            code="RHO_SERIES_RANGE",
            details={"max_sinh": float(np.max(np.abs(x)))},
        )
    y, dy = evaluate_power(fn.rho_series(), x)
    scale = build_angular(cv).scale
    return scale * y, scale * dy * np.cosh(beta)


def bessel_form_bound(c: float, beta: float) -> float:
    """Factor despreciado c⁴/(16z⁴) con z = c·e^β/2."""
    z = c * math.exp(beta) / 2
    return c ** 4 / (16 * z ** 4)


def bessel_form_eval(cv: CharacteristicValue, beta, geometry: EllipseGeometry) -> Tuple[np.ndarray, np.ndarray]:
    """
    Aproximacion Q ≈ K·J_n(2λz), z = c·e^β/2, n = √R (orden no entero).

    Solo es una aproximacion: K se fija igualando valor y derivada con Q
    en ρ′ = c y no interviene en la busqueda de λ.
    """
    if cv.R < 0:
        raise RepresentationError(message="La forma de Bessel requiere R ≥ 0", code="BESSEL_FORM_RANGE")
    order = math.sqrt(cv.R)
    lam = cv.h / geometry.c

    def form(b):
        arg = 2 * lam * (geometry.c * np.exp(b) / 2)
        return jv(order, arg), jvp(order, arg) * arg

    beta = np.atleast_1d(np.asarray(beta, dtype=float))
    q_m, dq_m = build_radial(cv).evaluate(BESSEL_MATCH_BETA)
    j_m, dj_m = form(BESSEL_MATCH_BETA)
    K = float((q_m[0] * j_m + dq_m[0] * dj_m) / (j_m * j_m + dj_m * dj_m))
    j, dj = form(beta)
    return K * j, K * dj


def radial_eval(
    cv: CharacteristicValue,
    beta: float,
    geometry: Optional[EllipseGeometry] = None,
    method: str = "auto",
) -> RadialValue:
    """
    Q(β) y dQ/dβ.

    method: "auto" (Taylor y continuacion), "taylor", "rho" o "bessel"
    (esta ultima necesita la geometria).
    """
    if not math.isfinite(beta) or beta < 0:
        raise InvalidParameterError(f"β debe ser finito y ≥ 0 (β={beta})", code="INVALID_BETA")
    try:
        if method == "auto":
            y, dy = build_radial(cv).evaluate(beta)
        elif method == "taylor":
            y, dy = build_radial(cv).taylor_eval(beta)
        elif method == "rho":
            y, dy = rho_series_eval(cv, beta)
        elif method == "bessel":
            if geometry is None:
                raise InvalidParameterError("La forma de Bessel necesita la geometria", code="MISSING_GEOMETRY")
            y, dy = bessel_form_eval(cv, beta, geometry)
        else:
            raise InvalidParameterError(f"Metodo desconocido: {method}", code="INVALID_METHOD")
    except SeriesTruncationError as exc:
        raise RepresentationError(
            message=f"Sin representacion convergente en β={beta} ({method})",
            code="NO_REPRESENTATION",
            details={"beta": beta, "method": method, "cause": exc.message},
        )
    return RadialValue(Q=float(y[0]), dQ_dbeta=float(dy[0]), method=method)


def radial_static(g: int, kind: AngularKind, c: float, rho: float, form: str = "rho_prime") -> float:
    """
    Solucion exacta con λ = 0: s^g ∓ c^{2g}·s^{−g}, s = ρ′ + √(ρ′² + c²) = c·e^β.

    Signo − para la primera especie (Q nula en el segmento focal), + para la
    segunda. Con form="rho" el argumento es el semieje mayor ρ ≥ c.
    """
    kind = AngularKind(kind)
    if g < 0 or (kind is AngularKind.ODD and g < 1):
        raise InvalidParameterError(f"Orden invalido g={g} para {kind.value}", code="INVALID_ORDER")
    if c < 0 or not math.isfinite(rho):
        raise InvalidParameterError("c debe ser ≥ 0 y ρ finito", code="INVALID_PARAMETER")
    if form == "rho":
        if rho < c:
            raise InvalidParameterError(f"ρ debe ser ≥ c (ρ={rho}, c={c})", code="RHO_BELOW_FOCAL")
        s = rho + math.sqrt(rho * rho - c * c)
    elif form == "rho_prime":
        s = rho + math.sqrt(rho * rho + c * c)
    else:
        raise InvalidParameterError(f"Forma desconocida: {form}", code="INVALID_FORM")
    if s == 0.0:
        return 0.0 if kind is AngularKind.ODD or g > 0 else 2.0
    sign = -1.0 if kind is AngularKind.ODD else 1.0
    return s ** g + sign * c ** (2 * g) * s ** (-g)
