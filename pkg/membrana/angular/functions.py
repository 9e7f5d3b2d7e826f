## Funcion angular evaluable P(α) (valor y derivada)

import logging
import math
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict
from scipy.optimize import brentq

from membrana.config import settings
from membrana.exceptions import InvalidParameterError, RepresentationError

from .power import evaluate_power, power_coeffs
from .schemas import AngularKind, CharacteristicValue, PowerSeriesRep

logger = logging.getLogger(__name__)

TWO_PI = 2 * math.pi
QUARTER = math.pi / 4
MATCH_TOL = 1e-9


def _ls_ratio(num_v, num_d, den_v, den_d):
    """Factor A que mejor cumple A·(den) = (num) en valor y derivada."""
    return (num_v * den_v + num_d * den_d) / (den_v * den_v + den_d * den_d)


class AngularFunction:
    """
    P(α) a partir de dos series: en ν′ = sin α para el angulo reducido
    en [0, π/4] y en ν = cos α para [π/4, π/2], unidas por el factor A.
    El resto de α se obtiene por las reglas de signo de cada cuadrante.

    La escala deja en 1 el coeficiente de cos gα (o sin gα) del desarrollo
    de Fourier.
    """

    def __init__(self, cv: CharacteristicValue):
        self.cv = cv
        self.nu_prime: PowerSeriesRep = power_coeffs(cv, "nu_prime")
        self.nu: PowerSeriesRep = power_coeffs(cv, "nu")
        self.match = self._ratio_at(QUARTER)
        self.scale = 1.0
        self.scale = 1.0 / self.fourier_coefficient()

    @property
    def g(self) -> int:
        return self.cv.order_g

    @property
    def kind(self) -> AngularKind:
        return self.cv.kind

    def _branches(self, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
        sp, dsp = evaluate_power(self.nu_prime, np.sin(r))
        cn, dcn = evaluate_power(self.nu, np.cos(r))
        return sp, dsp * np.cos(r), cn, -dcn * np.sin(r)

    def _ratio_at(self, r: float) -> float:
        sp, dsp, cn, dcn = (float(v[0]) for v in self._branches(np.array([r])))
        if cn == 0.0 and dcn == 0.0:
            raise RepresentationError(
                message="La serie en ν se anula con su derivada en el punto de union",
                details={"alpha": r},
            )
        return _ls_ratio(sp, dsp, cn, dcn)

    def _base(self, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """Valor y derivada (sin escala) para r ∈ [0, π/2]."""
        y = np.empty_like(r)
        dy = np.empty_like(r)
        low = r <= QUARTER
        if np.any(low):
            sp, dsp = evaluate_power(self.nu_prime, np.sin(r[low]))
            y[low] = sp
            dy[low] = dsp * np.cos(r[low])
        if np.any(~low):
            cn, dcn = evaluate_power(self.nu, np.cos(r[~low]))
            y[~low] = self.match * cn
            dy[~low] = -self.match * dcn * np.sin(r[~low])
        return y, dy

    def evaluate(self, alpha) -> Tuple[np.ndarray, np.ndarray]:
        """(P, dP/dα) en cualquier α real."""
        alpha = np.atleast_1d(np.asarray(alpha, dtype=float))
        if not np.all(np.isfinite(alpha)):
            raise InvalidParameterError("α debe ser finito", code="NON_FINITE")
        a = np.mod(alpha, TWO_PI)
        sign_v = np.ones_like(a)
        sign_d = np.ones_like(a)

        # P(−α) = ±P(α)
        parity = 1.0 if self.kind is AngularKind.EVEN else -1.0
        upper = a > math.pi
        a = np.where(upper, TWO_PI - a, a)
        sign_v = np.where(upper, parity, sign_v)
        sign_d = np.where(upper, -parity, sign_d)

        # P(π − α) = ±P(α), con el signo de cos g(π−α) o sin g(π−α)
        mirror = (-1.0) ** self.g if self.kind is AngularKind.EVEN else (-1.0) ** (self.g + 1)
        second = a > math.pi / 2
        a = np.where(second, math.pi - a, a)
        sign_v = np.where(second, sign_v * mirror, sign_v)
        sign_d = np.where(second, -sign_d * mirror, sign_d)

        y, dy = self._base(a)
        return self.scale * sign_v * y, self.scale * sign_d * dy

    def __call__(self, alpha) -> np.ndarray:
        return self.evaluate(alpha)[0]

    def derivative(self, alpha) -> np.ndarray:
        return self.evaluate(alpha)[1]

    def second_derivative(self, alpha) -> np.ndarray:
        """De la propia ecuacion: P'' = −(R − 2h²cos 2α)P."""
        alpha = np.asarray(alpha, dtype=float)
        return -(self.cv.R - 2 * self.cv.q * np.cos(2 * alpha)) * self(alpha)

    def fourier_coefficient(self, order: int = None) -> float:
        """Coeficiente de cos gα (o sin gα); integra [0, π/4] y [π/4, π/2] por separado."""
        order = order or settings.QUAD_ORDER
        x, w = np.polynomial.legendre.leggauss(order)
        total = 0.0
        for lo, hi in ((0.0, QUARTER), (QUARTER, math.pi / 2)):
            nodes = 0.5 * (hi - lo) * x + 0.5 * (hi + lo)
            trig = np.cos(self.g * nodes) if self.kind is AngularKind.EVEN else np.sin(self.g * nodes)
            values = self.scale * self._base(nodes)[0]
            total += 0.5 * (hi - lo) * float(np.dot(w, values * trig))
        factor = 2.0 / math.pi if self.g == 0 else 4.0 / math.pi
        return factor * total


@lru_cache(maxsize=1024)
def build_angular(cv: CharacteristicValue) -> AngularFunction:
    return AngularFunction(cv)


def angular_eval(cv: CharacteristicValue, alpha):
    """P(α); escalar si α es escalar."""
    values = build_angular(cv)(alpha)
    return float(values[0]) if np.ndim(alpha) == 0 else values


class MatchReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    factor: float
    at_30: float
    at_60: float

    @property
    def spread(self) -> float:
        base = abs(self.factor) or 1.0
        return max(abs(self.at_30 - self.factor), abs(self.at_60 - self.factor)) / base


def match_report(cv: CharacteristicValue) -> MatchReport:
    fn = build_angular(cv)
    return MatchReport(
        factor=fn.match,
        at_30=fn._ratio_at(math.pi / 6),
        at_60=fn._ratio_at(math.pi / 3),
    )


def match_factor(cv: CharacteristicValue, tol: float = MATCH_TOL) -> float:
    """
    Factor A con A·(serie en ν) = (serie en ν′) en 45°.

    Si los factores en 30° y 60° no coinciden, R no es un valor caracteristico.
    """
    report = match_report(cv)
    if report.spread > tol:
        raise RepresentationError(
            message=(
                f"Las series en ν y ν′ no son proporcionales (dispersion {report.spread:.3g}); "
                "R no corresponde a esta rama"
            ),
            code="MATCH_INCONSISTENT",
            details=report.model_dump(),
        )
    return report.factor


def find_roots(fn, lo: float, hi: float, points: int = None) -> List[float]:
    """
    Ceros de fn en [lo, hi) por barrido de signos y refinamiento con brentq.

    Las muestras exactamente nulas cuentan como raiz sin contar ademas el
    cambio de signo que las rodea.
    """
    points = points or settings.SCAN_POINTS
    grid = np.linspace(lo, hi, points + 1)[:-1]
    values = np.asarray(fn(grid), dtype=float)
    roots: List[float] = []
    last_x, last_v = None, 0.0
    for x, v in zip(grid, values):
        if v == 0.0:
            roots.append(float(x))
            last_x, last_v = None, 0.0
            continue
        if last_x is not None and last_v * v < 0:
            roots.append(brentq(lambda t: float(np.asarray(fn(t)).ravel()[0]), last_x, x, xtol=1e-14))
        last_x, last_v = x, v
    # ultimo tramo hasta hi (excluido)
    end = float(np.asarray(fn(hi)).ravel()[0])
    if last_x is not None and last_v * end < 0:
        root = brentq(lambda t: float(np.asarray(fn(t)).ravel()[0]), last_x, hi, xtol=1e-14)
        # un cero en hi por redondeo pertenece al tramo siguiente
        if root < hi - 1e-12 * max(1.0, abs(hi)):
            roots.append(root)
    return roots


def count_roots(cv: CharacteristicValue, interval: Tuple[float, float]) -> int:
    """Numero de ceros de P en [α_lo, α_hi)."""
    lo, hi = interval
    if not (0.0 <= lo < hi <= TWO_PI):
        raise InvalidParameterError(
            f"El intervalo debe estar contenido en [0, 2π): {interval}", code="INVALID_INTERVAL"
        )
    return len(find_roots(build_angular(cv), lo, hi))
