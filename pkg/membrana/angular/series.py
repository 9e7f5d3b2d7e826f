## Serie de perturbaciones para R y para P (desarrollo trigonometrico)

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

import numpy as np

from membrana.config import settings
from membrana.exceptions import InvalidParameterError, SeriesDivergenceError

from .schemas import AngularKind, CharacteristicValue, TrigSeriesRep, check_order

logger = logging.getLogger(__name__)

Harmonics = Dict[int, Fraction]


def _times_two_cos2(p: Harmonics, kind: AngularKind) -> Harmonics:
    """2cos2α · Σ c_n trig(nα), plegando armonicos negativos."""
    out: Harmonics = {}
    for n, c in p.items():
        for m in (n + 2, n - 2):
            sign = 1
            if m < 0:
                m = -m
                sign = 1 if kind is AngularKind.EVEN else -1
            if m == 0 and kind is AngularKind.ODD:
                continue
            out[m] = out.get(m, Fraction(0)) + sign * c
    return out


@lru_cache(maxsize=None)
def _perturbation(g: int, kind: AngularKind, order: int) -> Tuple[Tuple[Fraction, ...], Tuple[Harmonics, ...]]:
    """
    Recurrencia exacta en q = h².

    P = trig(gα) + Σ q^j p_j, R = g² + Σ r_j q^j, con p_j sin componente en
    trig(gα). En el orden j:

        p_j'' + g² p_j = 2cos2α·p_{j−1} − Σ_{i=1..j} r_i p_{j−i}

    y r_j es la componente en trig(gα) del primer termino.
    """
    g2 = g * g
    ps: List[Harmonics] = [{g: Fraction(1)}]
    rs: List[Fraction] = []
    for j in range(1, order + 1):
        rhs = _times_two_cos2(ps[j - 1], kind)
        r_j = rhs.pop(g, Fraction(0))
        rs.append(r_j)
        for i in range(1, j):
            for n, c in ps[j - i].items():
                rhs[n] = rhs.get(n, Fraction(0)) - rs[i - 1] * c
        p_j = {n: f / (g2 - n * n) for n, f in rhs.items() if f != 0}
        ps.append(p_j)
    return tuple(rs), tuple(ps)


def series_terms(g: int, kind: AngularKind, order: Optional[int] = None) -> Tuple[Fraction, ...]:
    """Coeficientes exactos r_1..r_order de R = g² + Σ r_j h^{2j}."""
    kind = AngularKind(kind)
    check_order(g, kind)
    order = order or settings.SERIES_ORDER
    return _perturbation(g, kind, order)[0]


def generic_charval_terms(g: int) -> Tuple[Fraction, ...]:
    """
    Forma cerrada general de R hasta h¹² (coeficientes de q¹..q⁶).

    Solo es valida cuando ningun armonico intermedio se pliega sobre g;
    con g ∈ {1, 2, 3} algun denominador se anula.
    """
    if g in (1, 2, 3):
        raise InvalidParameterError(
            f"La forma general no se aplica a g={g}", code="SINGULAR_GENERIC_SERIES"
        )
    G = Fraction(g * g)
    r2 = 1 / (2 * (G - 1))
    r4 = (5 * G + 7) / (32 * (G - 1) ** 3 * (G - 4))
    r6 = (9 * G * G + 58 * G + 29) / (64 * (G - 1) ** 5 * (G - 4) * (G - 9))
    zero = Fraction(0)
    return (zero, r2, zero, r4, zero, r6)


def _check_h(h: float) -> None:
    if not math.isfinite(h) or h < 0:
        raise InvalidParameterError(f"h debe ser finito y ≥ 0 (h={h})", code="INVALID_H")


def _numeric_terms(rs, q: float) -> List[float]:
    return [float(r) * q ** (j + 1) for j, r in enumerate(rs)]


def _check_decreasing(g: int, kind: AngularKind, h: float, terms: List[float]) -> None:
    nonzero = [abs(t) for t in terms if t != 0.0]
    for prev, cur in zip(nonzero, nonzero[1:]):
        if cur >= prev:
            raise SeriesDivergenceError(g=g, kind=kind.value, h=h, terms=terms)


def charval_series(
    g: int,
    kind: AngularKind,
    h: float,
    potential_sign: int = 1,
    order: Optional[int] = None,
) -> CharacteristicValue:
    """
    R truncado de la serie de perturbaciones.

    Los coeficientes salen siempre de la recurrencia exacta, tambien para
    g = 1..4: las tablas impresas (tables.PRINTED_CHARVAL) traen erratas en
    h⁸ y h¹⁰ para g = 3 y en h¹² para g = 4, ambas especies
    (tables.audit_printed_tables las enumera).

    La estimacion del error es el mayor de los dos terminos siguientes al
    ultimo retenido (uno de ellos puede ser nulo por paridad).
    """
    kind = AngularKind(kind)
    check_order(g, kind)
    _check_h(h)
    order = order or settings.SERIES_ORDER
    if h == 0:
        return CharacteristicValue(
            R=float(g * g), kind=kind, order_g=g, h=0.0, method="series",
            potential_sign=potential_sign,
        )

    rs = _perturbation(g, kind, order + 2)[0]
    q = potential_sign * h * h
    terms = _numeric_terms(rs, q)
    kept, omitted = terms[:order], terms[order:]
    _check_decreasing(g, kind, h, kept)

    R = float(g * g) + math.fsum(kept)
    error = max(abs(t) for t in omitted)
    logger.debug("charval_series g=%s kind=%s h=%s R=%.15g err=%.3g", g, kind.value, h, R, error)
    return CharacteristicValue(
        R=R, kind=kind, order_g=g, h=h, method="series",
        error_estimate=error, potential_sign=potential_sign,
    )


def trig_series(
    g: int,
    kind: AngularKind,
    h: float,
    potential_sign: int = 1,
    order: Optional[int] = None,
) -> TrigSeriesRep:
    """Desarrollo de P en cos nα (segunda especie) o sin nα (primera especie)."""
    kind = AngularKind(kind)
    check_order(g, kind)
    _check_h(h)
    order = order or settings.SERIES_ORDER
    parity = "cosine" if kind is AngularKind.EVEN else "sine"
    if h == 0:
        return TrigSeriesRep(base_order=g, parity=parity, terms=((g, 1.0),), h=0.0)

    rs, ps = _perturbation(g, kind, order)
    q = potential_sign * h * h
    _check_decreasing(g, kind, h, _numeric_terms(rs, q))

    coeffs: Dict[int, float] = {}
    for j, p in enumerate(ps):
        for n, c in p.items():
            coeffs[n] = coeffs.get(n, 0.0) + float(c) * q ** j
    terms = tuple(sorted((n, c) for n, c in coeffs.items() if c != 0.0))
    return TrigSeriesRep(base_order=g, parity=parity, terms=terms, h=h)


def trig_coefficient(g: int, kind: AngularKind, harmonic: int, power: int) -> Fraction:
    """Coeficiente exacto de trig(harmonic·α) en el termino q^power de P."""
    ps = _perturbation(g, AngularKind(kind), max(power, 1))[1]
    return ps[power].get(harmonic, Fraction(0))


def trig_eval(rep: TrigSeriesRep, alpha, derivative: int = 0) -> np.ndarray:
    """Evalua el desarrollo trigonometrico (o su derivada 1ª o 2ª)."""
    alpha = np.asarray(alpha, dtype=float)
    out = np.zeros_like(alpha)
    for n, c in rep.terms:
        phase = n * alpha
        if rep.parity == "cosine":
            base = (np.cos, lambda x: -np.sin(x), lambda x: -np.cos(x))[derivative]
        else:
            base = (np.sin, np.cos, lambda x: -np.sin(x))[derivative]
        out = out + c * n ** derivative * base(phase)
    return out
