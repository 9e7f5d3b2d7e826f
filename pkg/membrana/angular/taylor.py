## Serie de Taylor en α y residuo de periodicidad en α = π

import logging
import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import mpmath
from pydantic import BaseModel, ConfigDict

from membrana.config import settings
from membrana.exceptions import InvalidParameterError, SeriesTruncationError
from membrana.integrator import series_coefficients

from .schemas import AngularKind, CharacteristicValue, TaylorAlphaRep

logger = logging.getLogger(__name__)

# limite de terminos de la suma en α = π
PI_SERIES_CAP = 400


def potential_terms(M, q, n: int, alternating: bool = True, one=1.0) -> List:
    """
    Coeficientes de V en P'' = −V·P alrededor de 0, con V = M + 2q(1 − cos 2α).

    v_0 = M y v_{2k} = −2q·(−1)^k·2^{2k}/(2k)!; sin la alternancia de signos
    es el potencial radial (α → βi), y entonces v_0 = −M.
    """
    v = [M if alternating else -M]
    for k in range(1, n):
        if k % 2:
            v.append(0 * one)
            continue
        j = k // 2
        sign = (-1) ** j if alternating else -1
        v.append(-2 * q * sign * one * 2 ** k / math.factorial(k))
    return v


def taylor_coefficients(M, q, kind: AngularKind, n: int, alternating: bool = True, one=None) -> List:
    """Coeficientes con dominante 1 (α o 1) en la aritmetica de M y q (float, Fraction o mpf)."""
    if one is None:
        one = Fraction(1) if isinstance(M, Fraction) else 1.0
    v = potential_terms(M, q, n, alternating, one=one)
    y0, dy0 = (0 * one, one) if kind is AngularKind.ODD else (one, 0 * one)
    return series_coefficients(v, y0, dy0, n)


def taylor_alpha(cv: CharacteristicValue, n: int = 24, normalized: bool = True) -> TaylorAlphaRep:
    """
    P(α) = B′·(α − Mα³/3! + …) (primera especie) o D′·(1 − Mα²/2! + …).

    Los coeficientes salen de derivar la ecuacion repetidamente; B′ y D′ son
    los de la normalizacion de Fourier de build_angular.
    """
    if n < 2:
        raise InvalidParameterError(f"Se requieren al menos 2 coeficientes (n={n})", code="INVALID_TERMS")
    coeffs = taylor_coefficients(float(cv.M), float(cv.q), cv.kind, n)
    for k, value in enumerate(coeffs):
        if not math.isfinite(value) or abs(value) > settings.SERIES_OVERFLOW:
            raise InvalidParameterError(
                f"Coeficiente de Taylor {k} fuera de rango", code="TAYLOR_OVERFLOW"
            )
    scale = 1.0
    if normalized:
        from .functions import build_angular

        scale = build_angular(cv).scale
    return TaylorAlphaRep(kind=cv.kind, coeffs=tuple(float(c) for c in coeffs), scale=scale)


def taylor_eval(rep: TaylorAlphaRep, alpha: float) -> float:
    return rep.scale * sum(c * alpha ** k for k, c in enumerate(rep.coeffs))


def periodicity_residual(
    h: float,
    R_trial: float,
    kind: AngularKind,
    potential_sign: int = 1,
) -> float:
    """
    Serie de Taylor en α sumada en α = π (dominante 1).

    Primera especie: P(π). Segunda especie: dP/dα(π), que se anula para
    toda g cuando R es admisible.
    """
    kind = AngularKind(kind)
    q = potential_sign * h * h
    omega = math.sqrt(abs(R_trial) + 2 * abs(q) + 1.0)
    # digitos extra para la cancelacion de terminos de orden e^{ωπ}
    dps = 30 + int(omega * math.pi / math.log(10)) + 1
    with mpmath.workdps(dps):
        M = mpmath.mpf(R_trial) - 2 * mpmath.mpf(q)
        coeffs = taylor_coefficients(M, mpmath.mpf(q), kind, PI_SERIES_CAP, one=mpmath.mpf(1))
        pi = mpmath.pi
        if kind is AngularKind.ODD:
            terms = [c * pi ** k for k, c in enumerate(coeffs)]
        else:
            terms = [k * c * pi ** (k - 1) for k, c in enumerate(coeffs) if k > 0]
        peak = max(abs(t) for t in terms)
        threshold = peak * mpmath.mpf(10) ** (-(dps - 5))
        if any(abs(t) > threshold for t in terms[-4:]):
            raise SeriesTruncationError(what="taylor_alpha", max_terms=PI_SERIES_CAP, x=math.pi)
        return float(mpmath.fsum(terms))


class TaylorDiscrepancy(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: AngularKind
    power: int
    printed: str
    generated: str


# formas impresas (en α, con M = R − 2h²) de los coeficientes·n! hasta α⁷
PrintedForm = Callable[[Fraction, Fraction], Fraction]
PRINTED_TAYLOR: Dict[AngularKind, Dict[int, PrintedForm]] = {
    AngularKind.ODD: {
        1: lambda M, h: Fraction(1),
        3: lambda M, h: -M,
        5: lambda M, h: M * M - 24 * h ** 2,
        7: lambda M, h: -(M ** 3 - 104 * h ** 2 * M - 160 * h ** 2),
    },
    AngularKind.EVEN: {
        0: lambda M, h: Fraction(1),
        2: lambda M, h: -M,
        4: lambda M, h: M * M - 8 * h ** 2,
        6: lambda M, h: -(M ** 3 - 56 * h * M - 32 * h ** 3),
    },
}

AUDIT_POINTS: Sequence = (
    (Fraction(3, 2), Fraction(1, 3)),
    (Fraction(-2, 5), Fraction(7, 4)),
    (Fraction(5), Fraction(2, 3)),
)


def audit_printed_taylor(points: Optional[Sequence] = None) -> List[TaylorDiscrepancy]:
    """Compara las formas impresas con la recurrencia exacta en varios (M, h) racionales."""
    found: List[TaylorDiscrepancy] = []
    for kind, forms in PRINTED_TAYLOR.items():
        for power, form in forms.items():
            for M, h in points or AUDIT_POINTS:
                generated = taylor_coefficients(M, h * h, kind, 8)[power] * math.factorial(power)
                printed = form(M, h)
                if printed != generated:
                    logger.warning(
                        "forma de Taylor impresa %s α^%s: impreso %s, recurrencia %s (M=%s, h=%s)",
                        kind.value, power, printed, generated, M, h,
                    )
                    found.append(TaylorDiscrepancy(
                        kind=kind, power=power, printed=str(printed), generated=str(generated),
                    ))
                    break
    return found
