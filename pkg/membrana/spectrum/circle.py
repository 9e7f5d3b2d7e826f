## Membrana circular de referencia (limite c → 0)

import logging
import math
from typing import List, Tuple

import mpmath
from scipy.optimize import brentq

from membrana.exceptions import InvalidParameterError

from .schemas import CircleMode

logger = logging.getLogger(__name__)

# separacion entre raices ≈ π/2; el barrido usa un paso bastante menor
TAU_STEP = 0.25


def boundary_series(n: int, tau: float) -> Tuple[float, float]:
    """
    Σ_k (−1)^k τ^{2k} / (k!(n+k)!) y una cota de la cola.

    Es J_n(2τ)/τⁿ. Una vez que los terminos decrecen, la serie es alternada
    y la cola no supera al primer termino omitido.
    """
    dps = 20 + int(2 * tau / math.log(10)) + 1
    with mpmath.workdps(dps):
        t = mpmath.mpf(tau) ** 2
        term = 1 / mpmath.factorial(n)
        total = mpmath.mpf(0)
        peak = abs(term)
        k = 0
        while True:
            total += term
            k += 1
            nxt = -term * t / (k * (n + k))
            peak = max(peak, abs(nxt))
            if abs(nxt) < abs(term) and abs(nxt) < peak * mpmath.mpf(10) ** (-(dps - 2)):
                return float(total), float(abs(nxt))
            term = nxt


def circle_roots(n: int, count: int) -> List[float]:
    """Primeras `count` raices τ > 0 de la serie de contorno de orden n."""
    if n < 0:
        raise InvalidParameterError(f"El orden debe ser ≥ 0 (n={n})", code="INVALID_ORDER")
    if count < 1:
        raise InvalidParameterError(f"count debe ser ≥ 1 (count={count})", code="INVALID_COUNT")

    def value(tau: float) -> float:
        return boundary_series(n, tau)[0]

    roots: List[float] = []
    lo, f_lo = TAU_STEP, value(TAU_STEP)
    while len(roots) < count:
        hi = lo + TAU_STEP
        f_hi, bound = boundary_series(n, hi)
        if abs(f_hi) > bound and f_lo * f_hi < 0:
            roots.append(brentq(value, lo, hi, xtol=1e-15, rtol=1e-15))
        lo, f_lo = hi, f_hi
    return roots


def circle_modes(radius: float, n: int, count: int) -> List[CircleMode]:
    """Modos (n, s) del circulo de radio dado, λ_s = τ_s / radio."""
    if not radius > 0:
        raise InvalidParameterError(f"El radio debe ser > 0 (r={radius})", code="INVALID_RADIUS")
    return [
        CircleMode(bessel_order=n, root_index=s, tau=tau, radius=radius)
        for s, tau in enumerate(circle_roots(n, count), start=1)
    ]


def circle_nodal_radii(radius: float, n: int, s: int) -> List[float]:
    """Radios de los s − 1 circulos nodales del modo (n, s): τ_k / λ_s."""
    if s < 1:
        raise InvalidParameterError(f"s debe ser ≥ 1 (s={s})", code="INVALID_INDEX")
    taus = circle_roots(n, s)
    lam = taus[-1] / radius
    return [tau / lam for tau in taus[:-1]]
