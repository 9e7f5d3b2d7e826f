## Ceros de J_n por biseccion sobre la serie ascendente en aritmetica decimal

from decimal import Decimal, localcontext

from membrana.exceptions import InvalidParameterError

DIGITS = 60
SCAN_STEP = Decimal("0.5")
BISECTIONS = 120


def _series(n: int, x: Decimal) -> Decimal:
    """Σ (−1)^k (x/2)^{2k+n} / (k!(k+n)!)"""
    half = x / 2
    term = half ** n
    for j in range(1, n + 1):
        term /= j
    total = term
    eps = Decimal(10) ** (-DIGITS)
    k = 0
    sq = half * half
    while True:
        k += 1
        term = -term * sq / (k * (k + n))
        total += term
        if abs(term) < eps and k > sq:
            return total


def bessel_zero(n: int, s: int) -> float:
    """s-esimo cero positivo de J_n (τ_s = j/2)."""
    if n < 0 or s < 1:
        raise InvalidParameterError(f"Se requiere n ≥ 0 y s ≥ 1 (n={n}, s={s})", code="INVALID_INDEX")
    with localcontext() as ctx:
        ctx.prec = DIGITS
        found = 0
        lo = SCAN_STEP
        f_lo = _series(n, lo)
        while True:
            hi = lo + SCAN_STEP
            f_hi = _series(n, hi)
            if f_lo * f_hi < 0:
                found += 1
                if found == s:
                    break
            lo, f_lo = hi, f_hi
        for _ in range(BISECTIONS):
            mid = (lo + hi) / 2
            f_mid = _series(n, mid)
            if f_lo * f_mid <= 0:
                hi = mid
            else:
                lo, f_lo = mid, f_mid
        return float((lo + hi) / 2)
