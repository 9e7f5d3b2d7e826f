## Barrido en λ con deteccion de cambios de signo

import logging
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Tuple

from scipy.optimize import brentq

from membrana.angular.schemas import AngularKind, CharacteristicValue
from membrana.angular.shooting import charval_shoot
from membrana.config import settings
from membrana.exceptions import ScanExhaustedError

logger = logging.getLogger(__name__)

# cuantizacion de h en la cache de R
H_DIGITS = 12


@lru_cache(maxsize=None)
def _charval_cached(kind: AngularKind, g: int, h_key: float) -> CharacteristicValue:
    return charval_shoot(g, kind, h_key)


def charval_at(kind: AngularKind, g: int, h: float) -> CharacteristicValue:
    """R(h) memorizado; la cache solo crece y cada clave tiene un unico valor."""
    return _charval_cached(AngularKind(kind), g, round(h, H_DIGITS))


class _Memo:
    def __init__(self, fn: Callable[[float], float]):
        self.fn = fn
        self.values: Dict[float, float] = {}

    def __call__(self, x: float) -> float:
        if x not in self.values:
            self.values[x] = self.fn(x)
        return self.values[x]


def _brackets(fn, start: float, step: float, ceiling: float, count: int) -> List[Tuple[float, float]]:
    found: List[Tuple[float, float]] = []
    x_prev, f_prev = start, fn(start)
    k = 1
    while len(found) < count:
        x = start + k * step
        if x > ceiling:
            raise ScanExhaustedError(found=len(found), wanted=count, ceiling=ceiling)
        fx = fn(x)
        if fx == 0.0:
            found.append((x, x))
        elif f_prev != 0.0 and f_prev * fx < 0:
            found.append((x_prev, x))
        x_prev, f_prev = x, fx
        k += 1
    return found


def scan_roots(
    fn: Callable[[float], float],
    step: float,
    ceiling: float,
    count: int,
    start: float = 0.0,
    rescan: Optional[bool] = None,
) -> List[float]:
    """
    Primeras `count` raices de fn en (start, ceiling].

    Con rescan se repite el barrido a medio paso; si encuentra raices que el
    barrido grueso habia saltado, prevalece el fino.
    """
    if count < 1:
        return []
    rescan = settings.LAMBDA_RESCAN if rescan is None else rescan
    memo = _Memo(fn)
    brackets = _brackets(memo, start, step, ceiling, count)
    if rescan:
        fine = _brackets(memo, start, step / 2, ceiling, count)
        # el fino completa `count` raices antes de la ultima del grueso
        if fine[-1][1] <= brackets[-1][0]:
            logger.warning(
                "el barrido a medio paso encontro raices omitidas (paso %.6g)", step
            )
            brackets = fine

    roots = []
    for lo, hi in brackets:
        if lo == hi:
            roots.append(lo)
        else:
            roots.append(brentq(memo.fn, lo, hi, xtol=1e-14 * hi, rtol=1e-15))
    return roots
