# membrana/integrator.py
"""
Integrador de Taylor de paso fijo para y'' = −V(x)·y.

En cada nodo se desarrolla la solucion en serie de Taylor a partir de los
coeficientes de V alrededor del nodo; la misma serie da la salida densa
dentro del paso. Lo usan el tiro angular, la continuacion radial y el anillo.
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from .config import settings

# potencial(x0, orden) -> coeficientes de Taylor de V alrededor de x0
Potential = Callable[[float, int], np.ndarray]


def _factors(order: int, base: float) -> np.ndarray:
    k = np.arange(order + 1)
    return base ** k / np.array([math.factorial(int(i)) for i in k], dtype=float)


def angular_potential(R: float, h: float, sign: int = 1) -> Potential:
    """V(α) = R − sign·2h²·cos 2α."""
    def potential(x0: float, order: int) -> np.ndarray:
        c, s = math.cos(2.0 * x0), math.sin(2.0 * x0)
        cycle = np.array([c, -s, -c, s])[np.arange(order + 1) % 4]
        v = -sign * 2.0 * h * h * _factors(order, 2.0) * cycle
        v[0] += R
        return v
    return potential


def radial_potential(R: float, q: float) -> Potential:
    """Q'' = (R − 2q·cosh 2β)Q con q = ±h², es decir V(β) = 2q·cosh 2β − R."""
    def potential(x0: float, order: int) -> np.ndarray:
        k = np.arange(order + 1)
        hyper = np.where(k % 2 == 0, math.cosh(2.0 * x0), math.sinh(2.0 * x0))
        v = 2.0 * q * _factors(order, 2.0) * hyper
        v[0] -= R
        return v
    return potential


def annulus_potential(R: float, f: float, q: float) -> Potential:
    """Q'' = [R − f²(e^{2ε} + q·e^{−2ε})]Q."""
    def potential(x0: float, order: int) -> np.ndarray:
        k = np.arange(order + 1)
        exps = math.exp(2.0 * x0) + q * np.where(k % 2 == 0, 1.0, -1.0) * math.exp(-2.0 * x0)
        v = f * f * _factors(order, 2.0) * exps
        v[0] -= R
        return v
    return potential


def series_coefficients(v: Sequence, y0, dy0, n: int) -> List:
    """
    Misma recurrencia que taylor_block, en aritmetica generica.

    Sirve para Fraction (auditorias exactas) y mpmath (sumas con cancelacion).
    `v` debe tener al menos n − 2 coeficientes.
    """
    c = [y0, dy0]
    for k in range(n - 2):
        acc = v[0] * c[k]
        for i in range(1, k + 1):
            if v[i]:
                acc += v[i] * c[k - i]
        c.append(-acc / ((k + 2) * (k + 1)))
    return c[:n]


def taylor_block(v: np.ndarray, y, dy, order: int) -> np.ndarray:
    """Coeficientes c_n de y alrededor del nodo: (n+2)(n+1)c_{n+2} = −Σ v_k c_{n−k}."""
    y = np.asarray(y, dtype=float)
    c = np.empty((order + 1,) + y.shape)
    c[0] = y
    c[1] = dy
    for n in range(order - 1):
        c[n + 2] = -np.tensordot(v[: n + 1], c[n::-1], axes=1) / ((n + 2) * (n + 1))
    return c


@dataclass(frozen=True)
class TaylorSolution:
    nodes: np.ndarray
    coeffs: np.ndarray  # (pasos, orden+1, ...) alrededor de cada nodo izquierdo
    y: np.ndarray
    dy: np.ndarray

    @property
    def order(self) -> int:
        return self.coeffs.shape[1] - 1

    def __call__(self, x) -> Tuple[np.ndarray, np.ndarray]:
        """Salida densa (valor, derivada) en x ∈ [nodes[0], nodes[-1]]."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        idx = np.clip(np.searchsorted(self.nodes, x, side="right") - 1, 0, len(self.coeffs) - 1)
        t = x - self.nodes[idx]
        k = np.arange(self.order + 1)
        powers = t[:, None] ** k[None, :]
        block = self.coeffs[idx]
        y = np.einsum("mo,mo...->m...", powers, block)
        dpowers = k[None, 1:] * powers[:, :-1]
        dy = np.einsum("mo,mo...->m...", dpowers, block[:, 1:])
        return y, dy


def steps_for(span: float, omega: float, steps: Optional[int] = None) -> int:
    """Numero de pasos: al menos INTEGRATOR_STEPS por cuarto de periodo y ω·paso ≤ fase maxima."""
    if steps is not None:
        return max(1, int(steps))
    base = math.ceil(settings.INTEGRATOR_STEPS * abs(span) / (math.pi / 2))
    phase = math.ceil(abs(span) * omega / settings.INTEGRATOR_MAX_STEP_PHASE)
    return max(1, base, phase)


def solve(
    potential: Potential,
    x0: float,
    x1: float,
    y0,
    dy0,
    omega: float,
    steps: Optional[int] = None,
    order: Optional[int] = None,
) -> TaylorSolution:
    order = order or settings.INTEGRATOR_ORDER
    n = steps_for(x1 - x0, omega, steps)
    nodes = np.linspace(x0, x1, n + 1)
    dx = nodes[1] - nodes[0] if n else 0.0

    y = np.asarray(y0, dtype=float)
    dy = np.asarray(dy0, dtype=float)
    k = np.arange(order + 1)
    powers = dx ** k
    dpowers = k[1:] * dx ** k[:-1]

    coeffs = np.empty((n, order + 1) + y.shape)
    ys = np.empty((n + 1,) + y.shape)
    dys = np.empty((n + 1,) + y.shape)
    ys[0], dys[0] = y, dy
    for j in range(n):
        c = taylor_block(potential(nodes[j], order), y, dy, order)
        coeffs[j] = c
        y = np.tensordot(powers, c, axes=1)
        dy = np.tensordot(dpowers, c[1:], axes=1)
        ys[j + 1], dys[j + 1] = y, dy
    return TaylorSolution(nodes=nodes, coeffs=coeffs, y=ys, dy=dys)
