## Busqueda de λ: Q(ϑ; λ) = 0 en el contorno de la elipse

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from membrana.angular.functions import build_angular
from membrana.angular.schemas import AngularKind, check_order
from membrana.angular.shooting import charval_shoot
from membrana.config import settings
from membrana.coords.schemas import EllipseGeometry
from membrana.exceptions import InvalidParameterError, ShootingAccuracyError
from membrana.integrator import TaylorSolution, radial_potential, solve
from membrana.radial.functions import build_radial

from .scan import charval_at, scan_roots
from .schemas import MembraneMaterial, MembraneMode, ModeSpec

logger = logging.getLogger(__name__)


def radial_profile(kind: AngularKind, g: int, lam: float, c: float, theta: float) -> TaylorSolution:
    """Q con datos iniciales unitarios en β = 0, integrada hasta ϑ."""
    cv = charval_at(kind, g, lam * c)
    omega = math.sqrt(abs(cv.R) + 2 * abs(cv.q) * math.cosh(2 * theta) + 1.0)
    y0, dy0 = (0.0, 1.0) if cv.kind is AngularKind.ODD else (1.0, 0.0)
    return solve(radial_potential(cv.R, cv.q), 0.0, theta, y0, dy0, omega)


def boundary_value(geometry: EllipseGeometry, kind: AngularKind, g: int, lam: float) -> float:
    """Q(ϑ; λ) con R recalculado para h = λc en cada evaluacion."""
    return float(radial_profile(kind, g, lam, geometry.c, geometry.theta).y[-1])


def _boundary_residual(geometry: EllipseGeometry, kind: AngularKind, g: int, lam: float) -> float:
    sol = radial_profile(kind, g, lam, geometry.c, geometry.theta)
    scale = float(np.max(np.abs(sol.y))) or 1.0
    return abs(float(sol.y[-1])) / scale


def find_lambdas(
    geometry: EllipseGeometry,
    kind: AngularKind,
    g: int,
    count: int,
    tol: Optional[float] = None,
) -> List[MembraneMode]:
    """
    Las primeras `count` raices λ₁ < λ₂ < … de λ ↦ Q(ϑ; λ).

    El paso del barrido es la mitad de la separacion asintotica del circulo,
    π/(4A); el techo es LAMBDA_SCAN_CEILING / A.
    """
    kind = AngularKind(kind)
    check_order(g, kind)
    if count < 1:
        raise InvalidParameterError(f"count debe ser ≥ 1 (count={count})", code="INVALID_INDEX")
    tol = settings.LAMBDA_TOL if tol is None else tol
    if not tol > 0:
        raise InvalidParameterError(f"tol debe ser > 0 (tol={tol})", code="INVALID_TOL")

    A = geometry.semi_major
    roots = scan_roots(
        lambda lam: boundary_value(geometry, kind, g, lam),
        step=math.pi / (4 * A),
        ceiling=settings.LAMBDA_SCAN_CEILING / A,
        count=count,
    )

    modes = []
    for i, lam in enumerate(roots, start=1):
        residual = _boundary_residual(geometry, kind, g, lam)
        if residual > tol:
            raise ShootingAccuracyError(
                message=f"|Q(ϑ)| relativo {residual:.3g} supera la tolerancia {tol:.3g} (λ={lam:.15g})",
                code="BOUNDARY_RESIDUAL",
                details={"lambda": lam, "residual": residual},
            )
        modes.append(MembraneMode(
            spec=ModeSpec(kind=kind, order_g=g, radial_index=i),
            lambda_=lam,
            cv=charval_at(kind, g, lam * geometry.c),
            geometry=geometry,
            boundary_residual=residual,
        ))
        logger.debug("modo %s λ=%.15g residuo=%.3g", modes[-1].spec.label, lam, residual)
    return modes


def find_lambda(
    geometry: EllipseGeometry,
    kind: AngularKind,
    g: int,
    i: int,
    tol: Optional[float] = None,
) -> MembraneMode:
    if i < 1:
        raise InvalidParameterError(f"El indice radial debe ser ≥ 1 (i={i})", code="INVALID_INDEX")
    return find_lambdas(geometry, kind, g, i, tol)[-1]


def frequency(lam: float, material: MembraneMaterial) -> float:
    """N = λ·m/π (vibraciones por unidad de tiempo)."""
    if not lam > 0:
        raise InvalidParameterError(f"λ debe ser > 0 (λ={lam})", code="INVALID_LAMBDA")
    return lam * material.wave_speed / math.pi


def mode_shape(mode: MembraneMode, alpha, beta) -> np.ndarray:
    """u = P(α)·Q(β), con las normalizaciones de build_angular y build_radial."""
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float))
    P = build_angular(mode.cv)(alpha.ravel())
    Q = build_radial(mode.cv)(beta.ravel())
    return (P * Q).reshape(alpha.shape)


def degenerate_pair_gap(geometry: EllipseGeometry, g: int, i: int) -> float:
    """|λ_par − λ_impar| / λ_par para el par (g, i)."""
    if g < 1:
        raise InvalidParameterError("El par degenerado requiere g ≥ 1", code="INVALID_ORDER")
    even = find_lambda(geometry, AngularKind.EVEN, g, i)
    odd = find_lambda(geometry, AngularKind.ODD, g, i)
    return abs(even.lambda_ - odd.lambda_) / even.lambda_


def charval_slope_check(g: int, kind: AngularKind, h: float, dh: float = 1e-4) -> float:
    """
    dR/dh − 4h por diferencias finitas; se espera un valor negativo.

    Es una comprobacion empirica: el signo no esta demostrado en general.
    """
    if not dh > 0:
        raise InvalidParameterError(f"dh debe ser > 0 (dh={dh})", code="INVALID_STEP")
    if h - dh < 0:
        slope = (charval_shoot(g, kind, h + dh).R - charval_shoot(g, kind, h).R) / dh
    else:
        slope = (charval_shoot(g, kind, h + dh).R - charval_shoot(g, kind, h - dh).R) / (2 * dh)
    return slope - 4 * h


def _modes_for(args: Tuple[EllipseGeometry, AngularKind, int, int]) -> List[MembraneMode]:
    geometry, kind, g, max_index = args
    return find_lambdas(geometry, kind, g, max_index)


def list_modes(
    geometry: EllipseGeometry,
    max_order: int,
    max_index: int,
    jobs: int = 1,
) -> List[MembraneMode]:
    """
    Todos los modos con g ≤ max_order, i ≤ max_index, ordenados por λ.

    Con jobs > 1 cada (especie, g) se resuelve en un proceso aparte; el
    resultado se reensambla en el orden de envio.
    """
    if max_order < 0 or max_index < 1:
        raise InvalidParameterError("Se requiere max_order ≥ 0 y max_index ≥ 1", code="INVALID_RANGE")
    tasks = [
        (geometry, kind, g, max_index)
        for g in range(max_order + 1)
        for kind in (AngularKind.EVEN, AngularKind.ODD)
        if not (kind is AngularKind.ODD and g == 0)
    ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_modes_for, tasks))
    else:
        batches = [_modes_for(task) for task in tasks]
    modes = [mode for batch in batches for mode in batch]
    return sorted(modes, key=lambda m: (m.lambda_, m.spec.kind.value, m.spec.order_g, m.spec.radial_index))
