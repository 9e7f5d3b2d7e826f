## Campos de velocidad inicial: analiticos, muestreados y su division par/impar

import csv
import logging
import math
from typing import Dict, Tuple

import numpy as np
from scipy.interpolate import RectBivariateSpline

from membrana.coords.schemas import EllipseGeometry
from membrana.coords.transforms import to_cartesian
from membrana.exceptions import FieldSymmetryError, InvalidParameterError

from .schemas import VelocityField

logger = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-9
# puntos de α copiados a cada lado para que el spline sea periodico
WRAP = 3


def _paraboloid(geometry: EllipseGeometry, alpha, beta) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    x, y = to_cartesian(geometry.c, alpha, beta)
    A, B = geometry.semi_major, geometry.semi_minor
    return x / A, y / B, 1.0 - (x / A) ** 2 - (y / B) ** 2


def builtin_field(name: str, geometry: EllipseGeometry) -> VelocityField:
    """
    Campos de prueba que se anulan en el contorno.

    - bump: 1 − (x/A)² − (y/B)², par en ambos ejes
    - odd_bump: (y/B)·bump, impar respecto del eje mayor
    - mixed: (1 + x/(2A) + y/(2B))·bump, sin simetria
    """
    def bump(alpha, beta):
        return _paraboloid(geometry, alpha, beta)[2]

    def odd_bump(alpha, beta):
        _, yb, b = _paraboloid(geometry, alpha, beta)
        return yb * b

    def mixed(alpha, beta):
        xa, yb, b = _paraboloid(geometry, alpha, beta)
        return (1.0 + 0.5 * xa + 0.5 * yb) * b

    builtins: Dict[str, object] = {"bump": bump, "odd_bump": odd_bump, "mixed": mixed}
    if name not in builtins:
        raise InvalidParameterError(
            f"Campo desconocido: {name!r} (disponibles: {', '.join(sorted(builtins))})",
            code="UNKNOWN_FIELD",
        )
    return VelocityField(name=name, geometry=geometry, func=builtins[name])


def field_from_csv(path: str, geometry: EllipseGeometry) -> VelocityField:
    """
    Lee una malla alpha,beta,value y la interpola con splines bicubicos.

    α debe cubrir [0, 2π) (un valor en 2π se descarta) y β [0, ϑ].
    """
    rows = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"alpha", "beta", "value"} <= set(reader.fieldnames):
            raise InvalidParameterError(
                f"{path}: se esperan las columnas alpha,beta,value", code="INVALID_FIELD_CSV"
            )
        for line, row in enumerate(reader, start=2):
            try:
                rows.append((float(row["alpha"]), float(row["beta"]), float(row["value"])))
            except (TypeError, ValueError):
                raise InvalidParameterError(f"{path}:{line}: valor no numerico", code="INVALID_FIELD_CSV")

    data = np.array(rows, dtype=float).reshape(-1, 3)
    keep = data[:, 0] < 2 * math.pi - 1e-12
    data = data[keep]
    alphas = np.unique(data[:, 0])
    betas = np.unique(data[:, 1])
    if len(alphas) < 4 or len(betas) < 4 or len(data) != len(alphas) * len(betas):
        raise InvalidParameterError(
            f"{path}: la malla debe ser rectangular con al menos 4×4 puntos", code="INVALID_FIELD_CSV"
        )
    if betas[0] > 1e-12 or betas[-1] < geometry.theta - 1e-9:
        raise InvalidParameterError(f"{path}: β debe cubrir [0, ϑ]", code="INVALID_FIELD_CSV")

    grid = np.empty((len(alphas), len(betas)))
    ia = np.searchsorted(alphas, data[:, 0])
    ib = np.searchsorted(betas, data[:, 1])
    grid[ia, ib] = data[:, 2]

    ext_alpha = np.concatenate([alphas[-WRAP:] - 2 * math.pi, alphas, alphas[:WRAP] + 2 * math.pi])
    ext_grid = np.concatenate([grid[-WRAP:], grid, grid[:WRAP]], axis=0)
    spline = RectBivariateSpline(ext_alpha, betas, ext_grid, kx=3, ky=3)

    def func(alpha, beta):
        a = np.mod(alpha, 2 * math.pi)
        return spline.ev(a.ravel(), beta.ravel()).reshape(a.shape)

    logger.info("campo %s: malla %d×%d", path, len(alphas), len(betas))
    return VelocityField(name=str(path), geometry=geometry, func=func, smoothness="sampled")


def check_symmetry(field: VelocityField, samples: int = 64) -> None:
    """Φ(α, 0) = Φ(−α, 0) en el segmento focal y, si se declara, Φ = 0 en β = ϑ."""
    alpha = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    zero = np.zeros_like(alpha)
    on_segment = field(alpha, zero)
    scale = max(float(np.max(np.abs(on_segment))), 1.0)
    mismatch = float(np.max(np.abs(on_segment - field(-alpha, zero))))
    if mismatch > SYMMETRY_TOL * scale:
        raise FieldSymmetryError(
            message=f"Φ(α, 0) ≠ Φ(−α, 0) en el segmento focal (diferencia {mismatch:.3g})",
            details={"mismatch": mismatch},
        )
    if field.vanishes_on_boundary:
        edge = float(np.max(np.abs(field(alpha, np.full_like(alpha, field.geometry.theta)))))
        if edge > SYMMETRY_TOL * scale:
            logger.warning("el campo %s no se anula en el contorno (max %.3g)", field.name, edge)


def split_even_odd(field: VelocityField) -> Tuple[VelocityField, VelocityField]:
    """
    F₁ = [Φ(α, β) − Φ(−α, β)]/2 (primera especie) y F₂ = [Φ(α, β) + Φ(−α, β)]/2.

    F₁ + F₂ = Φ punto a punto.
    """
    check_symmetry(field)

    def odd(alpha, beta):
        return 0.5 * (field(alpha, beta) - field(-alpha, beta))

    def even(alpha, beta):
        return 0.5 * (field(alpha, beta) + field(-alpha, beta))

    common = {"geometry": field.geometry, "smoothness": field.smoothness, "vanishes_on_boundary": field.vanishes_on_boundary}
    return (
        VelocityField(name=f"{field.name}:odd", func=odd, **common),
        VelocityField(name=f"{field.name}:even", func=even, **common),
    )
