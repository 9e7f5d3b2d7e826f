## Desarrollo de una velocidad inicial en modos propios

import logging
import math
from typing import Optional, Sequence

import numpy as np

from membrana.angular.schemas import AngularKind
from membrana.config import settings
from membrana.coords.schemas import EllipticPoint
from membrana.exceptions import InvalidParameterError
from membrana.spectrum.schemas import MembraneMaterial, MembraneMode

from .fields import split_even_odd
from .quadrature import adaptive_quad, check_modes, nodes, shape_factors, weight, weighted_norms
from .schemas import ModalExpansion, ModalTerm, VelocityField

logger = logging.getLogger(__name__)

# campos muestreados: splines bicubicos, solo C²
SAMPLED_QUAD_TOL = 1e-6


def expand_velocity(
    field: VelocityField,
    modes: Sequence[MembraneMode],
    material: MembraneMaterial,
    quad_order: Optional[int] = None,
) -> ModalExpansion:
    """
    a = ∬ F·P·Q·w / (2mλ·∬ P²Q²·w), w = cosh 2β − cos 2α.

    F es la parte impar de Φ para los modos de primera especie y la par para
    los de segunda; los terminos cruzados se anulan por ortogonalidad.
    """
    geometry = check_modes(modes)
    if field.geometry != geometry:
        raise InvalidParameterError("El campo y los modos estan en geometrias distintas", code="GEOMETRY_MISMATCH")
    odd_part, even_part = split_even_odd(field)
    order = quad_order or settings.QUAD_ORDER
    used = order
    tol = max(settings.QUAD_TOL, SAMPLED_QUAD_TOL) if field.smoothness == "sampled" else None

    terms = []
    for mode in modes:
        part = odd_part if mode.spec.kind is AngularKind.ODD else even_part

        def projection(alpha, beta, mode=mode, part=part):
            P, Q = shape_factors(mode, alpha, beta)
            A, B = np.meshgrid(alpha, beta, indexing="ij")
            return part(A, B) * weight(alpha, beta) * np.outer(P, Q)

        def norm2(alpha, beta, mode=mode):
            P, Q = shape_factors(mode, alpha, beta)
            return weight(alpha, beta) * np.outer(P * P, Q * Q)

        num, o1 = adaptive_quad(projection, geometry.theta, order, tol)
        den, o2 = adaptive_quad(norm2, geometry.theta, order, tol)
        used = max(used, o1, o2)
        coefficient = num / (2.0 * material.wave_speed * mode.lambda_ * den)
        terms.append(ModalTerm(mode=mode, coefficient=coefficient))
        logger.debug("coeficiente %s = %.15g", mode.spec.label, coefficient)

    residual = _residual(field, terms, material, used)
    return ModalExpansion(terms=tuple(terms), residual_norm=residual, quad_order=used)


def _residual(field: VelocityField, terms: Sequence[ModalTerm], material: MembraneMaterial, order: int) -> float:
    """‖Φ − Σ 2mλ·a·PQ‖ / ‖Φ‖ en la norma con peso; 0 si Φ es nulo."""
    a, _, b, _ = nodes(order, field.geometry.theta)
    A, B = np.meshgrid(a, b, indexing="ij")
    phi = field(A, B)
    rebuilt = np.zeros_like(phi)
    for term in terms:
        P, Q = shape_factors(term.mode, a, b)
        rebuilt += 2.0 * material.wave_speed * term.mode.lambda_ * term.coefficient * np.outer(P, Q)
    base, diff = weighted_norms([phi, phi - rebuilt], field.geometry.theta, order)
    return diff / base if base > 0 else 0.0


def _time_factor(term: ModalTerm, t: float, material: MembraneMaterial, derivative: bool) -> float:
    omega = 2.0 * term.mode.lambda_ * material.wave_speed
    if derivative:
        return omega * math.cos(omega * t)
    return math.sin(omega * t)


def _superpose(expansion: ModalExpansion, alpha, beta, t: float, material: MembraneMaterial, derivative: bool) -> np.ndarray:
    alpha, beta = np.broadcast_arrays(np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float))
    flat_a, flat_b = alpha.ravel(), beta.ravel()
    total = np.zeros(flat_a.shape)
    for term in expansion.terms:
        P, Q = shape_factors(term.mode, flat_a, flat_b)
        total += term.coefficient * _time_factor(term, t, material, derivative) * P * Q
    return total.reshape(alpha.shape)


def evaluate_motion(expansion: ModalExpansion, p: EllipticPoint, t: float, material: MembraneMaterial) -> float:
    """w(α, β, t) = Σ a·P·Q·sin(2λmt)."""
    p = p.canonical()
    return float(_superpose(expansion, p.alpha, p.beta, t, material, derivative=False))


def velocity_of_motion(expansion: ModalExpansion, alpha, beta, t: float, material: MembraneMaterial) -> np.ndarray:
    """∂w/∂t; en t = 0 reproduce Φ salvo el residuo del desarrollo."""
    return _superpose(expansion, alpha, beta, t, material, derivative=True)
