### Schemas of velocity fields and modal expansions

from typing import Callable, Dict, Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from membrana.angular.schemas import AngularKind
from membrana.coords.schemas import EllipseGeometry, EllipticPoint
from membrana.spectrum.schemas import MembraneMode, ModeSpec


class VelocityField(BaseModel):
    """
    Velocidad inicial Φ(α, β) sobre la elipse.

    func recibe arrays (α, β) con β ∈ [0, ϑ] y devuelve un array de la misma forma.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    geometry: EllipseGeometry
    func: Callable[[np.ndarray, np.ndarray], np.ndarray]
    smoothness: Literal["analytic", "sampled"] = "analytic"
    vanishes_on_boundary: bool = True

    def __call__(self, alpha, beta) -> np.ndarray:
        alpha, beta = np.broadcast_arrays(np.asarray(alpha, dtype=float), np.asarray(beta, dtype=float))
        return np.asarray(self.func(alpha, beta), dtype=float).reshape(alpha.shape)

    def at(self, p: EllipticPoint) -> float:
        return float(self(p.alpha, p.beta))


class ModalTerm(BaseModel):
    model_config = ConfigDict(frozen=True)

    mode: MembraneMode
    coefficient: float


class ModalExpansion(BaseModel):
    """
    w = Σ a·P₁Q₁·sin 2λmt + Σ b·P₂Q₂·sin 2λ′mt.

    residual_norm es ‖Φ − ∂w/∂t(0)‖ / ‖Φ‖ en la norma con peso cosh 2β − cos 2α.
    """
    model_config = ConfigDict(frozen=True)

    terms: Tuple[ModalTerm, ...] = ()
    residual_norm: float = Field(0.0, ge=0)
    quad_order: int = Field(..., ge=1)

    @property
    def odd_coeffs(self) -> Dict[ModeSpec, float]:
        return {t.mode.spec: t.coefficient for t in self.terms if t.mode.spec.kind is AngularKind.ODD}

    @property
    def even_coeffs(self) -> Dict[ModeSpec, float]:
        return {t.mode.spec: t.coefficient for t in self.terms if t.mode.spec.kind is AngularKind.EVEN}


class SeparatedIdentities(BaseModel):
    """
    Las dos identidades de las ecuaciones separadas para un par de modos:

    (R_a − R_b)·∫P_aP_b dα = 2(h_a² − h_b²)·∫P_aP_b cos 2α dα
    (R_a − R_b)·∫Q_aQ_b dβ = 2(h_a² − h_b²)·∫Q_aQ_b cosh 2β dβ
    """
    model_config = ConfigDict(frozen=True)

    angular_lhs: float
    angular_rhs: float
    radial_lhs: float
    radial_rhs: float
    scale: float = Field(..., ge=0, description="Magnitud de referencia para la tolerancia")

    @property
    def angular_gap(self) -> float:
        return abs(self.angular_lhs - self.angular_rhs)

    @property
    def radial_gap(self) -> float:
        return abs(self.radial_lhs - self.radial_rhs)
