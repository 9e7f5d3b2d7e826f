### Schemas of the radial problem

import math
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from membrana.angular.schemas import AngularKind


class RadialTaylor(BaseModel):
    """
    Q = norm · Σ coeffs[n] βⁿ (o εⁿ en el anillo), coeficiente dominante 1.

    norm es B (primera especie, Q′(0)) o D (segunda especie, Q(0)).
    potential guarda A₀ = R − 2h² y las derivadas A_{2i} = −2^{2i+1}h² de
    T = R − 2h²cosh 2β en β = 0 (vacio para el anillo).
    """
    model_config = ConfigDict(frozen=True)

    kind: AngularKind
    coeffs: Tuple[float, ...]
    norm: float = 1.0
    potential: Tuple[float, ...] = ()

    def derivative_at_zero(self, order: int) -> float:
        """(dⁿQ/dβⁿ)₀ / norm."""
        return self.coeffs[order] * math.factorial(order)


class AnnulusParam(BaseModel):
    """
    Anillo entre dos elipses homofocales; ε = β − eps0 se anula en el contorno interior.

    a = ρ_in/2 + √(ρ_in² − c²)/2, q_ann = c²/(4a²), f = 2λa, eps0 = log(2a/c).
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    c: float = Field(..., ge=0)
    theta_inner: Optional[float] = Field(None, ge=0, description="None para el anillo circular (c = 0)")
    lambda_: float = Field(..., ge=0, alias="lambda")
    a: float = Field(..., gt=0)
    q_ann: float = Field(..., ge=0, le=1)
    f: float = Field(..., ge=0)
    eps0: Optional[float] = Field(None, description="log(2a/c); None si c = 0")

    @property
    def potential_q(self) -> float:
        """Coeficiente de e^{−2ε} en la ecuacion del anillo: q_ann²."""
        return self.q_ann ** 2

    def epsilon(self, beta: float) -> float:
        if self.eps0 is None:
            raise ValueError("Sin parametro β en el anillo circular; use epsilon_at_rho")
        return beta - self.eps0

    def epsilon_at_rho(self, rho: float) -> float:
        """ε de la elipse de semieje mayor ρ: a·e^ε + c²/(4a)·e^{−ε} = ρ."""
        return math.log((rho + math.sqrt(max(rho * rho - self.c * self.c, 0.0))) / (2 * self.a))


class RadialValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    Q: float
    dQ_dbeta: float
    method: Optional[str] = None

    @field_validator("Q", "dQ_dbeta")
    @classmethod
    def validar_finito(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("Valor radial no finito")
        return v
