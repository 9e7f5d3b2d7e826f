### Schemas of the angular problem

from __future__ import annotations

from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class AngularKind(str, Enum):
    """Primera especie (P₁, nula en α=0) o segunda especie (P₂, extremo en α=0)."""
    ODD = "odd"
    EVEN = "even"

    @property
    def label(self) -> str:
        return "R'" if self is AngularKind.ODD else "R"


def check_order(g: int, kind: AngularKind) -> None:
    from membrana.exceptions import InvalidParameterError

    if g < 0:
        raise InvalidParameterError(f"El orden g debe ser ≥ 0 (g={g})", code="INVALID_ORDER")
    if kind is AngularKind.ODD and g < 1:
        raise InvalidParameterError(
            "La primera especie (odd) requiere g ≥ 1", code="INVALID_ORDER"
        )


class SpectralParam(BaseModel):
    model_config = ConfigDict(frozen=True)

    h: float = Field(..., ge=0, description="h = λ·c")
    lambda_: Optional[float] = Field(None, alias="lambda", description="λ (1/longitud)")


class CharacteristicValue(BaseModel):
    """
    Constante caracteristica R (o R′ para la primera especie).

    Invariante: con h = 0 el valor es exactamente g².
    """
    model_config = ConfigDict(frozen=True)

    R: float
    kind: AngularKind
    order_g: int = Field(..., ge=0)
    h: float = Field(..., ge=0)
    method: Literal["series", "shooting"]
    error_estimate: float = Field(0.0, ge=0, description="Cota del error de R")
    residual: Optional[float] = Field(None, description="Residuo de la condicion en π/2")
    potential_sign: int = Field(1, description="+1: ecuacion original, −1: h² → −h²")

    @field_validator("potential_sign")
    @classmethod
    def validar_signo(cls, v: int) -> int:
        if v not in (1, -1):
            raise ValueError("potential_sign debe ser +1 o -1")
        return v

    @model_validator(mode="after")
    def validar_especie(self) -> "CharacteristicValue":
        if self.kind is AngularKind.ODD and self.order_g < 1:
            raise ValueError("La primera especie requiere g ≥ 1")
        return self

    @property
    def q(self) -> float:
        """Parametro con signo que acompaña a cos 2α: sign·h²."""
        return self.potential_sign * self.h * self.h

    @property
    def M(self) -> float:
        return self.R - 2 * self.q

    @property
    def m_plus(self) -> float:
        """m = R + 2h², constante local de la serie en ν = cos α."""
        return self.R + 2 * self.q

    @property
    def m_minus(self) -> float:
        """m′ = R − 2h², constante local de la serie en ν′ = sin α."""
        return self.R - 2 * self.q


class TrigSeriesRep(BaseModel):
    """Desarrollo en cos nα (o sin nα); el coeficiente de cos gα vale 1."""
    model_config = ConfigDict(frozen=True)

    base_order: int = Field(..., ge=0)
    parity: Literal["cosine", "sine"]
    terms: Tuple[Tuple[int, float], ...]
    h: float = Field(..., ge=0)

    def coefficient(self, harmonic: int) -> float:
        return dict(self.terms).get(harmonic, 0.0)


class PowerSeriesRep(BaseModel):
    """
    Serie en ν = cos α o ν′ = sin α.

    coeffs[s] multiplica x^{2s} (paridad par) o x^{2s+1} (impar).
    """
    model_config = ConfigDict(frozen=True)

    variable: Literal["nu", "nu_prime"]
    parity: Literal["even", "odd"]
    coeffs: Tuple[float, ...]

    @property
    def n_terms(self) -> int:
        return len(self.coeffs)

    def powers(self) -> List[int]:
        offset = 0 if self.parity == "even" else 1
        return [2 * s + offset for s in range(self.n_terms)]


class TaylorAlphaRep(BaseModel):
    """
    P(α) = scale · Σ coeffs[n] αⁿ, con coeficiente dominante 1.

    scale es B′ (primera especie, P′(0)) o D′ (segunda especie, P(0)).
    """
    model_config = ConfigDict(frozen=True)

    kind: AngularKind
    coeffs: Tuple[float, ...]
    scale: float = 1.0
