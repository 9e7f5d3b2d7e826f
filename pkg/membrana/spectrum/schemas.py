### Schemas of modes and frequencies

from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from membrana.angular.schemas import AngularKind, CharacteristicValue
from membrana.coords.schemas import EllipseGeometry


class ModeSpec(BaseModel):
    """(especie, orden g, indice radial i); i es el rango de λ empezando en 1."""
    model_config = ConfigDict(frozen=True)

    kind: AngularKind
    order_g: int = Field(..., ge=0)
    radial_index: int = Field(..., ge=1)

    @model_validator(mode="after")
    def validar_especie(self) -> "ModeSpec":
        if self.kind is AngularKind.ODD and self.order_g < 1:
            raise ValueError("La primera especie requiere g ≥ 1")
        return self

    @property
    def label(self) -> str:
        return f"{self.kind.value}-{self.order_g}-{self.radial_index}"


class MembraneMode(BaseModel):
    """
    Par propio (λ, R, P, Q) ligado a una geometria.

    inner_theta solo se usa en el anillo (contorno interior β = inner_theta).
    """
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    spec: ModeSpec
    lambda_: float = Field(..., gt=0, alias="lambda")
    cv: CharacteristicValue
    geometry: EllipseGeometry
    inner_theta: Optional[float] = Field(None, ge=0)
    boundary_residual: float = Field(0.0, ge=0, description="|Q(ϑ)| / max|Q|")

    @property
    def h(self) -> float:
        return self.cv.h

    @property
    def R(self) -> float:
        return self.cv.R

    @property
    def dimensionless(self) -> float:
        """λ·A: en el limite circular tiende a j/2."""
        return self.lambda_ * self.geometry.semi_major


class MembraneMaterial(BaseModel):
    """wave_speed es la m del problema: m² = tension / densidad superficial."""
    model_config = ConfigDict(frozen=True)

    wave_speed: float = Field(..., gt=0, description="Velocidad de propagacion")


class CircleMode(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    bessel_order: int = Field(..., ge=0)
    root_index: int = Field(..., ge=1)
    tau: float = Field(..., gt=0, description="Raiz de la serie de contorno (j/2)")
    radius: float = Field(..., gt=0)

    @property
    def lambda_(self) -> float:
        return self.tau / self.radius
