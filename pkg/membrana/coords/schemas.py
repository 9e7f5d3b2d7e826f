### Schemas of the confocal frame

import math

from pydantic import BaseModel, ConfigDict, Field, field_validator


class EllipseGeometry(BaseModel):
    """
    Elipse de contorno en coordenadas confocales.

    - c: semi-distancia focal (> 0)
    - theta: parametro del contorno ϑ (> 0)
    """
    model_config = ConfigDict(frozen=True)

    c: float = Field(..., gt=0, description="Semi-distancia focal")
    theta: float = Field(..., gt=0, description="Parametro ϑ del contorno")

    @field_validator("c", "theta")
    @classmethod
    def validar_finito(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("Debe ser un numero finito")
        return v

    @property
    def semi_major(self) -> float:
        return self.c * math.cosh(self.theta)

    @property
    def semi_minor(self) -> float:
        return self.c * math.sinh(self.theta)

    @property
    def eccentricity(self) -> float:
        return 1.0 / math.cosh(self.theta)


class EllipticPoint(BaseModel):
    """Punto (α, β); la forma canonica tiene β ≥ 0 y α ∈ [0, 2π)."""
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(..., description="Parametro hiperbolico α")
    beta: float = Field(..., description="Parametro eliptico β")

    @field_validator("alpha", "beta")
    @classmethod
    def validar_finito(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("Debe ser un numero finito")
        return v

    @property
    def nu(self) -> float:
        return math.cos(self.alpha)

    @property
    def nu_prime(self) -> float:
        return math.sin(self.alpha)

    def canonical(self) -> "EllipticPoint":
        alpha, beta = self.alpha, self.beta
        if beta < 0:
            alpha, beta = -alpha, -beta
        alpha = math.fmod(alpha, 2 * math.pi)
        if alpha < 0:
            alpha += 2 * math.pi
        if alpha >= 2 * math.pi:
            alpha = 0.0
        return EllipticPoint(alpha=alpha, beta=beta)
