### Schemas of nodal lines

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from membrana.angular.schemas import AngularKind


class NodalGeometry(BaseModel):
    """
    Lineas nodales de un modo puro.

    Cada raiz α* de P en [0, π) es una linea hiperbolica: las dos mitades de
    rama α* y α* + π, que comparten asintota. Si α* = 0 es el eje mayor y si
    α* = π/2 el eje menor; en ambos casos cuenta una vez.
    """
    model_config = ConfigDict(frozen=True)

    kind: Optional[AngularKind] = None
    hyperbolic_alphas: Tuple[float, ...] = ()
    includes_major_axis: bool = False
    includes_minor_axis: bool = False
    includes_focal_segment: bool = Field(False, description="Q nula en β = 0 (primera especie)")
    ellipse_betas: Tuple[float, ...] = ()
    ellipse_axes: Tuple[Tuple[float, float], ...] = ()

    @property
    def counted_hyperbolic_lines(self) -> int:
        return len(self.hyperbolic_alphas)

    @property
    def counted_ellipses(self) -> int:
        return len(self.ellipse_betas)


class SuperposedNodal(BaseModel):
    """Conjunto nodal de A·P₁Q₁ + B·P₂Q₂ para un par casi degenerado."""
    model_config = ConfigDict(frozen=True)

    alpha_roots: Tuple[float, ...]
    ellipse_betas: Tuple[float, ...] = Field(..., description="Ceros de Q del modo de segunda especie")
    odd_ellipse_betas: Tuple[float, ...] = Field(..., description="Ceros de Q del modo de primera especie")
    polylines: Tuple[Tuple[Tuple[float, float], ...], ...] = Field(
        ..., description="Curvas de nivel cero en coordenadas cartesianas"
    )
    symmetric_about_axes: bool
    pi_shift: Literal["invariant", "sign_change"]

    @property
    def counted_hyperbolic_lines(self) -> int:
        return len(self.alpha_roots)

    def polyline_list(self) -> List[List[Tuple[float, float]]]:
        return [list(line) for line in self.polylines]
