from .schemas import EllipseGeometry, EllipticPoint
from .transforms import (
    cartesian_to_elliptic,
    elliptic_to_cartesian,
    ellipse_points,
    geometry_from_axes,
    hyperbola_points,
    metric_weight,
    semi_axes,
)

__all__ = [
    "EllipseGeometry",
    "EllipticPoint",
    "cartesian_to_elliptic",
    "elliptic_to_cartesian",
    "ellipse_points",
    "geometry_from_axes",
    "hyperbola_points",
    "metric_weight",
    "semi_axes",
]
