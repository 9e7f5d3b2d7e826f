from .export import export_nodal_csv, export_nodal_svg, write_nodal_csv
from .lines import hyperbolic_nodal_angles, nodal_ellipses, nodal_geometry, superposed_nodal
from .schemas import NodalGeometry, SuperposedNodal

__all__ = [
    "NodalGeometry",
    "SuperposedNodal",
    "export_nodal_csv",
    "export_nodal_svg",
    "hyperbolic_nodal_angles",
    "nodal_ellipses",
    "nodal_geometry",
    "superposed_nodal",
    "write_nodal_csv",
]
