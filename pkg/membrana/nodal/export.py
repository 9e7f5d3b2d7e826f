## Exportacion de lineas nodales (SVG y CSV)

import csv
import logging
import math
import os
from typing import TextIO, Union

from matplotlib import rc_context
from matplotlib.figure import Figure

from membrana.coords.schemas import EllipseGeometry
from membrana.coords.transforms import ellipse_points, hyperbola_points

from .schemas import NodalGeometry

logger = logging.getLogger(__name__)

SVG_RC = {
    "svg.hashsalt": "membrana",
    "svg.fonttype": "none",
    "path.simplify": False,
}


def _fmt(x: float) -> str:
    return format(float(x), ".15g")


def export_nodal_svg(geometry: EllipseGeometry, nodal: NodalGeometry, path: Union[str, os.PathLike]) -> None:
    """
    Dibuja contorno, elipses nodales y lineas hiperbolicas en un SVG determinista.

    Cada raiz α* da las dos mitades de rama α* y α* + π. En primera especie
    el segmento focal va tambien marcado.
    """
    c, theta = geometry.c, geometry.theta
    with rc_context(SVG_RC):
        fig = Figure(figsize=(6.0, 6.0 * max(math.tanh(theta), 0.2)))
        ax = fig.add_subplot(1, 1, 1)
        ax.set_aspect("equal")
        ax.set_axis_off()

        x, y = ellipse_points(c, theta)
        ax.plot(x, y, color="black", linewidth=1.2, gid="boundary")

        for k, beta in enumerate(nodal.ellipse_betas):
            x, y = ellipse_points(c, beta)
            ax.plot(x, y, color="tab:blue", linewidth=0.9, gid=f"ellipse-{k}")

        for k, alpha in enumerate(nodal.hyperbolic_alphas):
            for branch, a in enumerate((alpha, alpha + math.pi)):
                x, y = hyperbola_points(c, a, theta)
                ax.plot(x, y, color="tab:red", linewidth=0.9, gid=f"hyperbola-{k}-{branch}")

        if nodal.includes_focal_segment:
            ax.plot([-c, c], [0.0, 0.0], color="tab:red", linewidth=0.9, gid="focal-segment")

        fig.savefig(path, format="svg", metadata={"Date": None})
    logger.debug("svg escrito en %s", path)


def write_nodal_csv(nodal: NodalGeometry, fh: TextIO) -> None:
    """root,type,count_weight; los ejes y cada raiz hiperbolica pesan 1."""
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["root", "type", "count_weight"])
    for alpha in nodal.hyperbolic_alphas:
        if nodal.includes_major_axis and abs(alpha) <= 1e-9:
            kind = "major_axis"
        elif nodal.includes_minor_axis and abs(alpha - math.pi / 2) <= 1e-9:
            kind = "minor_axis"
        else:
            kind = "hyperbolic"
        writer.writerow([_fmt(alpha), kind, 1])
    for beta in nodal.ellipse_betas:
        writer.writerow([_fmt(beta), "ellipse", 1])


def export_nodal_csv(nodal: NodalGeometry, path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_nodal_csv(nodal, fh)
    logger.debug("csv nodal escrito en %s", path)
