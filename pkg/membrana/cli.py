# membrana/cli.py
"""
Interfaz de linea de comandos: python -m membrana <comando>.

Comandos: charval, modes, nodal, annulus, expand, circle. Todas las salidas
numericas usan 15 cifras significativas; los CSV van en UTF-8 con LF.
"""
import argparse
import csv
import io
import logging
import sys
from contextlib import contextmanager
from typing import Callable, Dict, Iterator, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from . import __version__
from .angular import AngularKind, charval_series, charval_shoot
from .angular.schemas import check_order
from .config import apply_settings, load_settings, settings
from .coords.schemas import EllipseGeometry
from .coords.transforms import geometry_from_axes
from .exceptions import EXIT_USAGE, ConfigurationError, MembraneError
from .nodal import export_nodal_svg, nodal_geometry, write_nodal_csv
from .spectrum import (
    MembraneMaterial,
    annulus_find_lambdas,
    circle_modes,
    find_lambda,
    frequency,
    list_modes,
    ring_find_lambdas,
)
from .synthesis import builtin_field, expand_velocity, field_from_csv

logger = logging.getLogger(__name__)

LOG_FORMAT = "level=%(levelname)s logger=%(name)s msg=%(message)s"


def fmt(x: float) -> str:
    return format(float(x), ".15g")


## Salida


@contextmanager
def _output(path: Optional[str]) -> Iterator[TextIO]:
    if path in (None, "-"):
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        yield fh


def _write_table(
    out: TextIO,
    header: Sequence[str],
    rows: Sequence[Sequence[object]],
    provenance: Optional[Dict[str, object]] = None,
) -> None:
    buffer = io.StringIO()
    for key, value in (provenance or {}).items():
        buffer.write(f"# {key}={value}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    out.write(buffer.getvalue())


def _geometry(args: argparse.Namespace) -> EllipseGeometry:
    if args.semi_axes:
        try:
            A, B = (float(v) for v in args.semi_axes.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"--semi-axes espera A,B (recibido {args.semi_axes!r})")
        return geometry_from_axes(A, B)
    if args.focal_c is None or args.theta is None:
        raise argparse.ArgumentTypeError("Indique --focal-c y --theta, o --semi-axes A,B")
    return EllipseGeometry(c=args.focal_c, theta=args.theta)


def _geometry_provenance(geometry: EllipseGeometry) -> Dict[str, str]:
    return {
        "c": fmt(geometry.c),
        "theta": fmt(geometry.theta),
        "A": fmt(geometry.semi_major),
        "B": fmt(geometry.semi_minor),
    }


## Comandos


def cmd_charval(args: argparse.Namespace) -> int:
    kind = AngularKind(args.kind)
    check_order(args.order, kind)
    name = "R'" if kind is AngularKind.ODD else "R"
    methods = ["series", "shooting"] if args.method == "both" else [args.method]
    values = {}
    for method in methods:
        solver = charval_series if method == "series" else charval_shoot
        values[method] = solver(args.order, kind, args.h)

    rows = [
        [method, fmt(cv.R), fmt(cv.M), fmt(cv.error_estimate)]
        for method, cv in values.items()
    ]
    provenance = {"kind": kind.value, "g": args.order, "h": fmt(args.h), "name": name}
    if len(values) == 2:
        provenance["disagreement"] = fmt(abs(values["series"].R - values["shooting"].R))
        provenance["bound"] = fmt(values["series"].error_estimate + values["shooting"].error_estimate)
    with _output(args.output) as out:
        _write_table(out, ["method", "R", "M", "error_estimate"], rows, provenance)
    return 0


def cmd_modes(args: argparse.Namespace) -> int:
    geometry = _geometry(args)
    material = MembraneMaterial(wave_speed=args.wave_speed)
    modes = list_modes(geometry, args.max_order, args.max_index, jobs=args.jobs)
    rows = [
        [m.spec.kind.value, m.spec.order_g, m.spec.radial_index, fmt(m.lambda_), fmt(m.R),
         fmt(frequency(m.lambda_, material))]
        for m in modes
    ]
    provenance = {**_geometry_provenance(geometry), "wave_speed": fmt(args.wave_speed)}
    with _output(args.output) as out:
        _write_table(out, ["kind", "g", "i", "lambda", "R", "frequency"], rows, provenance)
    return 0


def cmd_nodal(args: argparse.Namespace) -> int:
    geometry = _geometry(args)
    mode = find_lambda(geometry, AngularKind(args.kind), args.order, args.index)
    nodal = nodal_geometry(mode)
    if args.svg:
        export_nodal_svg(geometry, nodal, args.svg)
    with _output(args.output) as out:
        write_nodal_csv(nodal, out)
    logger.info("modo %s λ=%s: %d lineas hiperbolicas, %d elipses",
                mode.spec.label, fmt(mode.lambda_), nodal.counted_hyperbolic_lines, nodal.counted_ellipses)
    return 0


def cmd_annulus(args: argparse.Namespace) -> int:
    if args.rho_inner is not None:
        if args.rho_outer is None:
            raise argparse.ArgumentTypeError("--rho-inner requiere --rho-outer")
        lambdas = ring_find_lambdas(args.rho_inner, args.rho_outer, args.order, args.count)
        rows = [["ring", args.order, i, fmt(lam), fmt(args.order ** 2)] for i, lam in enumerate(lambdas, start=1)]
        provenance = {"c": "0", "rho_inner": fmt(args.rho_inner), "rho_outer": fmt(args.rho_outer)}
    else:
        if None in (args.focal_c, args.theta_inner, args.theta_outer):
            raise argparse.ArgumentTypeError("Indique --focal-c, --theta-inner y --theta-outer (o --rho-inner/--rho-outer)")
        kind = AngularKind(args.kind)
        modes = annulus_find_lambdas(args.focal_c, args.theta_inner, args.theta_outer, kind, args.order, args.count)
        rows = [
            [kind.value, args.order, m.spec.radial_index, fmt(m.lambda_), fmt(m.R)]
            for m in modes
        ]
        provenance = {
            "c": fmt(args.focal_c),
            "theta_inner": fmt(args.theta_inner),
            "theta_outer": fmt(args.theta_outer),
        }
    with _output(args.output) as out:
        _write_table(out, ["kind", "g", "i", "lambda", "R"], rows, provenance)
    return 0


def cmd_expand(args: argparse.Namespace) -> int:
    geometry = _geometry(args)
    if args.field_csv:
        field = field_from_csv(args.field_csv, geometry)
    else:
        field = builtin_field(args.field, geometry)
    material = MembraneMaterial(wave_speed=args.wave_speed)
    modes = list_modes(geometry, args.max_order, args.max_index, jobs=args.jobs)
    expansion = expand_velocity(field, modes, material, quad_order=args.quad_order)
    rows = [
        [t.mode.spec.kind.value, t.mode.spec.order_g, t.mode.spec.radial_index,
         fmt(t.mode.lambda_), fmt(t.coefficient)]
        for t in expansion.terms
    ]
    provenance = {
        **_geometry_provenance(geometry),
        "field": field.name,
        "wave_speed": fmt(args.wave_speed),
        "quad_order": expansion.quad_order,
        "residual_norm": fmt(expansion.residual_norm),
    }
    with _output(args.output) as out:
        _write_table(out, ["kind", "g", "i", "lambda", "coefficient"], rows, provenance)
    return 0


def cmd_circle(args: argparse.Namespace) -> int:
    modes = circle_modes(args.radius, args.order, args.count)
    rows = [[m.bessel_order, m.root_index, fmt(m.tau), fmt(m.lambda_)] for m in modes]
    with _output(args.output) as out:
        _write_table(out, ["n", "s", "tau", "lambda"], rows, {"radius": fmt(args.radius)})
    return 0


## Parser


def _add_geometry(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("geometria")
    group.add_argument("--focal-c", type=float, help="Semi-distancia focal c")
    group.add_argument("--theta", type=float, help="Parametro ϑ del contorno")
    group.add_argument("--semi-axes", help="Semiejes A,B (alternativa a --focal-c/--theta)")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", "-o", help="Archivo de salida (por defecto stdout)")


def init_commands(subparsers) -> None:
    """Registra los subcomandos y su funcion manejadora."""
    p = subparsers.add_parser("charval", help="Constante caracteristica R")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--kind", choices=[k.value for k in AngularKind], required=True)
    p.add_argument("--h", type=float, required=True)
    p.add_argument("--method", choices=["series", "shooting", "both"], default="shooting")
    _add_output(p)
    p.set_defaults(handler=cmd_charval)

    p = subparsers.add_parser("modes", help="λ y frecuencias de la membrana eliptica")
    _add_geometry(p)
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--wave-speed", type=float, default=1.0)
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(handler=cmd_modes)

    p = subparsers.add_parser("nodal", help="Lineas nodales de un modo")
    _add_geometry(p)
    p.add_argument("--kind", choices=[k.value for k in AngularKind], required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--svg", help="Archivo SVG de salida")
    _add_output(p)
    p.set_defaults(handler=cmd_nodal)

    p = subparsers.add_parser("annulus", help="λ del anillo entre elipses homofocales")
    p.add_argument("--focal-c", type=float)
    p.add_argument("--theta-inner", type=float)
    p.add_argument("--theta-outer", type=float)
    p.add_argument("--rho-inner", type=float, help="Anillo circular (c = 0)")
    p.add_argument("--rho-outer", type=float)
    p.add_argument("--kind", choices=[k.value for k in AngularKind], default="even")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", type=int, default=3)
    _add_output(p)
    p.set_defaults(handler=cmd_annulus)

    p = subparsers.add_parser("expand", help="Desarrollo modal de una velocidad inicial")
    _add_geometry(p)
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--field", help="Campo predefinido: bump, odd_bump, mixed")
    source.add_argument("--field-csv", help="Malla alpha,beta,value")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--wave-speed", type=float, default=1.0)
    p.add_argument("--quad-order", type=int)
    p.add_argument("--jobs", type=int, default=1)
    _add_output(p)
    p.set_defaults(handler=cmd_expand)

    p = subparsers.add_parser("circle", help="Membrana circular de referencia")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--count", type=int, default=3)
    _add_output(p)
    p.set_defaults(handler=cmd_circle)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="membrana", description="Membrana eliptica vibrante")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", help="Archivo clave = valor (o variable MATHIEU_CONFIG)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING, ...")
    subparsers = parser.add_subparsers(dest="command", required=True)
    init_commands(subparsers)
    return parser


## Manejo de errores


def _report(code: str, message: str) -> None:
    sys.stderr.write(f"error[{code}]: {message}\n")


def membrane_error_handler(exc: MembraneError) -> int:
    _report(exc.code, exc.message)
    return exc.exit_code


def validation_error_handler(exc: ValidationError) -> int:
    first = exc.errors()[0] if exc.errors() else {}
    where = ".".join(str(p) for p in first.get("loc", ()))
    _report("INVALID_PARAMETER", f"{where}: {first.get('msg', exc)}" if where else str(first.get("msg", exc)))
    return EXIT_USAGE


def usage_error_handler(exc: argparse.ArgumentTypeError) -> int:
    _report("USAGE", str(exc))
    return EXIT_USAGE


ERROR_HANDLERS: Dict[type, Callable[[Exception], int]] = {
    MembraneError: membrane_error_handler,
    ValidationError: validation_error_handler,
    argparse.ArgumentTypeError: usage_error_handler,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        apply_settings(load_settings(args.config, LOG_LEVEL=args.log_level))
        level = str(settings.LOG_LEVEL).upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigurationError(code="INVALID_SETTING", message=f"Nivel de log invalido: {settings.LOG_LEVEL}")
        logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)
        logger.debug("comando %s con %s", args.command, vars(args))
        return args.handler(args)
    except tuple(ERROR_HANDLERS) as exc:
        for kind, handler in ERROR_HANDLERS.items():
            if isinstance(exc, kind):
                return handler(exc)
        raise
