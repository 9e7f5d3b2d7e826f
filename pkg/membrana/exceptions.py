# membrana/exceptions.py
from typing import Any, Optional

EXIT_USAGE = 2
EXIT_NUMERIC = 3


class MembraneError(Exception):
    """
    Excepcion base del dominio.

    Atributos:
    - code: identificador corto del error (p.ej. "SERIES_DIVERGENCE")
    - message: mensaje legible
    - details: informacion adicional (intervalos, limites, valores)
    - exit_code: codigo de salida que usa la CLI
    """
    exit_code = EXIT_NUMERIC
    default_code = "MEMBRANE_ERROR"

    def __init__(
        self,
        message: str,
        code: Optional[str] = None,
        details: Optional[Any] = None,
    ) -> None:
        self.code = code or self.default_code
        self.message = message
        self.details = details
        super().__init__(self.message)

    def __str__(self) -> str:
        return self.message

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(code={self.code!r}, "
            f"message={self.message!r}, details={self.details!r})"
        )


class InvalidParameterError(MembraneError, ValueError):
    exit_code = EXIT_USAGE
    default_code = "INVALID_PARAMETER"


class ConfigurationError(MembraneError):
    exit_code = EXIT_USAGE
    default_code = "INVALID_CONFIG"

    def __init__(self, code: str, message: str, details: Optional[Any] = None) -> None:
        super().__init__(message=message, code=code, details=details)


class SeriesDivergenceError(MembraneError):
    """La serie de perturbaciones deja de decrecer: h fuera de su rango util."""
    default_code = "SERIES_DIVERGENCE"

    def __init__(self, g: int, kind: str, h: float, terms: Any = None) -> None:
        self.g = g
        self.kind = kind
        self.h = h
        super().__init__(
            message=f"La serie de R no decrece para g={g}, {kind}, h={h}",
            details={"terms": terms},
        )


class SeriesTruncationError(MembraneError):
    default_code = "SERIES_TRUNCATION"

    def __init__(self, what: str, max_terms: int, x: Optional[float] = None) -> None:
        self.what = what
        self.max_terms = max_terms
        self.x = x
        where = f" en x={x}" if x is not None else ""
        super().__init__(
            message=f"La serie {what} no converge en {max_terms} terminos{where}",
            details={"max_terms": max_terms, "x": x},
        )


class PowerSeriesOverflowError(MembraneError):
    default_code = "SERIES_OVERFLOW"


class BracketingError(MembraneError):
    default_code = "BRACKETING_FAILURE"

    def __init__(self, g: int, kind: str, h: float, interval: tuple) -> None:
        self.interval = interval
        super().__init__(
            message=(
                f"No se encontro cambio de signo para g={g}, {kind}, h={h} "
                f"en R ∈ [{interval[0]:.6g}, {interval[1]:.6g}]"
            ),
            details={"interval": interval},
        )


class ShootingAccuracyError(MembraneError):
    default_code = "SHOOTING_ACCURACY"


class ScanExhaustedError(MembraneError):
    default_code = "SCAN_EXHAUSTED"

    def __init__(self, found: int, wanted: int, ceiling: float) -> None:
        self.found = found
        self.wanted = wanted
        self.ceiling = ceiling
        super().__init__(
            message=(
                f"Solo {found} de {wanted} raices de lambda antes del techo "
                f"de busqueda lambda={ceiling:.6g}"
            ),
            details={"found": found, "wanted": wanted, "ceiling": ceiling},
        )


class QuadratureError(MembraneError):
    default_code = "QUADRATURE_NOT_CONVERGED"


class NodalCountError(MembraneError):
    default_code = "NODAL_COUNT_MISMATCH"


class DegeneracyError(MembraneError):
    default_code = "NOT_DEGENERATE"


class FieldSymmetryError(MembraneError):
    default_code = "FIELD_NOT_SYMMETRIC"


class RepresentationError(MembraneError):
    default_code = "NO_REPRESENTATION"
