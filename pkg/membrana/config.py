# membrana/config.py
import math
import os
from typing import Any, Dict, Optional

from dotenv import dotenv_values, load_dotenv

from .exceptions import ConfigurationError

load_dotenv()

CONFIG_ENV_VAR = "MATHIEU_CONFIG"


class Settings:
    # Logging
    LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")

    # Serie de perturbaciones y series de potencias
    SERIES_ORDER = int(os.getenv("SERIES_ORDER", 6))
    SERIES_MAX_TERMS = int(os.getenv("SERIES_MAX_TERMS", 200))
    SERIES_TOL = float(os.getenv("SERIES_TOL", 1e-16))
    SERIES_OVERFLOW = float(os.getenv("SERIES_OVERFLOW", 1e250))

    # Integrador de Taylor (paso fijo)
    INTEGRATOR_ORDER = int(os.getenv("INTEGRATOR_ORDER", 16))
    INTEGRATOR_STEPS = int(os.getenv("INTEGRATOR_STEPS", 32))
    INTEGRATOR_MAX_STEP_PHASE = float(os.getenv("INTEGRATOR_MAX_STEP_PHASE", 0.5))

    # Tiro (shooting) para R
    SHOOT_TOL = float(os.getenv("SHOOT_TOL", 1e-10))
    BRACKET_EXPANSIONS = int(os.getenv("BRACKET_EXPANSIONS", 40))

    # Funciones radiales
    RADIAL_SWITCH_SINH = float(os.getenv("RADIAL_SWITCH_SINH", 0.8))

    # Busqueda de lambda
    LAMBDA_TOL = float(os.getenv("LAMBDA_TOL", 1e-10))
    LAMBDA_SCAN_CEILING = float(os.getenv("LAMBDA_SCAN_CEILING", 60.0))
    LAMBDA_RESCAN = os.getenv("LAMBDA_RESCAN", "true").lower() in ("1", "true", "yes")
    DEGENERACY_THRESHOLD = float(os.getenv("DEGENERACY_THRESHOLD", 1e-3))

    # Cuadratura
    QUAD_ORDER = int(os.getenv("QUAD_ORDER", 64))
    QUAD_MAX_ORDER = int(os.getenv("QUAD_MAX_ORDER", 512))
    QUAD_TOL = float(os.getenv("QUAD_TOL", 1e-9))

    # Lineas nodales
    NODAL_GRID = int(os.getenv("NODAL_GRID", 512))
    SCAN_POINTS = int(os.getenv("SCAN_POINTS", 2048))

    def __init__(self, overrides: Optional[Dict[str, Any]] = None):
        for key, raw in (overrides or {}).items():
            name = key.strip().upper()
            if not hasattr(type(self), name) or name.startswith("_"):
                raise ConfigurationError(
                    code="UNKNOWN_SETTING",
                    message=f"Parametro de configuracion desconocido: {key}",
                )
            default = getattr(type(self), name)
            setattr(self, name, _cast(name, raw, default))

    def as_dict(self) -> Dict[str, Any]:
        return {
            name: getattr(self, name)
            for name in dir(type(self))
            if name.isupper()
        }


def _cast(name: str, raw: Any, default: Any) -> Any:
    if raw is None:
        raise ConfigurationError(
            code="EMPTY_SETTING",
            message=f"El parametro {name} no tiene valor",
        )
    try:
        if isinstance(default, bool):
            return str(raw).strip().lower() in ("1", "true", "yes")
        if isinstance(default, int):
            return int(raw)
        if isinstance(default, float):
            value = float(raw)
            if not math.isfinite(value):
                raise ValueError(raw)
            return value
    except (TypeError, ValueError):
        raise ConfigurationError(
            code="INVALID_SETTING",
            message=f"Valor invalido para {name}: {raw!r}",
        )
    return str(raw)


def load_settings(path: Optional[str] = None, **flags: Any) -> Settings:
    """
    Construye la configuracion efectiva.

    Orden de prioridad: flags > archivo (clave = valor) > entorno > defaults.
    Si no se pasa `path` se usa la variable de entorno MATHIEU_CONFIG.
    """
    path = path or os.getenv(CONFIG_ENV_VAR)
    overrides: Dict[str, Any] = {}
    if path:
        if not os.path.isfile(path):
            raise ConfigurationError(
                code="CONFIG_NOT_FOUND",
                message=f"Archivo de configuracion no encontrado: {path}",
            )
        overrides.update(dotenv_values(path))
    overrides.update({k: v for k, v in flags.items() if v is not None})
    return Settings(overrides)


settings = Settings()


def apply_settings(new: Settings) -> None:
    """Copia sobre el singleton `settings` los valores de otra instancia."""
    for name, value in new.as_dict().items():
        setattr(settings, name, value)
