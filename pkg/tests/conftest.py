# tests/conftest.py

import math

import pytest

from membrana.angular import AngularKind
from membrana.config import Settings, apply_settings, settings
from membrana.coords.schemas import EllipseGeometry
from membrana.spectrum import find_lambda, find_lambdas


def geometry_for(eccentricity: float, semi_major: float = 1.0) -> EllipseGeometry:
    """Elipse de semieje mayor dado y excentricidad e = 1/cosh ϑ."""
    theta = math.acosh(1.0 / eccentricity)
    return EllipseGeometry(c=semi_major / math.cosh(theta), theta=theta)


# ---------------------------------------------------------
# Configuracion: cada test deja el singleton como lo encontro
# ---------------------------------------------------------
@pytest.fixture(autouse=True)
def restore_settings():
    snapshot = Settings()
    for name, value in settings.as_dict().items():
        setattr(snapshot, name, value)
    yield
    apply_settings(snapshot)


# ---------------------------------------------------------
# Geometrias
# ---------------------------------------------------------
@pytest.fixture(name="ellipse", scope="session")
def ellipse_fixture() -> EllipseGeometry:
    """e = 0.5, A = 1."""
    return geometry_for(0.5)


@pytest.fixture(name="near_circle", scope="session")
def near_circle_fixture() -> EllipseGeometry:
    """e = 0.1, A = 1: pares casi degenerados."""
    return geometry_for(0.1)


# ---------------------------------------------------------
# Modos (costosos: se calculan una vez por sesion)
# ---------------------------------------------------------
@pytest.fixture(name="even_modes", scope="session")
def even_modes_fixture(ellipse):
    """(g, i) = (0, 1), (0, 2), (2, 1) de segunda especie."""
    return find_lambdas(ellipse, AngularKind.EVEN, 0, 2) + [find_lambda(ellipse, AngularKind.EVEN, 2, 1)]


@pytest.fixture(name="odd_modes", scope="session")
def odd_modes_fixture(ellipse):
    """(g, i) = (1, 1), (1, 2) de primera especie."""
    return find_lambdas(ellipse, AngularKind.ODD, 1, 2)
