import math

import pytest
from hypothesis import given, settings as hsettings
from hypothesis import strategies as st
from pydantic import ValidationError

from membrana.coords.schemas import EllipseGeometry, EllipticPoint
from membrana.coords.transforms import (
    cartesian_to_elliptic,
    elliptic_to_cartesian,
    ellipse_points,
    geometry_from_axes,
    metric_weight,
    semi_axes,
)
from membrana.exceptions import InvalidParameterError


def test_geometry_axes_and_eccentricity():
    geom = EllipseGeometry(c=0.5, theta=math.acosh(2.0))
    A, B = semi_axes(geom)
    assert A == pytest.approx(1.0)
    assert B == pytest.approx(math.sqrt(0.75))
    assert geom.eccentricity == pytest.approx(0.5)


def test_geometry_from_axes_inverts_semi_axes():
    geom = geometry_from_axes(2.0, 1.5)
    assert geom.semi_major == pytest.approx(2.0)
    assert geom.semi_minor == pytest.approx(1.5)
    assert geom.c == pytest.approx(math.sqrt(4.0 - 2.25))


@pytest.mark.parametrize("A,B", [(1.0, 1.0), (1.0, 2.0), (1.0, 0.0)])
def test_geometry_from_axes_rejects_invalid(A, B):
    with pytest.raises(InvalidParameterError):
        geometry_from_axes(A, B)


def test_geometry_requires_positive_values():
    with pytest.raises(ValidationError):
        EllipseGeometry(c=0.0, theta=1.0)
    with pytest.raises(ValidationError):
        EllipseGeometry(c=1.0, theta=-0.1)


def test_focal_segment_snaps_to_beta_zero():
    p = cartesian_to_elliptic(1.0, 0.5, 0.0)
    assert p.beta == 0.0
    assert p.alpha == pytest.approx(math.pi / 3)


def test_points_on_major_axis_beyond_foci():
    p = cartesian_to_elliptic(1.0, 2.0, 0.0)
    assert p.alpha == pytest.approx(0.0, abs=1e-12)
    assert p.beta == pytest.approx(math.acosh(2.0))


def test_lower_half_plane_maps_above_pi():
    p = cartesian_to_elliptic(1.0, 0.3, -0.8)
    assert math.pi < p.alpha < 2 * math.pi
    x, y = elliptic_to_cartesian(1.0, p)
    assert (x, y) == pytest.approx((0.3, -0.8))


def test_degenerate_frame_rejected():
    with pytest.raises(InvalidParameterError) as excinfo:
        cartesian_to_elliptic(0.0, 1.0, 1.0)
    assert excinfo.value.code == "DEGENERATE_FRAME"


def test_canonical_point():
    p = EllipticPoint(alpha=0.4, beta=-0.7).canonical()
    assert p.beta == pytest.approx(0.7)
    assert p.alpha == pytest.approx(2 * math.pi - 0.4)


def test_metric_weight_vanishes_only_at_foci():
    assert metric_weight(EllipticPoint(alpha=0.0, beta=0.0)) == pytest.approx(0.0, abs=1e-15)
    assert metric_weight(EllipticPoint(alpha=math.pi / 2, beta=0.0)) == pytest.approx(1.0)


@hsettings(max_examples=60, deadline=None)
@given(
    alpha=st.floats(min_value=0.0, max_value=2 * math.pi - 1e-3),
    beta=st.floats(min_value=0.1, max_value=3.0),
    c=st.floats(min_value=0.1, max_value=10.0),
)
def test_round_trip(alpha, beta, c):
    x, y = elliptic_to_cartesian(c, EllipticPoint(alpha=alpha, beta=beta))
    p = cartesian_to_elliptic(c, x, y)
    assert p.beta == pytest.approx(beta, abs=1e-9)
    diff = math.remainder(p.alpha - alpha, 2 * math.pi)
    assert abs(diff) < 1e-9


def test_ellipse_points_lie_on_level_curve():
    c, beta = 0.6, 0.9
    x, y = ellipse_points(c, beta, n=73)
    assert x.shape == (73,)
    a, b = c * math.cosh(beta), c * math.sinh(beta)
    assert max(abs((x / a) ** 2 + (y / b) ** 2 - 1.0)) < 1e-12
    assert (x[0], y[0]) == pytest.approx((a, 0.0))
