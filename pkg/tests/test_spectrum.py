import math

import numpy as np
import pytest
from scipy.special import jn_zeros

from conftest import geometry_for
from membrana.angular import AngularKind
from membrana.coords.schemas import EllipseGeometry
from membrana.exceptions import InvalidParameterError, ScanExhaustedError
from membrana.oracle import bessel_zero
from membrana.spectrum import (
    MembraneMaterial,
    annulus_find_lambda,
    annulus_find_lambdas,
    boundary_series,
    boundary_value,
    charval_slope_check,
    circle_modes,
    circle_nodal_radii,
    circle_roots,
    degenerate_pair_gap,
    find_lambda,
    frequency,
    list_modes,
    mode_shape,
    scan_roots,
)

EVEN, ODD = AngularKind.EVEN, AngularKind.ODD


## Circulo


@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_circle_roots_are_half_bessel_zeros(n):
    roots = circle_roots(n, 4)
    np.testing.assert_allclose(2 * np.array(roots), jn_zeros(n, 4), rtol=1e-12)


def test_circle_roots_agree_with_decimal_oracle():
    assert 2 * circle_roots(0, 1)[0] == pytest.approx(bessel_zero(0, 1), rel=1e-13)
    assert 2 * circle_roots(1, 1)[0] == pytest.approx(bessel_zero(1, 1), rel=1e-13)
    assert bessel_zero(0, 1) == pytest.approx(2.404825557695773, rel=1e-14)
    assert bessel_zero(1, 1) == pytest.approx(3.831705970207512, rel=1e-14)


def test_boundary_series_at_origin():
    value, tail = boundary_series(2, 0.0)
    assert value == pytest.approx(0.5)
    assert tail == 0.0


def test_circle_modes_scale_with_radius():
    modes = circle_modes(2.0, 0, 2)
    assert [m.root_index for m in modes] == [1, 2]
    assert modes[0].lambda_ == pytest.approx(jn_zeros(0, 1)[0] / 4.0)


def test_circle_nodal_radii():
    radii = circle_nodal_radii(1.0, 0, 3)
    zeros = jn_zeros(0, 3)
    np.testing.assert_allclose(radii, zeros[:2] / zeros[2], rtol=1e-12)
    assert circle_nodal_radii(1.0, 2, 1) == []


def test_circle_rejects_bad_arguments():
    with pytest.raises(InvalidParameterError):
        circle_roots(-1, 2)
    with pytest.raises(InvalidParameterError):
        circle_modes(0.0, 0, 1)


## Barrido


def test_scan_roots_finds_multiples_of_pi():
    roots = scan_roots(math.sin, 0.5, 20.0, 3)
    np.testing.assert_allclose(roots, [math.pi, 2 * math.pi, 3 * math.pi], rtol=1e-12)


def test_scan_roots_exhausted():
    with pytest.raises(ScanExhaustedError) as excinfo:
        scan_roots(math.sin, 0.5, 5.0, 3)
    assert excinfo.value.exit_code == 3


def test_scan_roots_rescan_recovers_close_pair():
    # el par 1.3, 1.4 cae entre dos nodos del paso 0.5; el medio paso lo separa
    def fn(x):
        return (x - 1.3) * (x - 1.4) * (x - 3.3) * (x - 4.3)

    coarse = scan_roots(fn, 0.5, 10.0, 2, start=0.1, rescan=False)
    np.testing.assert_allclose(coarse, [3.3, 4.3], atol=1e-12)
    fine = scan_roots(fn, 0.5, 10.0, 2, start=0.1, rescan=True)
    np.testing.assert_allclose(fine, [1.3, 1.4], atol=1e-12)


## Elipse


@pytest.mark.parametrize("kind,g", [(EVEN, 0), (EVEN, 1), (ODD, 1), (EVEN, 2), (ODD, 2)])
@pytest.mark.parametrize("i", [1, 2])
def test_near_circle_limit(kind, g, i):
    e = 0.05
    mode = find_lambda(geometry_for(e), kind, g, i)
    tau = bessel_zero(g, i) / 2
    assert abs(mode.dimensionless - tau) / tau <= 2 * e * e


def test_modes_have_vanishing_boundary_value(ellipse, even_modes, odd_modes):
    for mode in even_modes + odd_modes:
        assert mode.boundary_residual < 1e-10
        assert mode.h == pytest.approx(mode.lambda_ * ellipse.c)
    lams = [m.lambda_ for m in even_modes[:2]]
    assert lams[0] < lams[1]
    assert boundary_value(ellipse, EVEN, 0, lams[0] * 1.01) * boundary_value(ellipse, EVEN, 0, lams[0] * 0.99) < 0


def test_mode_shape_vanishes_on_boundary(ellipse, odd_modes):
    mode = odd_modes[0]
    alpha = np.linspace(0.0, 2 * math.pi, 9)
    edge = mode_shape(mode, alpha, ellipse.theta)
    inside = mode_shape(mode, math.pi / 2, 0.5 * ellipse.theta)
    assert np.max(np.abs(edge)) < 1e-8 * abs(float(inside))
    # la primera especie se anula en el eje mayor
    assert mode_shape(mode, 0.0, 0.3) == pytest.approx(0.0, abs=1e-12)


def test_frequency():
    assert frequency(math.pi, MembraneMaterial(wave_speed=2.0)) == pytest.approx(2.0)
    with pytest.raises(InvalidParameterError):
        frequency(0.0, MembraneMaterial(wave_speed=1.0))


def test_list_modes_sorted(ellipse):
    modes = list_modes(ellipse, max_order=2, max_index=1)
    assert len(modes) == 5
    lams = [m.lambda_ for m in modes]
    assert lams == sorted(lams)
    assert modes[0].spec.label == "even-0-1"


def test_list_modes_rejects_empty_range(ellipse):
    with pytest.raises(InvalidParameterError):
        list_modes(ellipse, max_order=-1, max_index=1)


def test_degenerate_pair_splits_with_eccentricity():
    near = degenerate_pair_gap(geometry_for(0.1), 1, 1)
    far = degenerate_pair_gap(geometry_for(0.5), 1, 1)
    assert near < far


def test_degenerate_gap_shrinks_toward_the_circle():
    # g = 4: el desdoblamiento crece como una potencia alta de e
    ratio = degenerate_pair_gap(geometry_for(0.1), 4, 1) / degenerate_pair_gap(geometry_for(0.2), 4, 1)
    assert 0 < ratio < 0.5


@pytest.mark.parametrize("kind", [EVEN, ODD])
@pytest.mark.parametrize("h", [0.3, 1.0])
def test_charval_slope_below_4h(kind, h):
    assert charval_slope_check(1, kind, h) < 0


## Anillo


def test_annulus_with_focal_inner_boundary_is_full_membrane():
    geometry = EllipseGeometry(c=0.5, theta=1.2)
    inner = annulus_find_lambda(0.5, 0.0, 1.2, ODD, 1, 1)
    assert inner.lambda_ == find_lambda(geometry, ODD, 1, 1).lambda_


def test_annulus_modes_increase():
    modes = annulus_find_lambdas(0.5, 0.4, 1.2, EVEN, 1, 2)
    assert modes[0].lambda_ < modes[1].lambda_
    assert all(m.inner_theta == 0.4 for m in modes)
    assert all(m.boundary_residual < 1e-10 for m in modes)


def test_annulus_rejects_inverted_boundaries():
    with pytest.raises(InvalidParameterError) as excinfo:
        annulus_find_lambdas(0.5, 1.2, 0.4, EVEN, 1, 1)
    assert excinfo.value.code == "INVALID_ANNULUS"
