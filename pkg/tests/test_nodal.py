import io
import math
from functools import lru_cache

import numpy as np
import pytest

from conftest import geometry_for
from membrana.angular import AngularKind
from membrana.exceptions import DegeneracyError, NodalCountError
from membrana.nodal import (
    export_nodal_csv,
    export_nodal_svg,
    hyperbolic_nodal_angles,
    nodal_ellipses,
    nodal_geometry,
    superposed_nodal,
    write_nodal_csv,
)
from membrana.radial import build_radial
from membrana.spectrum import ModeSpec, annulus_find_lambda, find_lambda, find_lambdas

EVEN, ODD = AngularKind.EVEN, AngularKind.ODD


@pytest.fixture(name="near_pair", scope="module")
def near_pair_fixture(near_circle):
    """Par (3, 1) en e = 0.1: las dos λ casi coinciden."""
    return find_lambda(near_circle, EVEN, 3, 1), find_lambda(near_circle, ODD, 3, 1)


## Modos puros


def test_odd_g1_has_major_axis_and_focal_segment(odd_modes):
    nodal = hyperbolic_nodal_angles(odd_modes[0])
    assert nodal.hyperbolic_alphas == (0.0,)
    assert nodal.includes_major_axis
    assert not nodal.includes_minor_axis
    assert nodal.includes_focal_segment


def test_even_g1_has_minor_axis(ellipse):
    nodal = nodal_geometry(find_lambda(ellipse, EVEN, 1, 1))
    assert len(nodal.hyperbolic_alphas) == 1
    assert nodal.hyperbolic_alphas[0] == pytest.approx(math.pi / 2, abs=1e-9)
    assert nodal.includes_minor_axis
    assert not nodal.includes_focal_segment


def test_even_g2_hyperbolas_off_axes(even_modes):
    nodal = nodal_geometry(even_modes[2])
    a1, a2 = nodal.hyperbolic_alphas
    assert 0 < a1 < math.pi / 2 < a2 < math.pi
    # simetria respecto al eje menor
    assert a1 + a2 == pytest.approx(math.pi, abs=1e-9)
    assert not (nodal.includes_major_axis or nodal.includes_minor_axis)
    assert nodal.ellipse_betas == ()


def test_g0_radial_index_2_has_one_ellipse(ellipse, even_modes):
    nodal = nodal_geometry(even_modes[1])
    assert nodal.hyperbolic_alphas == ()
    assert nodal.counted_ellipses == 1
    beta = nodal.ellipse_betas[0]
    assert 0 < beta < ellipse.theta
    A, B = nodal.ellipse_axes[0]
    assert A == pytest.approx(ellipse.c * math.cosh(beta))
    assert B == pytest.approx(ellipse.c * math.sinh(beta))


@pytest.mark.parametrize("kind,g,i", [(EVEN, 0, 3), (ODD, 2, 2), (EVEN, 3, 2), (ODD, 1, 3)])
def test_line_counts(ellipse, kind, g, i):
    nodal = nodal_geometry(find_lambda(ellipse, kind, g, i))
    assert nodal.counted_hyperbolic_lines == g
    assert nodal.counted_ellipses == i - 1


@lru_cache(maxsize=None)
def ladder(e: float, kind: AngularKind, g: int):
    """Primeros cuatro modos (kind, g, ·) de la elipse de excentricidad e."""
    return tuple(find_lambdas(geometry_for(e), kind, g, 4))


SWEEP = [(kind, g) for kind in (EVEN, ODD) for g in range(5) if not (kind is ODD and g == 0)]


@pytest.mark.parametrize("e", [0.3, 0.7])
@pytest.mark.parametrize("kind,g", SWEEP)
@pytest.mark.parametrize("i", [1, 2, 3])
def test_line_counts_sweep(e, kind, g, i):
    nodal = nodal_geometry(ladder(e, kind, g)[i - 1])
    assert nodal.counted_hyperbolic_lines == g
    assert nodal.counted_ellipses == i - 1


@pytest.mark.parametrize("e", [0.3, 0.7])
@pytest.mark.parametrize("kind,g", SWEEP)
@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_radial_zero_count(e, kind, g, i):
    mode = ladder(e, kind, g)[i - 1]
    beta = np.linspace(0.0, mode.geometry.theta, 4001)[1:-1]
    q = build_radial(mode.cv)(beta)
    assert np.count_nonzero(np.diff(np.sign(q)) != 0) == i - 1


def test_wrong_radial_index_detected(even_modes):
    mode = even_modes[0]
    mislabelled = mode.model_copy(update={"spec": ModeSpec(kind=EVEN, order_g=0, radial_index=2)})
    with pytest.raises(NodalCountError):
        nodal_ellipses(mislabelled)


def test_annulus_nodal_ellipses_lie_between_boundaries():
    mode = annulus_find_lambda(0.5, 0.4, 1.2, EVEN, 0, 3)
    betas = [b for b, _, _ in nodal_ellipses(mode)]
    assert len(betas) == 2
    assert all(0.4 < b < 1.2 for b in betas)
    assert not hyperbolic_nodal_angles(mode).includes_focal_segment


## Exportacion


def test_svg_is_deterministic(tmp_path, ellipse, odd_modes):
    nodal = nodal_geometry(odd_modes[1])
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    export_nodal_svg(ellipse, nodal, first)
    export_nodal_svg(ellipse, nodal, second)
    text = first.read_text(encoding="utf-8")
    assert text == second.read_text(encoding="utf-8")
    for gid in ("boundary", "ellipse-0", "hyperbola-0-0", "hyperbola-0-1", "focal-segment"):
        assert f'id="{gid}"' in text


def test_nodal_csv_format(tmp_path, odd_modes):
    nodal = nodal_geometry(odd_modes[1])
    buffer = io.StringIO()
    write_nodal_csv(nodal, buffer)
    lines = buffer.getvalue().split("\n")
    assert lines[0] == "root,type,count_weight"
    assert lines[1] == "0,major_axis,1"
    assert lines[2].endswith(",ellipse,1")
    assert float(lines[2].split(",")[0]) == pytest.approx(nodal.ellipse_betas[0], rel=1e-14)

    path = tmp_path / "nodal.csv"
    export_nodal_csv(nodal, path)
    assert path.read_bytes() == buffer.getvalue().encode("utf-8")


## Superposicion de un par degenerado


def test_superposed_single_mode_keeps_symmetry(near_pair):
    even, odd = near_pair
    result = superposed_nodal(even, odd, 1.0, 0.0, grid=128)
    assert result.counted_hyperbolic_lines == 3
    assert result.symmetric_about_axes
    assert result.pi_shift == "sign_change"
    assert result.ellipse_betas == ()
    assert result.odd_ellipse_betas == ()


def test_superposed_mixture_rotates_lines(near_pair):
    even, odd = near_pair
    result = superposed_nodal(even, odd, 1.0, 1.0, grid=128)
    assert result.counted_hyperbolic_lines == 3
    assert not result.symmetric_about_axes
    assert all(not math.isclose(a, 0.0, abs_tol=1e-6) for a in result.alpha_roots)
    assert len(result.polylines) > 0
    A = even.geometry.semi_major
    for line in result.polyline_list():
        for x, y in line:
            assert math.hypot(x, y) <= A + 1e-9


def test_superposed_reports_ellipses_of_both_modes(near_circle):
    even, odd = find_lambda(near_circle, EVEN, 3, 2), find_lambda(near_circle, ODD, 3, 2)
    result = superposed_nodal(even, odd, 1.0, 1.0, grid=128)
    assert result.ellipse_betas == tuple(b for b, _, _ in nodal_ellipses(even))
    assert result.odd_ellipse_betas == tuple(b for b, _, _ in nodal_ellipses(odd))
    assert len(result.odd_ellipse_betas) == 1
    assert result.odd_ellipse_betas[0] == pytest.approx(result.ellipse_betas[0], rel=1e-2)
    assert result.odd_ellipse_betas[0] != result.ellipse_betas[0]


def test_superposed_requires_one_mode_of_each_kind(near_pair):
    even, odd = near_pair
    with pytest.raises(DegeneracyError) as excinfo:
        superposed_nodal(odd, even, 1.0, 1.0)
    assert excinfo.value.code == "KIND_MISMATCH"


def test_superposed_requires_matching_pair(even_modes, odd_modes):
    with pytest.raises(DegeneracyError) as excinfo:
        superposed_nodal(even_modes[0], odd_modes[0], 1.0, 1.0)
    assert excinfo.value.code == "PAIR_MISMATCH"


def test_superposed_rejects_split_pair():
    geometry = geometry_for(0.7)
    even, odd = find_lambda(geometry, EVEN, 1, 1), find_lambda(geometry, ODD, 1, 1)
    with pytest.raises(DegeneracyError) as excinfo:
        superposed_nodal(even, odd, 1.0, 1.0)
    assert excinfo.value.code == "NOT_DEGENERATE"
