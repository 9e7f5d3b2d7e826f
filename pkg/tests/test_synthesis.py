import logging
import math

import numpy as np
import pytest

from conftest import geometry_for
from membrana.config import Settings, apply_settings
from membrana.coords.schemas import EllipticPoint
from membrana.exceptions import FieldSymmetryError, InvalidParameterError, QuadratureError
from membrana.spectrum import MembraneMaterial, annulus_find_lambda, mode_shape
from membrana.synthesis import (
    VelocityField,
    adaptive_quad,
    builtin_field,
    check_symmetry,
    evaluate_motion,
    expand_velocity,
    field_from_csv,
    gram_matrix,
    inner_product,
    separated_identities,
    split_even_odd,
    velocity_of_motion,
)
from membrana.synthesis.quadrature import weight

MATERIAL = MembraneMaterial(wave_speed=1.5)


@pytest.fixture(name="all_modes", scope="module")
def all_modes_fixture(even_modes, odd_modes):
    return list(even_modes) + list(odd_modes)


@pytest.fixture(name="synthetic", scope="module")
def synthetic_fixture(even_modes, odd_modes):
    """Campo construido con coeficientes conocidos."""
    chosen = [(even_modes[0], 0.3), (even_modes[2], -0.2), (odd_modes[0], 0.5)]

    def func(alpha, beta):
        total = np.zeros(np.shape(alpha))
        for mode, a in chosen:
            total += 2 * MATERIAL.wave_speed * mode.lambda_ * a * mode_shape(mode, alpha, beta)
        return total

    return VelocityField(name="synthetic", geometry=even_modes[0].geometry, func=func), chosen


## Campos


def test_split_even_odd_reconstructs_field(ellipse):
    field = builtin_field("mixed", ellipse)
    odd, even = split_even_odd(field)
    rng = np.random.default_rng(7)
    alpha = rng.uniform(0.0, 2 * math.pi, 50)
    beta = rng.uniform(0.0, ellipse.theta, 50)
    np.testing.assert_allclose(odd(alpha, beta) + even(alpha, beta), field(alpha, beta), atol=1e-14)
    np.testing.assert_allclose(odd(-alpha, beta), -odd(alpha, beta), atol=1e-14)
    np.testing.assert_allclose(even(-alpha, beta), even(alpha, beta), atol=1e-14)


def test_odd_bump_has_no_even_part(ellipse):
    _, even = split_even_odd(builtin_field("odd_bump", ellipse))
    alpha = np.linspace(0.0, 2 * math.pi, 17)
    np.testing.assert_allclose(even(alpha, 0.4 * ellipse.theta), 0.0, atol=1e-15)


def test_builtin_fields_vanish_on_boundary(ellipse):
    alpha = np.linspace(0.0, 2 * math.pi, 33)
    for name in ("bump", "odd_bump", "mixed"):
        field = builtin_field(name, ellipse)
        np.testing.assert_allclose(field(alpha, ellipse.theta), 0.0, atol=1e-12)


def test_unknown_builtin_field(ellipse):
    with pytest.raises(InvalidParameterError) as excinfo:
        builtin_field("plateau", ellipse)
    assert excinfo.value.code == "UNKNOWN_FIELD"


def test_field_must_be_single_valued_on_focal_segment(ellipse):
    field = VelocityField(name="twisted", geometry=ellipse, func=lambda a, b: np.sin(a) * np.cos(b))
    with pytest.raises(FieldSymmetryError) as excinfo:
        check_symmetry(field)
    assert excinfo.value.exit_code == 3


def test_nonvanishing_boundary_is_warned(ellipse, caplog):
    field = VelocityField(name="plateau", geometry=ellipse, func=lambda a, b: np.ones_like(a))
    with caplog.at_level(logging.WARNING, logger="membrana.synthesis.fields"):
        check_symmetry(field)
    assert "no se anula en el contorno" in caplog.text


def test_field_from_csv(tmp_path, ellipse):
    bump = builtin_field("bump", ellipse)
    alphas = np.linspace(0.0, 2 * math.pi, 65)
    betas = np.linspace(0.0, ellipse.theta, 25)
    path = tmp_path / "field.csv"
    lines = ["alpha,beta,value"]
    for a in alphas:
        for b in betas:
            lines.append(f"{float(a)!r},{float(b)!r},{float(bump(a, b))!r}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")

    field = field_from_csv(str(path), ellipse)
    assert field.smoothness == "sampled"
    rng = np.random.default_rng(3)
    alpha = rng.uniform(-1.0, 7.0, 40)
    beta = rng.uniform(0.0, ellipse.theta, 40)
    np.testing.assert_allclose(field(alpha, beta), bump(alpha, beta), atol=1e-3)


def test_field_from_csv_rejects_bad_files(tmp_path, ellipse):
    missing = tmp_path / "missing.csv"
    missing.write_text("a,b,v\n0,0,1\n", encoding="utf-8")
    small = tmp_path / "small.csv"
    small.write_text("alpha,beta,value\n0,0,1\n1,0,1\n", encoding="utf-8")
    for path in (missing, small):
        with pytest.raises(InvalidParameterError) as excinfo:
            field_from_csv(str(path), ellipse)
        assert excinfo.value.code == "INVALID_FIELD_CSV"


## Cuadratura y ortogonalidad


def test_adaptive_quad_integrates_weight():
    theta = 0.8
    value, order = adaptive_quad(weight, theta)
    assert value == pytest.approx(math.pi * math.sinh(2 * theta), rel=1e-12)
    assert order >= 64


def test_adaptive_quad_reports_non_convergence():
    apply_settings(Settings({"QUAD_MAX_ORDER": "64"}))

    def rough(alpha, beta):
        return np.outer(np.cos(200 * alpha), np.ones_like(beta))

    with pytest.raises(QuadratureError):
        adaptive_quad(rough, 1.0, order=32)


def test_modes_are_orthogonal(even_modes):
    n0 = inner_product(even_modes[0], even_modes[0])
    n1 = inner_product(even_modes[1], even_modes[1])
    n2 = inner_product(even_modes[2], even_modes[2])
    assert n0 > 0 and n1 > 0 and n2 > 0
    assert abs(inner_product(even_modes[0], even_modes[1])) < 1e-8 * math.sqrt(n0 * n1)
    assert abs(inner_product(even_modes[0], even_modes[2])) < 1e-8 * math.sqrt(n0 * n2)


def test_inner_product_requires_same_kind(even_modes, odd_modes):
    with pytest.raises(InvalidParameterError) as excinfo:
        inner_product(even_modes[0], odd_modes[0])
    assert excinfo.value.code == "KIND_MISMATCH"


def test_gram_matrix_is_diagonal(all_modes):
    gram = gram_matrix(all_modes)
    diag = np.sqrt(np.diag(gram))
    assert np.all(diag > 0)
    normalized = gram / np.outer(diag, diag)
    np.testing.assert_allclose(normalized, np.eye(len(all_modes)), atol=1e-8)
    # especies distintas: cero exacto
    assert gram[0, 3] == 0.0


@pytest.mark.parametrize("pair", [(0, 1), (0, 2), (1, 2)])
def test_separated_identities(even_modes, pair):
    ids = separated_identities(even_modes[pair[0]], even_modes[pair[1]])
    assert ids.angular_gap <= 1e-8 * ids.scale
    assert ids.radial_gap <= 1e-8 * ids.scale


## Desarrollo modal


def test_expansion_recovers_known_coefficients(synthetic, all_modes):
    field, chosen = synthetic
    expansion = expand_velocity(field, all_modes, MATERIAL)
    known = {mode.spec: a for mode, a in chosen}
    coeffs = {**expansion.even_coeffs, **expansion.odd_coeffs}
    for mode in all_modes:
        assert coeffs[mode.spec] == pytest.approx(known.get(mode.spec, 0.0), abs=1e-7)
    assert expansion.residual_norm < 1e-7


def test_motion_at_time_zero(synthetic, all_modes):
    field, _ = synthetic
    expansion = expand_velocity(field, all_modes, MATERIAL)
    p = EllipticPoint(alpha=0.7, beta=0.4)
    assert evaluate_motion(expansion, p, 0.0, MATERIAL) == pytest.approx(0.0, abs=1e-15)
    alpha = np.linspace(0.0, 2 * math.pi, 9)
    beta = np.full_like(alpha, 0.5)
    np.testing.assert_allclose(
        velocity_of_motion(expansion, alpha, beta, 0.0, MATERIAL), field(alpha, beta), atol=1e-6
    )


def test_zero_field_has_zero_coefficients(ellipse, all_modes):
    zero = VelocityField(name="zero", geometry=ellipse, func=lambda a, b: np.zeros_like(a))
    expansion = expand_velocity(zero, all_modes, MATERIAL)
    assert all(term.coefficient == 0.0 for term in expansion.terms)
    assert expansion.residual_norm == 0.0


def test_residual_does_not_grow_with_more_modes(ellipse, even_modes):
    bump = builtin_field("bump", ellipse)
    one = expand_velocity(bump, even_modes[:1], MATERIAL)
    two = expand_velocity(bump, even_modes[:2], MATERIAL)
    assert two.residual_norm <= one.residual_norm + 1e-12
    assert one.residual_norm < 1.0


def test_bump_only_excites_even_modes(ellipse, all_modes):
    expansion = expand_velocity(builtin_field("bump", ellipse), all_modes, MATERIAL)
    assert all(abs(a) < 1e-10 for a in expansion.odd_coeffs.values())


def test_expansion_rejects_invalid_mode_sets(ellipse, even_modes):
    bump = builtin_field("bump", ellipse)
    with pytest.raises(InvalidParameterError) as excinfo:
        expand_velocity(bump, [], MATERIAL)
    assert excinfo.value.code == "EMPTY_MODE_SET"

    other = builtin_field("bump", geometry_for(0.3))
    with pytest.raises(InvalidParameterError) as excinfo:
        expand_velocity(other, even_modes, MATERIAL)
    assert excinfo.value.code == "GEOMETRY_MISMATCH"

    ring = annulus_find_lambda(ellipse.c, 0.3, ellipse.theta, "even", 0, 1)
    with pytest.raises(InvalidParameterError) as excinfo:
        expand_velocity(bump, [ring], MATERIAL)
    assert excinfo.value.code == "ANNULUS_NOT_SUPPORTED"
