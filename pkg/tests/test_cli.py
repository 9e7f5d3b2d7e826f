import csv
import io
import math

import pytest
from scipy.special import jn_zeros

from membrana import __version__
from membrana.cli import main


def read_table(text: str):
    """(procedencia, cabecera, filas) de una salida CSV de la CLI."""
    provenance = {}
    body = []
    for line in text.split("\n"):
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            provenance[key] = value
        elif line:
            body.append(line)
    rows = list(csv.reader(io.StringIO("\n".join(body))))
    return provenance, rows[0], rows[1:]


def test_charval_both_methods(capsys):
    assert main(["charval", "--order", "1", "--kind", "even", "--h", "0.5", "--method", "both"]) == 0
    out = capsys.readouterr().out
    assert "\r" not in out
    provenance, header, rows = read_table(out)
    assert header == ["method", "R", "M", "error_estimate"]
    assert [r[0] for r in rows] == ["series", "shooting"]
    assert provenance["name"] == "R"
    series, shooting = (float(r[1]) for r in rows)
    assert abs(series - shooting) == pytest.approx(float(provenance["disagreement"]), abs=1e-15)
    assert float(provenance["disagreement"]) <= max(1e-8, 10 * float(provenance["bound"]))
    # M = R − 2h²
    assert float(rows[1][2]) == pytest.approx(shooting - 0.5)


def test_charval_odd_uses_primed_name(capsys):
    assert main(["charval", "--order", "2", "--kind", "odd", "--h", "0"]) == 0
    provenance, _, rows = read_table(capsys.readouterr().out)
    assert provenance["name"] == "R'"
    assert rows == [["shooting", "4", "4", "0"]]


def test_charval_rejects_odd_order_zero(capsys):
    assert main(["charval", "--order", "0", "--kind", "odd", "--h", "0.5"]) == 2
    assert "error[INVALID_ORDER]" in capsys.readouterr().err


def test_modes_output_is_deterministic(tmp_path, capsys):
    argv = ["modes", "--semi-axes", "1,0.8", "--max-order", "1", "--max-index", "1", "--wave-speed", "2"]
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(argv + ["-o", str(first)]) == 0
    assert main(argv + ["--output", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()

    provenance, header, rows = read_table(first.read_text(encoding="utf-8"))
    assert header == ["kind", "g", "i", "lambda", "R", "frequency"]
    assert float(provenance["A"]) == pytest.approx(1.0)
    assert float(provenance["B"]) == pytest.approx(0.8)
    assert len(rows) == 3
    lams = [float(r[3]) for r in rows]
    assert lams == sorted(lams)
    for row in rows:
        assert float(row[5]) == pytest.approx(float(row[3]) * 2 / math.pi, rel=1e-14)
    assert capsys.readouterr().out == ""


def test_nodal_with_svg(tmp_path, capsys):
    svg = tmp_path / "mode.svg"
    argv = ["nodal", "--focal-c", "0.5", "--theta", "1.3", "--kind", "odd", "--order", "2", "--index", "2",
            "--svg", str(svg)]
    assert main(argv) == 0
    _, header, rows = read_table(capsys.readouterr().out)
    assert header == ["root", "type", "count_weight"]
    types = [r[1] for r in rows]
    assert types == ["major_axis", "minor_axis", "ellipse"]
    text = svg.read_text(encoding="utf-8")
    assert 'id="focal-segment"' in text
    assert 'id="ellipse-0"' in text


def test_annulus_ring(capsys):
    assert main(["annulus", "--rho-inner", "0.5", "--rho-outer", "1", "--order", "1", "--count", "2"]) == 0
    provenance, header, rows = read_table(capsys.readouterr().out)
    assert provenance["c"] == "0"
    assert header == ["kind", "g", "i", "lambda", "R"]
    assert [r[2] for r in rows] == ["1", "2"]
    assert rows[0][4] == "1"


def test_annulus_requires_boundaries(capsys):
    assert main(["annulus", "--focal-c", "0.5", "--order", "1"]) == 2
    assert "error[USAGE]" in capsys.readouterr().err


def test_circle(capsys):
    assert main(["circle", "--radius", "2", "--order", "0", "--count", "2"]) == 0
    _, header, rows = read_table(capsys.readouterr().out)
    assert header == ["n", "s", "tau", "lambda"]
    taus = [float(r[2]) for r in rows]
    assert taus == pytest.approx(list(jn_zeros(0, 2) / 2), rel=1e-13)
    assert float(rows[0][3]) == pytest.approx(taus[0] / 2, rel=1e-14)


def test_expand_builtin_field(capsys):
    argv = ["expand", "--semi-axes", "1,0.8", "--field", "bump", "--max-order", "0", "--max-index", "2"]
    assert main(argv) == 0
    provenance, header, rows = read_table(capsys.readouterr().out)
    assert header == ["kind", "g", "i", "lambda", "coefficient"]
    assert [(r[0], r[1], r[2]) for r in rows] == [("even", "0", "1"), ("even", "0", "2")]
    assert provenance["field"] == "bump"
    assert 0.0 <= float(provenance["residual_norm"]) < 1.0
    assert float(rows[0][4]) > 0


def test_expand_requires_a_field_source(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["expand", "--semi-axes", "1,0.8", "--max-order", "0", "--max-index", "1"])
    assert excinfo.value.code == 2


def test_missing_geometry_is_usage_error(capsys):
    assert main(["modes", "--max-order", "1", "--max-index", "1"]) == 2
    assert "error[USAGE]" in capsys.readouterr().err


def test_malformed_semi_axes(capsys):
    assert main(["modes", "--semi-axes", "1;2", "--max-order", "1", "--max-index", "1"]) == 2
    assert "error[USAGE]" in capsys.readouterr().err


def test_invalid_geometry_values(capsys):
    assert main(["modes", "--focal-c", "-1", "--theta", "1", "--max-order", "0", "--max-index", "1"]) == 2
    assert "error[INVALID_PARAMETER]" in capsys.readouterr().err


def test_invalid_log_level(capsys):
    assert main(["--log-level", "LOUD", "circle", "--radius", "1", "--order", "0"]) == 2
    assert "error[INVALID_SETTING]" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    assert main(["--config", str(tmp_path / "none.cfg"), "circle", "--radius", "1", "--order", "0"]) == 2
    assert "error[CONFIG_NOT_FOUND]" in capsys.readouterr().err


def test_scan_ceiling_from_config_is_numeric_error(tmp_path, capsys):
    cfg = tmp_path / "low.cfg"
    cfg.write_text("LAMBDA_SCAN_CEILING=1\n", encoding="utf-8")
    argv = ["--config", str(cfg), "modes", "--semi-axes", "1,0.8", "--max-order", "0", "--max-index", "1"]
    assert main(argv) == 3
    assert "error[SCAN_EXHAUSTED]" in capsys.readouterr().err


def test_version(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["--version"])
    assert excinfo.value.code == 0
    assert __version__ in capsys.readouterr().out
