import pytest

from membrana.config import CONFIG_ENV_VAR, Settings, load_settings
from membrana.exceptions import ConfigurationError


def test_settings_defaults():
    s = Settings()
    assert s.SERIES_ORDER == 6
    assert s.SERIES_MAX_TERMS == 200
    assert s.INTEGRATOR_ORDER == 16
    assert s.QUAD_ORDER == 64
    assert s.NODAL_GRID == 512


def test_settings_override_is_case_insensitive_and_cast():
    s = Settings({"series_order": "8", "QUAD_TOL": "1e-7"})
    assert s.SERIES_ORDER == 8
    assert s.QUAD_TOL == pytest.approx(1e-7)


def test_settings_bool_flag():
    assert Settings({"LAMBDA_RESCAN": "false"}).LAMBDA_RESCAN is False
    assert Settings({"LAMBDA_RESCAN": "yes"}).LAMBDA_RESCAN is True


def test_unknown_setting_rejected():
    with pytest.raises(ConfigurationError) as excinfo:
        Settings({"NOT_A_SETTING": "1"})
    assert excinfo.value.code == "UNKNOWN_SETTING"
    assert excinfo.value.exit_code == 2


def test_invalid_value_rejected():
    with pytest.raises(ConfigurationError) as excinfo:
        Settings({"SHOOT_TOL": "abc"})
    assert excinfo.value.code == "INVALID_SETTING"


def test_non_finite_value_rejected():
    with pytest.raises(ConfigurationError):
        Settings({"QUAD_TOL": "nan"})


def test_load_settings_from_file_and_flags(tmp_path):
    path = tmp_path / "membrana.cfg"
    path.write_text("QUAD_ORDER = 32\nLOG_LEVEL = INFO\n", encoding="utf-8")
    s = load_settings(str(path), LOG_LEVEL="DEBUG")
    assert s.QUAD_ORDER == 32
    # los flags prevalecen sobre el archivo
    assert s.LOG_LEVEL == "DEBUG"


def test_load_settings_from_env_var(tmp_path, monkeypatch):
    path = tmp_path / "env.cfg"
    path.write_text("NODAL_GRID=128\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert load_settings().NODAL_GRID == 128


def test_load_settings_missing_file(tmp_path):
    with pytest.raises(ConfigurationError) as excinfo:
        load_settings(str(tmp_path / "nope.cfg"))
    assert excinfo.value.code == "CONFIG_NOT_FOUND"


def test_none_flags_are_ignored():
    s = load_settings(None, LOG_LEVEL=None)
    assert s.LOG_LEVEL == Settings().LOG_LEVEL
