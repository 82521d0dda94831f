import logging

import pytest

from homlie.config import ENV_VAR, HomLieConfig, load_config, resolve_config


def test_defaults():
    config = HomLieConfig()
    assert config.seed == 0
    assert config.falsifier_trials == 8
    assert config.random_checks == 20
    assert config.max_levels is None
    assert config.default_adjoint == 0
    assert config.debug_checks is False
    assert config.log_level == "WARNING"


@pytest.mark.parametrize("key,value,attribute,expected", [
    ("seed", "x", "seed", 0),
    ("falsifier_trials", -1, "falsifier_trials", 8),
    ("random_checks", True, "random_checks", 20),
    ("max_levels", 0, "max_levels", None),
    ("debug_checks", "yes", "debug_checks", False),
    ("log_level", "loud", "log_level", "WARNING"),
])
def test_invalid_values_fall_back(caplog, key, value, attribute, expected):
    with caplog.at_level(logging.WARNING):
        config = HomLieConfig({key: value})
    assert getattr(config, attribute) == expected
    assert f"Invalid {key}" in caplog.text


def test_unknown_keys_warn(caplog):
    with caplog.at_level(logging.WARNING):
        HomLieConfig({"colour": "blue"})
    assert "Ignoring unknown config key 'colour'" in caplog.text


def test_log_level_is_upper_cased():
    assert HomLieConfig({"log_level": "debug"}).log_level == "DEBUG"


@pytest.mark.parametrize("name,text", [
    ("c.json", '{"seed": 7, "max_levels": 2}'),
    ("c.yaml", "seed: 7\nmax_levels: 2\n"),
    ("c.toml", "seed = 7\nmax_levels = 2\n"),
])
def test_load_config_formats(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    config = load_config(str(path))
    assert config.seed == 7
    assert config.max_levels == 2


def test_empty_yaml_gives_defaults(tmp_path):
    path = tmp_path / "empty.yaml"
    path.write_text("", encoding="utf-8")
    assert load_config(str(path)).seed == 0


@pytest.mark.parametrize("name,text", [
    ("bad.json", "{"),
    ("bad.yaml", "seed: [1\n"),
    ("bad.toml", "seed = \n"),
    ("list.json", "[1, 2]"),
])
def test_load_config_failures(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    assert load_config(str(path)) is None


def test_missing_config(tmp_path):
    assert load_config(str(tmp_path / "nope.json")) is None


def test_resolve_config_prefers_path_then_env(tmp_path, monkeypatch):
    explicit = tmp_path / "a.json"
    explicit.write_text('{"seed": 1}', encoding="utf-8")
    from_env = tmp_path / "b.json"
    from_env.write_text('{"seed": 2}', encoding="utf-8")
    monkeypatch.setenv(ENV_VAR, str(from_env))
    assert resolve_config(str(explicit)).seed == 1
    assert resolve_config().seed == 2
    monkeypatch.delenv(ENV_VAR)
    assert resolve_config().seed == 0
