"""Test JSON config store."""
import json
import logging

import pytest

from src.domain.entities.run_config import RunConfig
from src.domain.errors.exceptions import InvalidConfigError
from src.infrastructure.settings.json_config_store import JsonConfigStore


def test_missing_file_gives_defaults(tmp_path):
    store = JsonConfigStore(tmp_path / "absent.json")
    assert store.load() == RunConfig.default()


def test_save_and_load(tmp_path):
    store = JsonConfigStore(tmp_path / "nested" / "config.json")
    config = RunConfig(n=2, m=2, seed=99, cases=5, max_order=1, max_degree=3, max_terms=4, format="json")
    store.save(config)
    assert store.load() == config


def test_partial_file_fills_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"seed": 5}))
    config = JsonConfigStore(path).load()
    assert config.seed == 5
    assert config.cases == RunConfig.default().cases


def test_unknown_keys_are_ignored(tmp_path, caplog):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"seed": 5, "colour": "red"}))
    with caplog.at_level(logging.WARNING):
        config = JsonConfigStore(path).load()
    assert config.seed == 5
    assert "colour" in caplog.text


@pytest.mark.parametrize("content", ["{broken", "[1, 2]", '{"cases": 0}', '{"format": "xml"}', '{"n": "two"}'])
def test_invalid_files_raise(tmp_path, content):
    path = tmp_path / "config.json"
    path.write_text(content)
    with pytest.raises(InvalidConfigError):
        JsonConfigStore(path).load()


def test_default_location():
    store = JsonConfigStore()
    assert store.config_path.parts[-2:] == ("jetvar", "config.json")


def test_defaults_match_the_acceptance_scale():
    config = RunConfig.default()
    assert (config.seed, config.cases) == (1, 20)
    assert (config.max_order, config.max_degree, config.max_terms) == (3, 3, 3)
    assert config == RunConfig()
