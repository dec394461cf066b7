"""Tests for settings from the environment, ``.env`` files and overrides."""

from pathlib import Path

import pytest

from zeta_discrete_moments.config import Settings, load_settings
from zeta_discrete_moments.errors import InvalidArgumentError


@pytest.fixture(autouse=True)
def clean_environment(tmp_path, monkeypatch):
    """Fixture running each test in an empty directory without ZDM_* variables."""
    monkeypatch.chdir(tmp_path)
    for name in Settings.model_fields:
        # set first so variables loaded from .env files are removed on teardown
        monkeypatch.setenv(f"ZDM_{name.upper()}", "")
        monkeypatch.delenv(f"ZDM_{name.upper()}")


class TestLoadSettings:
    """Tests for load_settings."""

    @pytest.mark.unit
    def test_defaults(self):
        settings = load_settings()
        assert settings.precision_bits == 128
        assert settings.workers == 1
        assert settings.cache_dir is None
        assert settings.checkpoints_every == 250
        assert settings.log_level == "WARNING"

    @pytest.mark.unit
    def test_environment(self, monkeypatch):
        monkeypatch.setenv("ZDM_PRECISION_BITS", "256")
        monkeypatch.setenv("ZDM_CACHE_DIR", "/var/cache/zdm")
        monkeypatch.setenv("ZDM_LOG_LEVEL", "info")
        settings = load_settings()
        assert settings.precision_bits == 256
        assert settings.cache_dir == Path("/var/cache/zdm")
        assert settings.log_level == "INFO"

    @pytest.mark.unit
    def test_overrides_win(self, monkeypatch):
        monkeypatch.setenv("ZDM_WORKERS", "8")
        assert load_settings(workers=2).workers == 2
        assert load_settings(workers=None).workers == 8

    @pytest.mark.unit
    def test_dotenv_file(self, tmp_path):
        env_file = tmp_path / "run.env"
        env_file.write_text("ZDM_CHECKPOINTS_EVERY=100\n")
        settings = load_settings(env_file=env_file)
        assert settings.checkpoints_every == 100

    @pytest.mark.unit
    def test_dotenv_in_working_directory(self, tmp_path):
        (tmp_path / ".env").write_text("ZDM_WORKERS=3\n")
        assert load_settings().workers == 3

    @pytest.mark.unit
    @pytest.mark.parametrize(
        "name,value",
        [
            pytest.param("ZDM_PRECISION_BITS", "32", id="low_precision"),
            pytest.param("ZDM_WORKERS", "0", id="no_workers"),
            pytest.param("ZDM_LOG_LEVEL", "chatty", id="log_level"),
            pytest.param("ZDM_CHECKPOINTS_EVERY", "many", id="not_a_number"),
        ],
    )
    def test_invalid_values(self, monkeypatch, name, value):
        monkeypatch.setenv(name, value)
        with pytest.raises(InvalidArgumentError, match=name):
            load_settings()

    @pytest.mark.unit
    def test_eval_config(self):
        cfg = load_settings(precision_bits=192).eval_config()
        assert cfg.precision_bits == 192
