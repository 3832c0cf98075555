"""Settings loading from the environment."""

import pytest
from pydantic import ValidationError

from pp8.core.config import Settings, get_settings


def test_defaults():
    s = Settings(_env_file=None)
    assert s.threads == 1
    assert s.hc_odd_k_only is False
    assert s.log_level == 'INFO'
    assert s.moduli_file is None


def test_env_prefix(monkeypatch, tmp_path):
    monkeypatch.setenv('PP8_THREADS', '4')
    monkeypatch.setenv('PP8_HC_ODD_K_ONLY', 'true')
    monkeypatch.setenv('PP8_OUTPUT_DIR', str(tmp_path))
    s = Settings(_env_file=None)
    assert s.threads == 4
    assert s.hc_odd_k_only is True
    assert s.output_dir == tmp_path


def test_threads_must_be_positive(monkeypatch):
    monkeypatch.setenv('PP8_THREADS', '0')
    with pytest.raises(ValidationError):
        Settings(_env_file=None)


def test_settings_cached():
    assert get_settings() is get_settings()
