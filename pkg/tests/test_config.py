import logging

import pytest

from core.config import load_settings
from core.log import configure_logging


def test_defaults(monkeypatch):
    for key in ("TORSION_SEARCH_PADDING", "TORSION_ORACLE_SYLLABLES", "LOG_LEVEL", "PORT"):
        monkeypatch.delenv(key, raising=False)
    settings = load_settings()
    assert settings.search_padding == 3
    assert settings.oracle_syllables == 6
    assert settings.log_level == "WARNING"
    assert settings.port == 8000


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("TORSION_SEARCH_PADDING", "5")
    monkeypatch.setenv("TORSION_ORACLE_CANDIDATES", "1000")
    settings = load_settings()
    assert settings.search_padding == 5
    assert settings.oracle_candidates == 1000


@pytest.mark.parametrize("key, value", [("TORSION_ORACLE_SYLLABLES", "0"), ("TORSION_GEOMETRY_TOLERANCE", "tiny")])
def test_invalid_values(monkeypatch, key, value):
    monkeypatch.setenv(key, value)
    with pytest.raises(ValueError):
        load_settings()


def test_configure_logging_installs_one_handler():
    configure_logging("debug")
    configure_logging("INFO")
    root = logging.getLogger()
    ours = [h for h in root.handlers if getattr(h, "_torsion", False)]
    assert len(ours) == 1
    assert root.level == logging.INFO
    configure_logging("WARNING")
