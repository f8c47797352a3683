import pytest

from cubicdisc.config import get_settings


@pytest.fixture(autouse=True)
def _fresh_settings(monkeypatch):
    for name in ("CUBICDISC_LOG_LEVEL", "CUBICDISC_TABLE_WORKERS", "CUBICDISC_SEARCH_BOUND", "CUBICDISC_TABLE_MAX"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
