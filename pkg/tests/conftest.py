import pytest

from src.harness.settings import HarnessSettings


@pytest.fixture
def settings():
    return HarnessSettings()


@pytest.fixture
def fast_settings():
    """Smaller Win scan so suite-level tests stay quick"""
    return HarnessSettings(win_scan_max_order=6)
