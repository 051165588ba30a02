import sys
from pathlib import Path

import pytest

BACKEND = Path(__file__).resolve().parents[1]
if str(BACKEND) not in sys.path:
    sys.path.insert(0, str(BACKEND))

from app.settings import settings, use_settings  # noqa: E402


def pytest_addoption(parser):
    parser.addoption(
        "--runslow", action="store_true", default=False, help="run the long acceptance sweeps"
    )
    parser.addoption(
        "--runfull",
        action="store_true",
        default=False,
        help="run the sweeps on their full n-grids (minutes per point at n = 2^17)",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance sweep (needs --runslow)")
    config.addinivalue_line("markers", "full: full-size acceptance sweep (needs --runfull)")


def pytest_collection_modifyitems(config, items):
    runslow = config.getoption("--runslow")
    runfull = config.getoption("--runfull")
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    skip_full = pytest.mark.skip(reason="needs --runfull")
    for item in items:
        if "full" in item.keywords and not runfull:
            item.add_marker(skip_full)
        elif "slow" in item.keywords and not (runslow or runfull):
            item.add_marker(skip_slow)


@pytest.fixture
def restore_settings():
    snapshot = settings.model_copy()
    yield settings
    use_settings(snapshot)
