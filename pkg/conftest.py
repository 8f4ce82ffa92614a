"""
Pytest configuration for the fcwf test suite
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from loguru import logger  # noqa: E402

from config.config import Config  # noqa: E402
from utils.logger import LoggerSetup  # noqa: E402


def pytest_addoption(parser):
    """Add command line options to pytest"""
    parser.addoption(
        "--random-nets",
        action="store",
        type=int,
        default=Config.RANDOM_NET_COUNT,
        help="Number of generated nets in the cross-check corpus"
    )
    parser.addoption(
        "--state-cap",
        action="store",
        type=int,
        default=Config.TEST_STATE_CAP,
        help="State cap for reachability checks in tests"
    )


@pytest.fixture(scope="session")
def random_net_count(request):
    """Get the corpus size from command line option"""
    return request.config.getoption("--random-nets")


@pytest.fixture(scope="session")
def state_cap(request):
    """Get the exploration cap from command line option"""
    return request.config.getoption("--state-cap")


@pytest.fixture(scope="session", autouse=True)
def session_logger():
    """Configure loguru once per test session (one log per xdist worker)"""
    run_name = os.environ.get("PYTEST_XDIST_WORKER", "pytest")
    LoggerSetup.setup_logger(run_name, session=True)
    yield
    logger.success("Test session completed")
