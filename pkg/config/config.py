"""
Configuration file for the fcwf free-choice net toolkit
"""
import os
from pathlib import Path

from dotenv import load_dotenv

load_dotenv()


def _env_int(name: str, default: int) -> int:
    """Read an integer override from the environment

    Args:
        name: Variable name without the FCWF_ prefix
        default: Value used when the variable is unset or empty

    Returns:
        The configured integer
    """
    raw = os.getenv(f"FCWF_{name}", "").strip()
    return int(raw) if raw else default


class Config:
    ROOT_DIR = Path(__file__).resolve().parent.parent
    FIXTURE_DIR = ROOT_DIR / "fixtures" / "nets"
    LOG_DIR = Path(os.getenv("FCWF_LOG_DIR", "logs"))
    LOG_LEVEL = os.getenv("FCWF_LOG_LEVEL", "WARNING")

    # Analysis caps
    STATE_CAP = _env_int("STATE_CAP", 10 ** 6)
    SIPHON_CAP = _env_int("SIPHON_CAP", 10 ** 5)
    ALLOCATION_CAP = _env_int("ALLOCATION_CAP", 10 ** 6)
    SUBSET_NODE_LIMIT = _env_int("SUBSET_NODE_LIMIT", 20)
    MAX_TOKENS = 2 ** 63 - 1

    # Secondary oracle mode: markings with per-place tokens <= 2, total <= |S| + 2
    EXHAUSTIVE_PLACE_TOKENS = 2
    EXHAUSTIVE_EXTRA_TOKENS = 2

    # CLI exit codes
    EXIT_CODES = {
        "yes": 0,
        "no": 1,
        "error": 2,
        "inconclusive": 3,
    }

    # Test-suite corpus
    RANDOM_NET_COUNT = _env_int("RANDOM_NET_COUNT", 200)
    RANDOM_NET_CLUSTERS = _env_int("RANDOM_NET_CLUSTERS", 12)
    RANDOM_NET_SIZE = _env_int("RANDOM_NET_SIZE", 4)
    TEST_STATE_CAP = _env_int("TEST_STATE_CAP", 20000)
    EXECUTION_STEPS = _env_int("EXECUTION_STEPS", 1000)
    TEST_ALLOCATION_CAP = _env_int("TEST_ALLOCATION_CAP", 256)
    TEST_SUBSET_NODES = _env_int("TEST_SUBSET_NODES", 10)
    TEST_BRUTE_CLUSTERS = 8
    PROJECTION_SAMPLES = _env_int("PROJECTION_SAMPLES", 1000)
    PROJECTION_STEPS = 200

    # Fixture corpus shipped in fixtures/nets
    FIXTURES = {
        "cycle1": "cycle1.net",
        "fig1": "fig1.net",
        "fig1_split": "fig1_split.net",
        "fig3": "fig3.net",
        "fcchoice": "fcchoice.net",
        "fig2net": "fig2net.net",
    }
