"""Configuration and environment settings."""

import os

from dotenv import load_dotenv

load_dotenv(override=False)


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return int(value)


# Free-algebra realization (variety membership)
FREE_ALGEBRA_BUDGET = _int_env("HEYTINGKIT_FREE_BUDGET", 4096)
FREE_ALGEBRA_MAX_ELEMENTS = _int_env("HEYTINGKIT_FREE_MAX_ELEMENTS", 50000)

# Term search
SEARCH_MAX_VARS = _int_env("HEYTINGKIT_SEARCH_VARS", 3)
SEARCH_MAX_DEPTH = _int_env("HEYTINGKIT_SEARCH_DEPTH", 5)
SEARCH_TERM_LIMIT = _int_env("HEYTINGKIT_TERM_LIMIT", 20000)

# Verification harness
TOWER_MAX_STEPS = _int_env("HEYTINGKIT_TOWER_STEPS", 3)
PAIR_SAMPLE_LIMIT = _int_env("HEYTINGKIT_PAIR_SAMPLES", 12)
RANDOM_TERMS = _int_env("HEYTINGKIT_RANDOM_TERMS", 25)
DEFAULT_SEED = _int_env("HEYTINGKIT_SEED", 0)
