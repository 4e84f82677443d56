"""Command module initialization."""

from .base import HeytingCommand
from .check import CheckCommand  # noqa: F401
from .compare import CompareVarietiesCommand  # noqa: F401
from .delta import DeltaCommand  # noqa: F401
from .enrich import EnrichCommand  # noqa: F401
from .prime_filters import PrimeFiltersCommand  # noqa: F401
from .purify import PurifyCommand  # noqa: F401
from .verify import VerifyCommand  # noqa: F401

__all__ = [
    "HeytingCommand",
    "CheckCommand",
    "CompareVarietiesCommand",
    "DeltaCommand",
    "EnrichCommand",
    "PrimeFiltersCommand",
    "PurifyCommand",
    "VerifyCommand",
]
