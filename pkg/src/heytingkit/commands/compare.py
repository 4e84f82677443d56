"""The compare-varieties command."""

import numpy as np

from .. import config
from ..errors import InputError
from ..io import load_algebra
from ..logging_config import get_logger
from ..variety import holds_in, random_term, search_separating_identity, variety_contains
from .base import EXIT_FINDING, EXIT_OK, HeytingCommand

logger = get_logger(__name__)


class CompareVarietiesCommand(HeytingCommand):
    """Look for an identity holding in one algebra and failing in the other.

    Without ``exact`` the answer is "none within bounds"; with ``exact`` variety membership is
    decided both ways, which may exceed the free-algebra budget. When the bounded search ends
    empty, seeded random terms two levels deeper are tried as well.
    """

    name = "compare-varieties"

    def __init__(
        self,
        first: str,
        second: str,
        max_vars: int,
        max_depth: int,
        limit: int,
        exact: bool = False,
        seed: int = config.DEFAULT_SEED,
        random_terms: int = config.RANDOM_TERMS,
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.first_path = first
        self.second_path = second
        self.max_vars = max_vars
        self.max_depth = max_depth
        self.limit = limit
        self.exact = exact
        self.seed = seed
        self.random_terms = random_terms

    def validate(self) -> None:
        if not self.first_path or not self.second_path:
            raise InputError("two algebras are required")
        if self.max_vars < 0 or self.max_depth < 0 or self.limit < 1:
            raise InputError("--vars and --depth must be non-negative, --limit positive")
        super().validate()

    def _sample(self, A, B):
        rng = np.random.default_rng(self.seed)
        for _ in range(self.random_terms):
            term = random_term(rng, self.max_vars, self.max_depth + 2)
            first, second = holds_in(A, term), holds_in(B, term)
            if first != second:
                logger.debug("Random term %s separates the algebras", term)
                return term, first
        return None, None

    def _run(self) -> int:
        A, B = load_algebra(self.first_path), load_algebra(self.second_path)
        self.payload = {"first_size": A.size, "second_size": B.size, "exact": self.exact}
        if self.exact:
            b_in_a, a_in_b = variety_contains(A, B), variety_contains(B, A)
            self.payload.update({"second_in_first": b_in_a, "first_in_second": a_in_b})
            self.emit(f"second in V(first): {b_in_a}")
            self.emit(f"first in V(second): {a_in_b}")
            if b_in_a and a_in_b:
                self.emit("same variety")
                self.payload["identity"] = None
                return EXIT_OK

        result = search_separating_identity(A, B, self.max_vars, self.max_depth, self.limit)
        term, holds_in_first, decided_by = result.term, result.holds_in_first, result.decided_by
        if term is None and decided_by == "search":
            term, holds_in_first = self._sample(A, B)
            if term is not None:
                decided_by = "random"
        self.payload.update(
            {
                "identity": None if term is None else str(term),
                "holds_in": None if term is None else ("first" if holds_in_first else "second"),
                "classes": result.classes,
                "truncated": result.truncated,
                "decided_by": decided_by,
                "seed": self.seed,
            }
        )
        if term is not None:
            where = "first" if holds_in_first else "second"
            self.emit(f"separating identity: {term}")
            self.emit(f"holds in the {where} algebra only")
            if decided_by == "random":
                self.emit(f"found by random sampling (seed {self.seed})")
            return EXIT_FINDING
        if self.exact:
            self.emit("different varieties; no separating identity within bounds")
            return EXIT_FINDING
        note = " (search truncated)" if result.truncated else ""
        self.emit(f"no separating identity within bounds{note}; decided by {decided_by}")
        return EXIT_OK
