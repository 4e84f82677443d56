"""The check command: validate a derivation file in one of the calculi."""

from typing import List, Optional

from ..calculus import Calculus, check_derivation, rank
from ..errors import InputError
from ..formulas import Formula, conjunction, parse_formula
from ..io import load_derivation
from ..logging_config import get_logger
from .base import EXIT_FINDING, EXIT_OK, HeytingCommand

logger = get_logger(__name__)


def fold_premises(premises: Optional[List[str]]) -> Optional[Formula]:
    """Parse ``--premise`` flags into a single premise, or None when there are none."""
    if not premises:
        return None
    return conjunction([parse_formula(text) for text in premises])


class CheckCommand(HeytingCommand):
    """Check every step of a derivation and print the diagnostics."""

    name = "check"

    def __init__(
        self,
        derivation: str,
        calculus: str = Calculus.KM_TAU.value,
        premises: Optional[List[str]] = None,
        **kwargs,
    ):
        """Initialize command.

        Args:
            derivation: Derivation file
            calculus: One of inttau, inttautilde, kmtau
            premises: Premise formulas; they replace a premise recorded in the file
        """
        super().__init__(**kwargs)
        self.derivation_path = derivation
        self.calculus = calculus
        self.premises = premises

    def validate(self) -> None:
        if not self.derivation_path:
            raise InputError("a derivation file is required")
        try:
            Calculus(self.calculus)
        except ValueError:
            raise InputError(f"unknown calculus {self.calculus!r}") from None
        super().validate()

    def _run(self) -> int:
        D = load_derivation(self.derivation_path)
        premise = fold_premises(self.premises)
        if premise is None:
            premise = D.premise
        verdict = check_derivation(D, Calculus(self.calculus), premise)
        for diagnostic in verdict.diagnostics:
            self.emit(str(diagnostic))
        status = "valid" if verdict.valid else "invalid"
        self.emit(f"{status} in {self.calculus}: {len(D)} steps, rank {rank(D)}")
        self.payload = {
            "calculus": self.calculus,
            "steps": len(D),
            "valid": verdict.valid,
            "rank": [rank(D).level, rank(D).count],
            "conclusion": str(D.conclusion),
            "diagnostics": [
                {"step": d.index + 1, "kind": d.kind.value, "message": d.message}
                for d in verdict.diagnostics
            ],
        }
        if not verdict.valid:
            logger.warning("Derivation has %d invalid steps", len(verdict.diagnostics))
        return EXIT_OK if verdict.valid else EXIT_FINDING
