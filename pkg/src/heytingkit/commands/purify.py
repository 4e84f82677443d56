"""The purify command: rewrite a KM_tau derivation into an Int_tau derivation."""

from typing import List, Optional

from ..calculus import Derivation, format_derivation
from ..errors import InputError
from ..io import load_derivation, save_derivation
from ..logging_config import get_logger
from ..purify import purify_with_trace
from .base import EXIT_OK, HeytingCommand
from .check import fold_premises

logger = get_logger(__name__)


class PurifyCommand(HeytingCommand):
    """Purify a derivation and write it to ``out`` or into the report."""

    name = "purify"

    def __init__(
        self,
        derivation: str,
        out: Optional[str] = None,
        premises: Optional[List[str]] = None,
        **kwargs,
    ):
        super().__init__(**kwargs)
        self.derivation_path = derivation
        self.out = out
        self.premises = premises

    def validate(self) -> None:
        if not self.derivation_path:
            raise InputError("a derivation file is required")
        super().validate()

    def _run(self) -> int:
        D = load_derivation(self.derivation_path)
        premise = fold_premises(self.premises)
        if premise is not None:
            D = Derivation(D.steps, premise)
        result, ranks = purify_with_trace(D)
        trace = " ".join(str(r) for r in ranks)
        self.payload = {
            "steps_in": len(D),
            "steps_out": len(result),
            "ranks": [[r.level, r.count] for r in ranks],
            "conclusion": str(result.conclusion),
        }
        self.emit(f"ranks: {trace}")
        self.emit(f"{len(D)} steps in, {len(result)} steps out")
        if self.out:
            save_derivation(result, self.out)
            self.payload["out"] = self.out
        else:
            text = format_derivation(result)
            self.payload["derivation"] = text
            self.lines.extend(text.rstrip("\n").split("\n"))
        return EXIT_OK
