"""The enrich command: enrichments, the box operator and tilde tables."""

from typing import List, Optional

from ..enrichment import box_operator, check_tilde, enrichment, epairs, tilde_from_pair
from ..logging_config import get_logger
from .base import EXIT_FINDING, EXIT_OK, AlgebraCommand

logger = get_logger(__name__)


class EnrichCommand(AlgebraCommand):
    """Print each a*, the box table, and tilde tables for the chosen E-pairs."""

    name = "enrich"

    def __init__(self, algebra: str, tau: Optional[List[str]] = None, **kwargs):
        """Initialize command.

        Args:
            algebra: Algebra file or fixture
            tau: Labels of the elements a whose tilde table is printed; all when omitted
        """
        super().__init__(algebra, **kwargs)
        self.tau = tau

    def _run(self) -> int:
        A = self.load()
        labels = A.labels
        stars = {}
        self.emit("element  enrichment")
        for a in A.elements:
            star = enrichment(A, a)
            stars[labels[a]] = None if star is None else labels[star]
            self.emit(f"{labels[a]}  {'-' if star is None else labels[star]}")
        box = box_operator(A)
        self.emit("")
        self.emit("box: " + ("-" if box is None else " ".join(labels[x] for x in box)))
        chosen = None if not self.tau else {self.element(A, x) for x in self.tau}
        tildes = []
        code = EXIT_OK
        for pair in epairs(A):
            if chosen is not None and pair.a not in chosen:
                continue
            tilde = tilde_from_pair(pair)
            report = check_tilde(A, tilde.t)
            if not report.ok:
                code = EXIT_FINDING
            values = [labels[x] for x in tilde.t]
            tildes.append(
                {
                    "tau": labels[pair.a],
                    "a_star": labels[pair.a_star],
                    "table": values,
                    "failures": report.failures(),
                }
            )
            self.emit(
                f"tilde ({labels[pair.a]}, {labels[pair.a_star]}): {' '.join(values)}"
                + ("" if report.ok else f"  FAILS {', '.join(report.failures())}")
            )
        self.payload = {
            "enrichment": stars,
            "box": None if box is None else [labels[x] for x in box],
            "tildes": tildes,
        }
        return code
