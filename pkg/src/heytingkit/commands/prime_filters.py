"""The prime-filters command: the spectrum S_A and the special filters of each element."""

from ..filters import prime_filters, special_filters
from ..logging_config import get_logger
from .base import EXIT_OK, AlgebraCommand

logger = get_logger(__name__)


class PrimeFiltersCommand(AlgebraCommand):
    """Print the prime filters of an algebra, their order and X_a, F_a, max h-bar(a)."""

    name = "prime-filters"

    def _run(self) -> int:
        A = self.load()
        spectrum = prime_filters(A)
        labels = A.labels
        filters = []
        self.emit(f"algebra: {A.size} elements, {len(spectrum)} prime filters")
        for i, F in enumerate(spectrum):
            above = [j for j in range(len(spectrum)) if j != i and spectrum.order[i, j]]
            filters.append(
                {
                    "index": i,
                    "members": F.labels(),
                    "generator": labels[F.generator],
                    "contained_in": above,
                }
            )
            self.emit(
                f"F{i}  generator {labels[F.generator]}  {F}  inside {_names(above)}"
            )
        elements = []
        self.emit("")
        self.emit("element  X_a  F_a  max-excluding")
        for a in A.elements:
            x_a, f_a = special_filters(A, a)
            maximal = spectrum.maximal(spectrum.excluding(a))
            indices = [i for i in range(len(spectrum)) if maximal >> i & 1]
            elements.append(
                {
                    "element": labels[a],
                    "x_a": x_a.labels(),
                    "f_a": f_a.labels(),
                    "max_excluding": indices,
                }
            )
            self.emit(f"{labels[a]}  {x_a}  {f_a}  {_names(indices)}")
        self.payload = {"size": A.size, "prime_filters": filters, "elements": elements}
        logger.info("Listed %d prime filters", len(spectrum))
        return EXIT_OK


def _names(indices) -> str:
    return "{" + ", ".join(f"F{i}" for i in indices) + "}"
