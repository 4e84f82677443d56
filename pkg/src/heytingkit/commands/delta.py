"""The delta command: Stone embedding, delta h and the subalgebra delta[A_X]."""

from typing import List, Optional

from ..lattice import find_isomorphism
from ..logging_config import get_logger
from ..stone import ALL, delta_h, delta_subalgebra, stone_embed
from .base import EXIT_OK, AlgebraCommand

logger = get_logger(__name__)


class DeltaCommand(AlgebraCommand):
    """Print S_A, the h and delta h tables, and the size of delta[A_X]."""

    name = "delta"

    def __init__(self, algebra: str, elements: Optional[List[str]] = None, **kwargs):
        """Initialize command.

        Args:
            algebra: Algebra file or fixture
            elements: Labels of X; all elements when omitted
        """
        super().__init__(algebra, **kwargs)
        self.elements = elements

    def _run(self) -> int:
        A = self.load()
        chosen = ALL if not self.elements else [self.element(A, x) for x in self.elements]
        sd = stone_embed(A)
        spectrum = sd.spectrum
        self.emit(f"spectrum: {len(spectrum)} prime filters")
        for i, F in enumerate(spectrum):
            self.emit(f"F{i}  {F}")
        self.emit("")
        self.emit("element  h  delta-h")
        table = []
        for x in A.elements:
            h, dh = sd.h_mask(x), delta_h(sd, x)
            table.append(
                {
                    "element": A.labels[x],
                    "h": _indices(h, len(spectrum)),
                    "delta_h": _indices(dh, len(spectrum)),
                }
            )
            self.emit(f"{A.labels[x]}  {_show(h, len(spectrum))}  {_show(dh, len(spectrum))}")
        built = delta_subalgebra(A, chosen, sd)
        isomorphic = find_isomorphism(A, built.algebra) is not None
        self.emit("")
        self.emit(f"delta[A_X]: {built.algebra.size} elements, isomorphic to A: {isomorphic}")
        self.payload = {
            "size": A.size,
            "upsets": sd.upset_algebra.size,
            "table": table,
            "delta_size": built.algebra.size,
            "isomorphic": isomorphic,
        }
        logger.info("delta[A_X] has %d elements", built.algebra.size)
        return EXIT_OK


def _indices(mask: int, count: int) -> List[int]:
    return [i for i in range(count) if mask >> i & 1]


def _show(mask: int, count: int) -> str:
    return "{" + ", ".join(f"F{i}" for i in _indices(mask, count)) + "}"
