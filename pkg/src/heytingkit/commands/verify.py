"""The verify command: run the invariant suite on one algebra."""

from ..logging_config import get_logger
from ..variety import SearchBounds
from ..verification import run_suite
from .base import EXIT_FINDING, EXIT_OK, AlgebraCommand

logger = get_logger(__name__)


class VerifyCommand(AlgebraCommand):
    """Print a pass/fail table, one row per check."""

    name = "verify"

    def __init__(self, algebra: str, bounds: SearchBounds, seed: int, **kwargs):
        super().__init__(algebra, **kwargs)
        self.bounds = bounds
        self.seed = seed

    def _run(self) -> int:
        A = self.load()
        report = run_suite(A, self.bounds, self.seed, progress=self.show_progress)
        width = max(len(result.name) for result in report.results)
        for result in report.results:
            status = "PASS" if result.passed else "FAIL"
            line = f"{result.name:<{width}}  {status}"
            self.emit(f"{line}  {result.detail}" if result.detail else line)
        self.emit(f"{len(report.failures())} of {len(report.results)} checks failed")
        self.payload = report.as_dict()
        return EXIT_OK if report.ok else EXIT_FINDING
