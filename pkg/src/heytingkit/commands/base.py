"""Base command class for heytingkit subcommands."""

import json
import sys
from typing import Any, Dict, Iterable, List, Optional, TextIO

from tqdm import tqdm

from .. import __version__
from ..errors import CommandError, HeytingError, InputError
from ..io import load_algebra
from ..lattice import HeytingAlgebra
from ..logging_config import get_logger

# Get logger for this module
logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_BUDGET = 2
EXIT_INPUT = 3


class HeytingCommand:
    """Base class for heytingkit commands.

    Subclasses fill ``payload`` and ``lines`` in ``_run`` and return an exit code. The report is
    written once, as text or as JSON, so identical inputs give identical output.
    """

    name = "command"

    def __init__(
        self,
        json_output: bool = False,
        quiet: bool = False,
        stream: Optional[TextIO] = None,
    ):
        """Initialize command.

        Args:
            json_output: Write the payload as JSON instead of the text report
            quiet: Suppress the banner and progress bars
            stream: Where reports go (default stdout)
        """
        self.json_output = json_output
        self.quiet = quiet
        self.stream = stream
        self._logger = logger
        self._validated = False
        self.payload: Dict[str, Any] = {}
        self.lines: List[str] = []
        self._total_items = 0
        self._current_item = 0

    def validate(self) -> None:
        """Validate command parameters.

        Raises:
            InputError: If parameters are invalid
        """
        self._validated = True

    def run(self) -> int:
        """Run the command.

        Returns:
            int: Exit code

        Raises:
            HeytingError: Domain errors pass through unchanged
            OSError: If an input or output file cannot be used
            CommandError: If the command fails unexpectedly
        """
        try:
            if not self._validated:
                self.validate()
            code = self._run()
        except (HeytingError, OSError):
            raise
        except Exception as e:
            raise CommandError(str(e)) from e
        self.write_report()
        return code

    def _run(self) -> int:
        """Internal run implementation.

        Returns:
            int: Exit code
        """
        return EXIT_OK

    def emit(self, line: str = "") -> None:
        self.lines.append(line)

    def write_report(self) -> None:
        out = self.stream or sys.stdout
        if self.json_output:
            out.write(json.dumps({"command": self.name, **self.payload}, indent=2) + "\n")
            return
        if not self.quiet:
            out.write(f"# heytingkit {__version__} {self.name}\n")
        if self.lines:
            out.write("\n".join(self.lines) + "\n")

    @property
    def show_progress(self) -> bool:
        return not self.quiet and not self.json_output and sys.stderr.isatty()

    def progress(self, items: Iterable, desc: str) -> Iterable:
        """Wrap an iterable in a progress bar on stderr when interactive."""
        return tqdm(items, desc=desc, disable=not self.show_progress, file=sys.stderr)

    def set_total_items(self, total: int) -> None:
        """Set total number of items to process.

        Args:
            total: Total number of items
        """
        self._total_items = total
        self._current_item = 0

    def update_progress(self, current: Optional[int] = None) -> None:
        """Update progress indicator.

        Args:
            current: Optional current item number. If not provided, increments by 1.
        """
        if current is not None:
            self._current_item = current
        else:
            self._current_item += 1
        self._logger.debug("%s: %d/%d", self.name, self._current_item, self._total_items)


class AlgebraCommand(HeytingCommand):
    """A command reading one algebra given as a file path or ``fixture:<kind>``."""

    def __init__(self, algebra: str, **kwargs):
        super().__init__(**kwargs)
        self.algebra_path = algebra

    def validate(self) -> None:
        if not self.algebra_path:
            raise InputError("an algebra file or fixture is required")
        super().validate()

    def load(self) -> HeytingAlgebra:
        return load_algebra(self.algebra_path)

    @staticmethod
    def element(A: HeytingAlgebra, label: str) -> int:
        try:
            return A.index(label)
        except KeyError:
            raise InputError(f"unknown element {label!r}") from None
