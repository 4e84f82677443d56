"""heytingkit: a workbench for finite Heyting algebras and their tilde expansions."""

__version__ = "0.1.0"

from .errors import HeytingError  # noqa: E402
from .formulas import parse_formula  # noqa: E402
from .io import load_algebra  # noqa: E402
from .lattice import HeytingAlgebra, build_algebra, fixture  # noqa: E402

__all__ = [
    "__version__",
    "HeytingError",
    "HeytingAlgebra",
    "build_algebra",
    "fixture",
    "load_algebra",
    "parse_formula",
]
