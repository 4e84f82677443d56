"""Reading and writing algebra and derivation files.

Algebra files::

    # the three-element chain
    elements: 0 a 1
    leq: 0 a
    leq: a 1

The reflexive-transitive closure of the ``leq`` pairs is taken. Blank lines and text after ``#``
are ignored.
"""

import os
from typing import List, Tuple

from .calculus import Derivation, format_derivation, parse_derivation
from .errors import FormatError
from .lattice import HeytingAlgebra, build_algebra, fixture
from .logging_config import get_logger

logger = get_logger(__name__)

FIXTURE_PREFIX = "fixture:"


def parse_algebra(text: str) -> HeytingAlgebra:
    """Parse algebra text.

    Raises:
        FormatError: With the line number of the offending line
        AlgebraError: If the order is not a Heyting algebra
    """
    elements: List[str] = []
    pairs: List[Tuple[str, str]] = []
    declared_at = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise FormatError(f"expected 'elements:' or 'leq:', got {line!r}", number)
        key, words = key.strip(), rest.split()
        if key == "elements":
            if declared_at is not None:
                raise FormatError(f"elements already declared on line {declared_at}", number)
            if not words:
                raise FormatError("no elements declared", number)
            declared_at = number
            elements = words
        elif key == "leq":
            if declared_at is None:
                raise FormatError("leq before elements", number)
            if len(words) != 2:
                raise FormatError(f"leq takes two elements, got {len(words)}", number)
            for word in words:
                if word not in elements:
                    raise FormatError(f"undeclared element {word!r}", number)
            pairs.append((words[0], words[1]))
        else:
            raise FormatError(f"unknown key {key!r}", number)
    if declared_at is None:
        raise FormatError("missing 'elements:' line")
    return build_algebra(elements, pairs)


def format_algebra(A: HeytingAlgebra) -> str:
    """Algebra text listing the covering pairs of A."""
    lines = ["elements: " + " ".join(A.labels)]
    for x in A.elements:
        for y in A.elements:
            if x == y or not A.leq[x, y]:
                continue
            between = any(
                z not in (x, y) and A.leq[x, z] and A.leq[z, y] for z in A.elements
            )
            if not between:
                lines.append(f"leq: {A.labels[x]} {A.labels[y]}")
    return "\n".join(lines) + "\n"


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except UnicodeDecodeError as e:
        raise FormatError(f"{path} is not UTF-8 text") from e


def load_algebra(path: str) -> HeytingAlgebra:
    """Load an algebra from a file, or build a fixture named ``fixture:<kind>``.

    Raises:
        OSError: If the file cannot be read
        FormatError: If the file or fixture description is malformed
    """
    if path.startswith(FIXTURE_PREFIX):
        kind = path[len(FIXTURE_PREFIX) :]
        try:
            return fixture(kind)
        except ValueError as e:
            raise FormatError(f"bad fixture {kind!r}: {e}") from e
    A = parse_algebra(_read_text(path))
    logger.debug("Loaded %d-element algebra from %s", A.size, path)
    return A


def load_derivation(path: str) -> Derivation:
    return parse_derivation(_read_text(path))


def save_derivation(D: Derivation, path: str) -> None:
    """Write a derivation, creating parent directories as needed."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_derivation(D))
    logger.info("Wrote %d steps to %s", len(D), path)
