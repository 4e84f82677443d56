"""Hilbert calculi over formulas with tau and ~: axioms, derivations, checking and ranks.

Derivations carry explicit substitutions on every axiom and premise step, so checking is
recomputation and never unification. The text format is one step per line::

    premise: tau
    1. tau -> ~tau ; proper d
    2. tau ; premise
    3. ~tau ; mp 2 1
    4. ~tau -> (p0 | (p0 -> tau)) ; proper c p0 := p0

Step numbers are 1-based; ``#`` starts a comment.
"""

import enum
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .enrichment import TauExpansion
from .errors import FormatError, FormulaSyntaxError, MissingInterpretation, PreconditionViolated
from .formulas import Formula, Imp, outer_tildes, parse_formula, substitute
from .logging_config import get_logger
from .variety import holds_in

logger = get_logger(__name__)


def _schemas(table: Mapping[str, str]) -> Dict[str, Formula]:
    return {name: parse_formula(text) for name, text in table.items()}


INT_AXIOMS: Dict[str, Formula] = _schemas(
    {
        "a1": "p0 -> (p1 -> p0)",
        "a2": "(p0 -> p1) -> ((p0 -> (p1 -> p2)) -> (p0 -> p2))",
        "a3": "p0 -> (p1 -> (p0 & p1))",
        "a4": "(p0 & p1) -> p0",
        "a5": "(p0 & p1) -> p1",
        "a6": "p0 -> (p0 | p1)",
        "a7": "p1 -> (p0 | p1)",
        "a8": "(p0 -> p2) -> ((p1 -> p2) -> ((p0 | p1) -> p2))",
        "a9": "(p0 -> p1) -> ((p0 -> -p1) -> -p0)",
        "a10": "-p0 -> (p0 -> p1)",
    }
)

PROPER_AXIOMS: Dict[str, Formula] = _schemas(
    {
        "a": "~p0 <-> ((p0 -> tau) & ~tau)",
        "b": "(~tau -> tau) -> tau",
        "c": "~tau -> (p0 | (p0 -> tau))",
        "d": "tau -> ~tau",
    }
)


class Calculus(enum.Enum):
    INT_TAU = "inttau"
    INT_TAU_TILDE = "inttautilde"
    KM_TAU = "kmtau"


Substitution = Tuple[Tuple[int, Formula], ...]


def as_substitution(mapping: Mapping[int, Formula]) -> Substitution:
    return tuple(sorted(mapping.items()))


@dataclass(frozen=True)
class IntAxiom:
    name: str
    subst: Substitution = ()


@dataclass(frozen=True)
class ProperAxiom:
    name: str
    subst: Substitution = ()


@dataclass(frozen=True)
class Premise:
    subst: Substitution = ()


@dataclass(frozen=True)
class ModusPonens:
    """From steps ``minor`` (A) and ``major`` (A -> B), 0-based."""

    minor: int
    major: int


@dataclass(frozen=True)
class Hypothesis:
    """Open assumption inside a proof builder; never valid in a finished derivation."""


@dataclass(frozen=True)
class Recall:
    """Formula borrowed from an enclosing proof builder; never valid in a finished derivation."""


Justification = object


@dataclass(frozen=True)
class Step:
    formula: Formula
    justification: Justification


@dataclass(frozen=True)
class Derivation:
    """A sequence of justified steps; the last step is the conclusion."""

    steps: Tuple[Step, ...]
    premise: Optional[Formula] = None

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    @property
    def formulas(self) -> List[Formula]:
        return [step.formula for step in self.steps]

    @property
    def conclusion(self) -> Formula:
        if not self.steps:
            raise PreconditionViolated("empty derivation")
        return self.steps[-1].formula

    def is_tilde_free(self) -> bool:
        return all(step.formula.is_tilde_free for step in self.steps)


class DiagnosticKind(enum.Enum):
    BAD_AXIOM_INSTANCE = "BadAxiomInstance"
    BAD_MP = "BadMP"
    ILLEGAL_SUBSTITUTION_LANGUAGE = "IllegalSubstitutionLanguage"


@dataclass(frozen=True)
class StepDiagnostic:
    index: int
    kind: DiagnosticKind
    message: str

    def __str__(self) -> str:
        return f"step {self.index + 1}: {self.kind.value}: {self.message}"


@dataclass(frozen=True)
class Verdict:
    diagnostics: Tuple[StepDiagnostic, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.diagnostics

    def __bool__(self) -> bool:
        return self.valid


def instance(schema: Formula, subst: Substitution) -> Formula:
    return substitute(schema, dict(subst))


def _check_instance(
    index: int, step: Step, schema: Formula, subst: Substitution, label: str
) -> Optional[StepDiagnostic]:
    unknown = sorted(v for v, _ in subst if v not in schema.variables())
    if unknown:
        return StepDiagnostic(
            index, DiagnosticKind.BAD_AXIOM_INSTANCE, f"{label} has no variable p{unknown[0]}"
        )
    if instance(schema, subst) != step.formula:
        return StepDiagnostic(
            index, DiagnosticKind.BAD_AXIOM_INSTANCE, f"formula is not the stated {label} instance"
        )
    return None


def _check_step(
    index: int,
    step: Step,
    formulas: Sequence[Formula],
    calculus: Calculus,
    premise: Optional[Formula],
) -> Optional[StepDiagnostic]:
    just = step.justification
    bad = DiagnosticKind.BAD_AXIOM_INSTANCE
    if calculus is Calculus.INT_TAU and not step.formula.is_tilde_free:
        what = "formula" if isinstance(just, ModusPonens) else "substitution"
        return StepDiagnostic(
            index, DiagnosticKind.ILLEGAL_SUBSTITUTION_LANGUAGE, f"{what} uses ~"
        )
    if isinstance(just, ModusPonens):
        if not (0 <= just.minor < index and 0 <= just.major < index):
            return StepDiagnostic(index, DiagnosticKind.BAD_MP, "mp must cite earlier steps")
        if formulas[just.major] != Imp(formulas[just.minor], step.formula):
            return StepDiagnostic(
                index,
                DiagnosticKind.BAD_MP,
                f"step {just.major + 1} is not step {just.minor + 1} -> this formula",
            )
        return None
    if isinstance(just, IntAxiom):
        if just.name not in INT_AXIOMS:
            return StepDiagnostic(index, bad, f"unknown axiom {just.name}")
        schema = INT_AXIOMS[just.name]
        return _check_instance(index, step, schema, just.subst, f"axiom {just.name}")
    if isinstance(just, ProperAxiom):
        if calculus is not Calculus.KM_TAU:
            return StepDiagnostic(index, bad, f"proper axiom {just.name} outside kmtau")
        if just.name not in PROPER_AXIOMS:
            return StepDiagnostic(index, bad, f"unknown proper axiom {just.name}")
        return _check_instance(
            index, step, PROPER_AXIOMS[just.name], just.subst, f"proper axiom {just.name}"
        )
    if isinstance(just, Premise):
        if premise is None:
            return StepDiagnostic(index, bad, "no premise was given")
        return _check_instance(index, step, premise, just.subst, "premise")
    return StepDiagnostic(index, bad, "open assumption")


def check_derivation(
    D: Derivation, calculus: Calculus, premise: Optional[Formula] = None
) -> Verdict:
    """Check every step of a derivation against a calculus.

    Args:
        D: The derivation
        calculus: Which calculus to check against
        premise: Premise formula; defaults to the derivation's own

    Returns:
        A verdict listing one diagnostic per faulty step
    """
    premise = premise if premise is not None else D.premise
    formulas = D.formulas
    diagnostics = []
    for index, step in enumerate(D.steps):
        found = _check_step(index, step, formulas, calculus, premise)
        if found is not None:
            diagnostics.append(found)
    if diagnostics:
        logger.debug("Derivation has %d faulty steps", len(diagnostics))
    return Verdict(tuple(diagnostics))


# Maximal ~-formulas and ranks


def maximal_occurrences(formulas: Iterable[Formula]) -> List[Formula]:
    """~-formulas with an occurrence outside every ~, in order of first appearance."""
    seen = set()
    ordered = []
    for formula in formulas:
        for found in outer_tildes(formula):
            if found not in seen:
                seen.add(found)
                ordered.append(found)
    return ordered


def maximal_set(formulas: Iterable[Formula]) -> frozenset:
    """M(S)."""
    return frozenset(maximal_occurrences(formulas))


@dataclass(frozen=True, order=True)
class Rank:
    """(highest degree in M, number of members of that degree)."""

    level: int
    count: int

    def precedes(self, other: "Rank") -> bool:
        """self << other."""
        return self.level < other.level or (
            self.level == other.level and self.count <= other.count
        )

    def __str__(self) -> str:
        return f"({self.level},{self.count})"


ROOT = Rank(0, 0)


def rank_of(formulas: Iterable[Formula]) -> Rank:
    members = maximal_set(formulas)
    if not members:
        return ROOT
    level = max(f.degree for f in members)
    return Rank(level, sum(1 for f in members if f.degree == level))


def rank(D: Derivation) -> Rank:
    return rank_of(D.formulas)


def is_pure(D: Derivation) -> bool:
    """M(D) lies inside M(premise, conclusion)."""
    ends = [D.conclusion] + ([D.premise] if D.premise is not None else [])
    return maximal_set(D.formulas) <= maximal_set(ends)


def validate_semantics(formula: Formula, expansion: TauExpansion) -> bool:
    """Whether a formula holds in a tau~-expansion.

    Raises:
        MissingInterpretation: If the expansion has no tilde
    """
    if expansion.tilde is None:
        raise MissingInterpretation("semantic validation needs a tilde")
    return holds_in(expansion, formula)


def unsound_steps(D: Derivation, expansion: TauExpansion) -> List[int]:
    """Indices of steps that fail in the expansion."""
    return [i for i, step in enumerate(D.steps) if not validate_semantics(step.formula, expansion)]


# Text format

_STEP = re.compile(r"^\s*(\d+)\.\s*(.*?)\s*;\s*(.*?)\s*$")
_BINDING = re.compile(r"^\s*p(\d+)\s*:=\s*(.+?)\s*$")


def _format_subst(subst: Substitution) -> str:
    return ", ".join(f"p{v} := {value}" for v, value in subst)


def format_justification(just: Justification) -> str:
    if isinstance(just, ModusPonens):
        return f"mp {just.minor + 1} {just.major + 1}"
    if isinstance(just, IntAxiom):
        head = f"axiom {just.name}"
    elif isinstance(just, ProperAxiom):
        head = f"proper {just.name}"
    elif isinstance(just, Premise):
        head = "premise"
    else:
        raise PreconditionViolated("open assumptions cannot be written out")
    return f"{head} {_format_subst(just.subst)}".rstrip()


def format_derivation(D: Derivation) -> str:
    lines = []
    if D.premise is not None:
        lines.append(f"premise: {D.premise}")
    for number, step in enumerate(D.steps, start=1):
        lines.append(f"{number}. {step.formula} ; {format_justification(step.justification)}")
    return "\n".join(lines) + "\n"


def _parse_subst(text: str, line: int) -> Substitution:
    if not text.strip():
        return ()
    mapping: Dict[int, Formula] = {}
    for part in text.split(","):
        match = _BINDING.match(part)
        if not match:
            raise FormatError(f"malformed substitution {part.strip()!r}", line)
        variable = int(match.group(1))
        if variable in mapping:
            raise FormatError(f"p{variable} bound twice", line)
        mapping[variable] = parse_formula(match.group(2))
    return as_substitution(mapping)


def _parse_justification(text: str, line: int) -> Justification:
    words = text.split(None, 2)
    if not words:
        raise FormatError("missing justification", line)
    kind = words[0]
    if kind == "mp":
        if len(words) != 3 or not (words[1].isdigit() and words[2].isdigit()):
            raise FormatError("mp needs two step numbers", line)
        return ModusPonens(int(words[1]) - 1, int(words[2]) - 1)
    if kind == "premise":
        return Premise(_parse_subst(text[len("premise") :], line))
    if kind in ("axiom", "proper"):
        if len(words) < 2:
            raise FormatError(f"{kind} needs a name", line)
        subst = _parse_subst(words[2] if len(words) > 2 else "", line)
        return IntAxiom(words[1], subst) if kind == "axiom" else ProperAxiom(words[1], subst)
    raise FormatError(f"unknown justification {kind!r}", line)


def parse_derivation(text: str) -> Derivation:
    """Parse the derivation text format.

    Raises:
        FormatError: With the offending line number
    """
    premise: Optional[Formula] = None
    steps: List[Step] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            if line.startswith("premise:"):
                if premise is not None or steps:
                    raise FormatError("premise must be declared once, before the steps", number)
                premise = parse_formula(line[len("premise:") :])
                continue
            match = _STEP.match(line)
            if not match:
                raise FormatError("expected '<k>. <formula> ; <justification>'", number)
            if int(match.group(1)) != len(steps) + 1:
                raise FormatError(f"expected step {len(steps) + 1}", number)
            formula = parse_formula(match.group(2))
            steps.append(Step(formula, _parse_justification(match.group(3), number)))
        except FormulaSyntaxError as error:
            raise FormatError(str(error), number) from error
    if not steps:
        raise FormatError("derivation has no steps")
    return Derivation(tuple(steps), premise)
