"""Enriched elements, E-pairs, the box operator and tilde-negations.

A pair (a, a*) is an E-pair when a <= a*, a* -> a = a and a* <= x | (x -> a) for every x.
Tilde tables correspond one-to-one with E-pairs through t(x) = (x -> a) & a* and
(a, a*) = (t(1), t(0)).
"""

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from .errors import IdentityViolation, IncompatibleTau, InvalidEPair, InvalidTilde
from .filters import special_filters
from .lattice import AlgebraEmbedding, HeytingAlgebra, closure
from .logging_config import get_logger
from .stone import DeltaAlgebra, delta_h, delta_subalgebra

logger = get_logger(__name__)


def enriches(A: HeytingAlgebra, a: int, b: int) -> bool:
    """True iff b enriches a."""
    if not A.leq[a, b] or A.imp[b, a] != a:
        return False
    xs = np.arange(A.size)
    return bool(np.all(A.leq[b, A.join[xs, A.imp[xs, a]]]))


def enrichment(A: HeytingAlgebra, a: int) -> Optional[int]:
    """The unique element enriching a, or None.

    The candidate is the meet of F_a; a linear scan over A serves as the oracle.

    Raises:
        IdentityViolation: If the two routes disagree or the enriching element is not unique
    """
    _, f_a = special_filters(A, a)
    candidate = A.meet_all(f_a.elements())
    via_meet = candidate if enriches(A, a, candidate) else None
    scanned = [b for b in A.elements if enriches(A, a, b)]
    if len(scanned) > 1:
        raise IdentityViolation(f"{A.labels[a]} is enriched by {len(scanned)} elements")
    via_scan = scanned[0] if scanned else None
    if via_meet != via_scan:
        raise IdentityViolation(f"meet of F_a and scan disagree at {A.labels[a]}")
    return via_meet


def box_operator(A: HeytingAlgebra) -> Optional[np.ndarray]:
    """The table x -> x* when every element is enriched, else None."""
    table = []
    for x in A.elements:
        star = enrichment(A, x)
        if star is None:
            return None
        table.append(star)
    return np.array(table, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class EPair:
    """An enrichment pair (a, a*)."""

    algebra: HeytingAlgebra
    a: int
    a_star: int

    def __iter__(self):
        return iter((self.a, self.a_star))

    def is_valid(self) -> bool:
        return enriches(self.algebra, self.a, self.a_star)

    def validate(self) -> "EPair":
        if not self.is_valid():
            A = self.algebra
            raise InvalidEPair(f"({A.labels[self.a]}, {A.labels[self.a_star]}) is not an E-pair")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, EPair):
            return NotImplemented
        return self.algebra is other.algebra and (self.a, self.a_star) == (other.a, other.a_star)

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.a, self.a_star))


def epairs(A: HeytingAlgebra) -> List[EPair]:
    """Every E-pair of A, in element order."""
    pairs = []
    for a in A.elements:
        star = enrichment(A, a)
        if star is not None:
            pairs.append(EPair(A, a, star))
    return pairs


DEFINITION_CLAUSES = ("contraposition", "meet-bound", "join-bound", "endpoints")

PROPERTIES = (
    "range",
    "meet-double",
    "join-double",
    "double-at-0",
    "double-at-1",
    "equiv-double",
    "sandwich",
    "above-t0",
    "normal-form",
    "join-to-meet",
    "boolean-interval",
    "triple",
    "antitone",
)


def _definition(A: HeytingAlgebra, t: np.ndarray) -> Dict[str, bool]:
    xs = np.arange(A.size)
    t0, t1 = t[A.bot], t[A.top]
    reversed_ = A.imp[t[None, :], t[:, None]]  # [x, y] -> t(y) -> t(x)
    return {
        "contraposition": bool(np.all(A.leq[A.imp, reversed_])),
        "meet-bound": bool(np.all(A.leq[A.meet[xs, t], t1])),
        "join-bound": bool(np.all(A.leq[t0, A.join[xs, t]])),
        "endpoints": bool(A.imp[t0, t1] == t1),
    }


def _properties(A: HeytingAlgebra, t: np.ndarray) -> Dict[str, bool]:
    xs = np.arange(A.size)
    t0, t1 = int(t[A.bot]), int(t[A.top])
    tt = t[t]
    interval = xs[A.leq[t1, xs] & A.leq[xs, t0]]
    above_t0 = xs[A.leq[t0, xs]]
    return {
        "range": bool(np.all(A.leq[t1, t]) and np.all(A.leq[t, t0])),
        "meet-double": bool(np.all(A.meet[t, tt] == t1)),
        "join-double": bool(np.all(A.join[t, tt] == t0)),
        "double-at-0": bool(tt[A.bot] == t1),
        "double-at-1": bool(tt[A.top] == t0),
        "equiv-double": all(A.iff(int(t[x]), int(tt[x])) == t1 for x in xs),
        "sandwich": bool(np.all(A.leq[A.meet[xs, t], tt]) and np.all(A.leq[tt, A.join[xs, t]])),
        "above-t0": bool(np.all(t[above_t0] == t1)),
        "normal-form": bool(np.all(t == A.meet[A.imp[xs, t1], t0])),
        "join-to-meet": bool(np.array_equal(t[A.join], A.meet[t[:, None], t[None, :]])),
        "boolean-interval": bool(
            np.all(A.leq[t1, t[interval]])
            and np.all(A.leq[t[interval], t0])
            and np.all(A.meet[interval, t[interval]] == t1)
            and np.all(A.join[interval, t[interval]] == t0)
        ),
        "triple": bool(np.array_equal(t[tt], t)),
        "antitone": bool(np.all(~A.leq | A.leq[t[None, :], t[:, None]])),
    }


@dataclass(frozen=True)
class TildeReport:
    """Verdicts of the tilde definition clauses and, when those pass, the derived properties."""

    definition: Dict[str, bool]
    properties: Dict[str, bool]

    @property
    def is_tilde(self) -> bool:
        return all(self.definition.values())

    @property
    def ok(self) -> bool:
        return self.is_tilde and bool(self.properties) and all(self.properties.values())

    def failures(self) -> List[str]:
        failed = [name for name, passed in self.definition.items() if not passed]
        failed += [name for name, passed in self.properties.items() if not passed]
        return failed


def check_tilde(A: HeytingAlgebra, t) -> TildeReport:
    """Check the four defining identities of a tilde table and then the derived properties."""
    table = np.asarray(t, dtype=np.int64)
    definition = _definition(A, table)
    properties = _properties(A, table) if all(definition.values()) else {}
    return TildeReport(definition, properties)


@dataclass(frozen=True, eq=False)
class TildeTable:
    """A unary table on an algebra meant as a tilde-negation."""

    algebra: HeytingAlgebra
    t: np.ndarray

    def __post_init__(self):
        table = np.array(self.t, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, "t", table)

    def __call__(self, x: int) -> int:
        return int(self.t[x])

    def report(self) -> TildeReport:
        return check_tilde(self.algebra, self.t)

    def validate(self) -> "TildeTable":
        report = self.report()
        if not report.is_tilde:
            failed = ", ".join(report.failures())
            raise InvalidTilde(f"not a tilde-negation, failing: {failed}")
        return self

    def __eq__(self, other) -> bool:
        if not isinstance(other, TildeTable):
            return NotImplemented
        return self.algebra is other.algebra and bool(np.array_equal(self.t, other.t))

    def __hash__(self) -> int:
        return hash((id(self.algebra), self.t.tobytes()))


def tilde_from_pair(p: EPair) -> TildeTable:
    """t(x) = (x -> a) & a*.

    Raises:
        InvalidEPair: If p is not an E-pair
    """
    p.validate()
    A = p.algebra
    table = A.meet[A.imp[:, p.a], p.a_star]
    return TildeTable(A, table)


def pair_from_tilde(t: TildeTable) -> EPair:
    """(t(1), t(0)).

    Raises:
        InvalidTilde: If t is not a tilde-negation
    """
    t.validate()
    A = t.algebra
    pair = EPair(A, t(A.top), t(A.bot))
    if not pair.is_valid():
        raise IdentityViolation("a tilde-negation produced a pair that is not an E-pair")
    return pair


def same_tilde(first: TildeTable, second: TildeTable) -> bool:
    """Two tilde tables agree everywhere iff they agree at top."""
    A = first.algebra
    agree_at_top = first(A.top) == second(A.top)
    agree = bool(np.array_equal(first.t, second.t))
    if agree != agree_at_top:
        raise IdentityViolation("tilde tables agree at top but differ elsewhere")
    return agree


def tilde_roundtrip_holds(A: HeytingAlgebra) -> bool:
    """Both round trips between E-pairs and tilde tables are identities on A."""
    for pair in epairs(A):
        tilde = tilde_from_pair(pair)
        back = pair_from_tilde(tilde)
        if (back.a, back.a_star) != (pair.a, pair.a_star):
            return False
        if not np.array_equal(tilde_from_pair(back).t, tilde.t):
            return False
    return True


@dataclass(frozen=True, eq=False)
class TauExpansion:
    """An algebra with a distinguished constant tau and optionally a tilde with t(1) = tau."""

    algebra: HeytingAlgebra
    tau: int
    tilde: Optional[TildeTable] = None

    def validate(self) -> "TauExpansion":
        if self.tilde is not None:
            self.tilde.validate()
            if self.tilde(self.algebra.top) != self.tau:
                raise IncompatibleTau("the tilde of an expansion must send 1 to tau")
        return self

    @property
    def has_tilde(self) -> bool:
        return self.tilde is not None


@dataclass(frozen=True)
class PackingReport:
    """Outcome of a packing check, with the closure trichotomy."""

    packed: bool
    generated_by_image_and_t0: bool
    image_closed: bool
    t0_in_image: bool

    def __bool__(self) -> bool:
        return self.packed


def check_packing(inner: TauExpansion, outer: TauExpansion, e: AlgebraEmbedding) -> PackingReport:
    """Decide whether the image of A generates (B, tau, ~).

    Raises:
        IncompatibleTau: If the outer expansion has no tilde or e does not preserve tau
        IdentityViolation: If the two characterizations of packing disagree
    """
    if outer.tilde is None:
        raise IncompatibleTau("the outer expansion needs a tilde")
    if e(inner.tau) != outer.tau:
        raise IncompatibleTau("the embedding does not preserve tau")
    outer.validate()
    B = outer.algebra
    t = outer.tilde.t
    image = e.image()
    image_mask = e.image_mask()
    t0 = int(t[B.bot])

    packed = len(closure(B, image, unary=[t])) == B.size
    generated = len(closure(B, list(image) + [t0])) == B.size
    image_closed = bool(np.all(image_mask[t[image]]))
    t0_in_image = bool(image_mask[t0])
    if packed != generated:
        raise IdentityViolation("tilde closure and generation with ~0 disagree")
    if image_closed != t0_in_image:
        raise IdentityViolation("closure of the image under ~ does not match membership of ~0")
    logger.debug("Packing: packed=%s closed=%s", packed, image_closed)
    return PackingReport(packed, generated, image_closed, t0_in_image)


@dataclass(frozen=True, eq=False)
class CanonicalExpansion:
    """A_tau inside delta[A_{tau_a}] with the tilde of (h(a), delta h(a))."""

    inner: TauExpansion
    outer: TauExpansion
    embedding: AlgebraEmbedding
    delta: DeltaAlgebra


def canonical_expansion(A: HeytingAlgebra, a: int) -> CanonicalExpansion:
    """Build the canonical tau~-expansion of (A, a)."""
    built = delta_subalgebra(A, [a])
    D = built.algebra
    h_a = built.embedding(a)
    star = built.element(delta_h(built.stone, a))
    if star is None:
        raise IdentityViolation("delta h(a) is missing from delta[A_a]")
    pair = EPair(D, h_a, star)
    if not pair.is_valid():
        raise IdentityViolation("(h(a), delta h(a)) is not an E-pair")
    outer = TauExpansion(D, h_a, tilde_from_pair(pair)).validate()
    return CanonicalExpansion(TauExpansion(A, a), outer, built.embedding, built)


def satisfies_proper_axioms(A: HeytingAlgebra, tau: int, t) -> bool:
    """Evaluate the four proper-axiom identities for (A, tau, t)."""
    table = np.asarray(t, dtype=np.int64)
    xs = np.arange(A.size)
    c = int(table[tau])
    tilde_law = np.all(table == A.meet[A.imp[xs, tau], c])
    fixpoint = A.imp[A.imp[c, tau], tau] == A.top
    excluded = np.all(A.leq[c, A.join[xs, A.imp[xs, tau]]])
    lower = A.leq[tau, c]
    return bool(tilde_law and fixpoint and excluded and lower)


def proper_axiom_tables(A: HeytingAlgebra) -> Iterator[Tuple[int, TildeTable]]:
    """Every (tau, t) satisfying the proper-axiom identities.

    The identity for ~x fixes t from its value at tau, so ranging over tau and that value is
    exhaustive.
    """
    xs = np.arange(A.size)
    for tau in A.elements:
        for c in A.elements:
            table = A.meet[A.imp[xs, tau], c]
            if satisfies_proper_axioms(A, tau, table):
                yield tau, TildeTable(A, table)


def confirm_expansions(A: HeytingAlgebra) -> List[Tuple[int, TildeTable, bool]]:
    """For each table from ``proper_axiom_tables``, whether it is a tilde with t(1) = tau."""
    results = []
    for tau, tilde in proper_axiom_tables(A):
        report = tilde.report()
        results.append((tau, tilde, report.ok and tilde(A.top) == tau))
    return results
