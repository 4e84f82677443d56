"""Finite Heyting algebras as explicit tables.

Elements are the indices ``0..n-1`` of an algebra; labels are attached for display and file
input. All operations are dense ``numpy`` tables computed once at construction time, so every
downstream module reads ``A.meet[x, y]`` or ``A.imp[x, y]`` directly.
"""

import itertools
import re
from dataclasses import dataclass
from functools import reduce
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import (
    FormatError,
    InvalidEmbedding,
    NoRelativePseudoComplement,
    NotALattice,
    NotAPartialOrder,
    NotDistributive,
)
from .logging_config import get_logger

logger = get_logger(__name__)


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.ascontiguousarray(array)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class HeytingAlgebra:
    """A finite Heyting algebra given by its tables.

    Attributes:
        labels: Display label of each element
        leq: ``leq[x, y]`` is True iff x <= y
        meet: Meet table
        join: Join table
        imp: Relative pseudo-complement table, ``imp[x, y]`` is x -> y
        neg: Pseudo-complement, ``neg[x] == imp[x, bot]``
        bot: Index of the least element
        top: Index of the greatest element
    """

    labels: Tuple[str, ...]
    leq: np.ndarray
    meet: np.ndarray
    join: np.ndarray
    imp: np.ndarray
    neg: np.ndarray
    bot: int
    top: int

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"HeytingAlgebra({' '.join(self.labels)})"

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(len(self.labels))

    def index(self, label: str) -> int:
        """Return the index of the element labelled ``label``."""
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown element {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def meet_all(self, items: Iterable[int]) -> int:
        return reduce(lambda x, y: int(self.meet[x, y]), items, self.top)

    def join_all(self, items: Iterable[int]) -> int:
        return reduce(lambda x, y: int(self.join[x, y]), items, self.bot)

    def iff(self, x: int, y: int) -> int:
        return int(self.meet[self.imp[x, y], self.imp[y, x]])

    def is_trivial(self) -> bool:
        return self.size == 1

    def same_tables(self, other: "HeytingAlgebra") -> bool:
        """True when both algebras have identical tables (labels ignored)."""
        return (
            self.size == other.size
            and bool(np.array_equal(self.leq, other.leq))
            and bool(np.array_equal(self.imp, other.imp))
        )


def reflexive_transitive_closure(relation: np.ndarray) -> np.ndarray:
    """Warshall closure of a boolean relation, reflexive on the diagonal."""
    closed = relation.copy() | np.eye(len(relation), dtype=bool)
    for k in range(len(closed)):
        closed |= closed[:, k : k + 1] & closed[k : k + 1, :]
    return closed


def _greatest(candidates: np.ndarray, leq: np.ndarray) -> Optional[int]:
    # g is greatest iff g is a candidate and every candidate lies below g
    below = np.all(~candidates[:, None] | leq, axis=0) & candidates
    found = np.flatnonzero(below)
    return int(found[0]) if len(found) else None


def _least(candidates: np.ndarray, leq: np.ndarray) -> Optional[int]:
    above = np.all(~candidates[:, None] | leq.T, axis=0) & candidates
    found = np.flatnonzero(above)
    return int(found[0]) if len(found) else None


def from_order(labels: Sequence[str], leq: np.ndarray) -> HeytingAlgebra:
    """Build and validate a Heyting algebra from a partial order.

    Args:
        labels: Element labels, one per row of ``leq``
        leq: Reflexive and transitive boolean relation

    Returns:
        The validated algebra with all tables computed

    Raises:
        NotAPartialOrder: If ``leq`` is not antisymmetric
        NotALattice: If some pair lacks a meet or a join
        NotDistributive: If distributivity fails
        NoRelativePseudoComplement: If some x -> y does not exist
    """
    labels = tuple(labels)
    n = len(labels)
    leq = np.asarray(leq, dtype=bool)

    clash = np.argwhere(leq & leq.T & ~np.eye(n, dtype=bool))
    if len(clash):
        x, y = clash[0]
        raise NotAPartialOrder((labels[x], labels[y]))

    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(x, n):
            lower = leq[:, x] & leq[:, y]
            glb = _greatest(lower, leq)
            if glb is None:
                raise NotALattice((labels[x], labels[y]), "meet")
            upper = leq[x, :] & leq[y, :]
            lub = _least(upper, leq)
            if lub is None:
                raise NotALattice((labels[x], labels[y]), "join")
            meet[x, y] = meet[y, x] = glb
            join[x, y] = join[y, x] = lub

    bot = int(np.flatnonzero(np.all(leq, axis=1))[0])
    top = int(np.flatnonzero(np.all(leq, axis=0))[0])

    # x & (y | z) against (x & y) | (x & z) for all triples at once
    lhs = meet[:, join]
    rhs = join[meet[:, :, None], meet[:, None, :]]
    failing = np.argwhere(lhs != rhs)
    if len(failing):
        x, y, z = failing[0]
        raise NotDistributive((labels[x], labels[y], labels[z]))

    imp = np.zeros((n, n), dtype=np.int64)
    for x in range(n):
        for y in range(n):
            candidates = leq[meet[:, x], y]
            best = _greatest(candidates, leq)
            if best is None:
                raise NoRelativePseudoComplement((labels[x], labels[y]))
            imp[x, y] = best
    neg = imp[:, bot].copy()

    logger.debug("Built algebra with %d elements", n)
    return HeytingAlgebra(
        labels=labels,
        leq=_frozen(leq),
        meet=_frozen(meet),
        join=_frozen(join),
        imp=_frozen(imp),
        neg=_frozen(neg),
        bot=bot,
        top=top,
    )


def build_algebra(elements: Sequence[str], leq: Iterable[Tuple[str, str]]) -> HeytingAlgebra:
    """Build an algebra from labels and generating order pairs.

    The reflexive-transitive closure of ``leq`` is taken before validation.

    Args:
        elements: Distinct element labels
        leq: Pairs ``(x, y)`` meaning x <= y

    Returns:
        The validated algebra
    """
    labels = list(elements)
    if not labels:
        raise FormatError("an algebra needs at least one element")
    if len(set(labels)) != len(labels):
        raise FormatError("duplicate element label")
    position = {label: i for i, label in enumerate(labels)}
    relation = np.zeros((len(labels), len(labels)), dtype=bool)
    for x, y in leq:
        if x not in position or y not in position:
            missing = x if x not in position else y
            raise FormatError(f"undeclared element {missing!r}")
        relation[position[x], position[y]] = True
    return from_order(labels, reflexive_transitive_closure(relation))


def _letters(count: int) -> List[str]:
    names: List[str] = []
    if count <= 0:
        return names
    for size in itertools.count(1):
        for combo in itertools.product("abcdefghijklmnopqrstuvwxyz", repeat=size):
            names.append("".join(combo))
            if len(names) == count:
                return names
    return names


def chain(n: int) -> HeytingAlgebra:
    """The n-element chain ``0 < a < b < ... < 1``."""
    if n < 1:
        raise ValueError("a chain needs at least one element")
    if n == 1:
        labels = ["0"]
    else:
        labels = ["0"] + _letters(n - 2) + ["1"]
    order = np.triu(np.ones((n, n), dtype=bool))
    return from_order(labels, order)


def boolean(k: int) -> HeytingAlgebra:
    """The Boolean algebra of subsets of k atoms, indexed by bitmask."""
    if k < 0:
        raise ValueError("k must be non-negative")
    atoms = _letters(k) if k else []
    n = 1 << k
    labels = []
    for mask in range(n):
        if mask == 0:
            labels.append("0")
        elif mask == n - 1:
            labels.append("1")
        else:
            labels.append("".join(atoms[i] for i in range(k) if mask >> i & 1))
    masks = np.arange(n)
    order = (masks[:, None] & ~masks[None, :]) == 0
    return from_order(labels, order)


def product(first: HeytingAlgebra, second: HeytingAlgebra) -> HeytingAlgebra:
    """Componentwise product; element ``i * |second| + j`` is the pair (i, j)."""
    labels = [f"({x},{y})" for x in first.labels for y in second.labels]
    order = np.kron(first.leq, second.leq).astype(bool)
    return from_order(labels, order)


_FIXTURE = re.compile(r"^\s*(chain|boolean)\s*(\d+)\s*$")


def fixture(kind: str) -> HeytingAlgebra:
    """Build a standard algebra from a description.

    Accepts ``"chain N"``, ``"boolean K"`` and ``"product(X, Y)"`` with nested descriptions,
    spaces optional (``"chain3"`` works too).

    Args:
        kind: Fixture description

    Returns:
        The algebra
    """
    text = kind.strip()
    if text.startswith("product(") and text.endswith(")"):
        inner = text[len("product(") : -1]
        depth = 0
        for i, char in enumerate(inner):
            if char == "(":
                depth += 1
            elif char == ")":
                depth -= 1
            elif char == "," and depth == 0:
                return product(fixture(inner[:i]), fixture(inner[i + 1 :]))
        raise FormatError(f"malformed product fixture {kind!r}")
    match = _FIXTURE.match(text)
    if not match:
        raise FormatError(f"unknown fixture {kind!r}")
    name, size = match.group(1), int(match.group(2))
    return chain(size) if name == "chain" else boolean(size)


def closure(
    A: HeytingAlgebra, seeds: Iterable[int], unary: Sequence[np.ndarray] = ()
) -> np.ndarray:
    """Smallest set containing seeds, bot and top closed under the operations.

    Args:
        A: The algebra
        seeds: Initial elements
        unary: Extra unary tables to close under (e.g. a tilde)

    Returns:
        Sorted array of member indices
    """
    members = np.zeros(A.size, dtype=bool)
    members[[A.bot, A.top]] = True
    members[list(seeds)] = True
    rounds = 0
    while True:
        rounds += 1
        idx = np.flatnonzero(members)
        grown = members.copy()
        block = np.ix_(idx, idx)
        for table in (A.meet, A.join, A.imp):
            grown[table[block].ravel()] = True
        for table in unary:
            grown[table[idx]] = True
        if np.array_equal(grown, members):
            logger.debug("Closure reached %d elements in %d rounds", len(idx), rounds)
            return idx
        members = grown


def restrict(A: HeytingAlgebra, members: Sequence[int]) -> HeytingAlgebra:
    """The subalgebra on a closed member set, re-indexed in member order."""
    idx = np.asarray(members, dtype=np.int64)
    position = np.full(A.size, -1, dtype=np.int64)
    position[idx] = np.arange(len(idx))
    block = np.ix_(idx, idx)
    return HeytingAlgebra(
        labels=tuple(A.labels[i] for i in idx),
        leq=_frozen(A.leq[block]),
        meet=_frozen(position[A.meet[block]]),
        join=_frozen(position[A.join[block]]),
        imp=_frozen(position[A.imp[block]]),
        neg=_frozen(position[A.neg[idx]]),
        bot=int(position[A.bot]),
        top=int(position[A.top]),
    )


@dataclass(frozen=True, eq=False)
class AlgebraEmbedding:
    """An injective homomorphism ``source -> target`` given elementwise."""

    source: HeytingAlgebra
    target: HeytingAlgebra
    mapping: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mapping", _frozen(np.asarray(self.mapping, dtype=np.int64)))

    def __call__(self, x: int) -> int:
        return int(self.mapping[x])

    @classmethod
    def identity(cls, A: HeytingAlgebra) -> "AlgebraEmbedding":
        return cls(A, A, np.arange(A.size))

    def image(self) -> np.ndarray:
        return np.sort(self.mapping)

    def image_mask(self) -> np.ndarray:
        mask = np.zeros(self.target.size, dtype=bool)
        mask[self.mapping] = True
        return mask

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and self.is_injective()

    def is_injective(self) -> bool:
        return len(np.unique(self.mapping)) == self.source.size

    def violations(self) -> List[str]:
        """Describe every way the map fails to be an embedding."""
        problems = []
        m = self.mapping
        if m.shape != (self.source.size,):
            return [f"map has {m.shape[0] if m.ndim else 0} entries, expected {self.source.size}"]
        if np.any((m < 0) | (m >= self.target.size)):
            return ["map leaves the target"]
        if not self.is_injective():
            problems.append("map is not injective")
        if m[self.source.bot] != self.target.bot:
            problems.append("bottom not preserved")
        if m[self.source.top] != self.target.top:
            problems.append("top not preserved")
        for name in ("meet", "join", "imp"):
            source_table = getattr(self.source, name)
            target_table = getattr(self.target, name)
            if not np.array_equal(target_table[m[:, None], m[None, :]], m[source_table]):
                problems.append(f"{name} not preserved")
        return problems

    def validate(self) -> "AlgebraEmbedding":
        problems = self.violations()
        if problems:
            raise InvalidEmbedding("; ".join(problems))
        return self

    def then(self, after: "AlgebraEmbedding") -> "AlgebraEmbedding":
        """Composite ``after . self``."""
        if after.source is not self.target and not after.source.same_tables(self.target):
            raise InvalidEmbedding("embeddings do not compose")
        return AlgebraEmbedding(self.source, after.target, after.mapping[self.mapping])

    def inverse(self) -> "AlgebraEmbedding":
        if not self.is_bijective():
            raise InvalidEmbedding("only bijections can be inverted")
        inverse = np.empty(self.source.size, dtype=np.int64)
        inverse[self.mapping] = np.arange(self.source.size)
        return AlgebraEmbedding(self.target, self.source, inverse)


def subalgebra_generated(
    A: HeytingAlgebra, S: Iterable[int]
) -> Tuple[HeytingAlgebra, AlgebraEmbedding]:
    """Subalgebra generated by S, with its inclusion into A.

    Args:
        A: Ambient algebra
        S: Generating elements

    Returns:
        (subalgebra, inclusion embedding)
    """
    members = closure(A, S)
    sub = restrict(A, members)
    return sub, AlgebraEmbedding(sub, A, members)


def _signature(A: HeytingAlgebra) -> np.ndarray:
    down = A.leq.sum(axis=0)
    up = A.leq.sum(axis=1)
    dense = A.neg == A.bot
    return np.stack([down, up, dense.astype(np.int64)], axis=1)


class _Search:
    """Backtracking search for embeddings with constraint propagation."""

    def __init__(self, source: HeytingAlgebra, target: HeytingAlgebra, onto: bool):
        self.source = source
        self.target = target
        self.onto = onto
        self.tables = [
            (source.meet, target.meet),
            (source.join, target.join),
            (source.imp, target.imp),
        ]
        if onto:
            self.source_sig = _signature(source)
            self.target_sig = _signature(target)

    def compatible(self, x: int, y: int) -> bool:
        if self.onto:
            return bool(np.array_equal(self.source_sig[x], self.target_sig[y]))
        # order ideals can only grow under an embedding
        return bool(self.source.leq[:, x].sum() <= self.target.leq[:, y].sum())

    def extend(self, assignment: np.ndarray, used: np.ndarray, pairs: List[Tuple[int, int]]):
        assignment = assignment.copy()
        used = used.copy()
        queue = list(pairs)
        while queue:
            x, y = queue.pop()
            if assignment[x] >= 0:
                if assignment[x] != y:
                    return None
                continue
            if used[y] or not self.compatible(x, y):
                return None
            assignment[x] = y
            used[y] = True
            for u in np.flatnonzero(assignment >= 0):
                fu = assignment[u]
                for source_table, target_table in self.tables:
                    queue.append((int(source_table[x, u]), int(target_table[y, fu])))
                    queue.append((int(source_table[u, x]), int(target_table[fu, y])))
        return assignment, used

    def run(self, fixed: Dict[int, int]) -> Optional[np.ndarray]:
        start = np.full(self.source.size, -1, dtype=np.int64)
        used = np.zeros(self.target.size, dtype=bool)
        pairs = [(self.source.bot, self.target.bot), (self.source.top, self.target.top)]
        pairs.extend(fixed.items())
        state = self.extend(start, used, pairs)
        if state is None:
            return None
        return self._descend(*state)

    def _descend(self, assignment: np.ndarray, used: np.ndarray) -> Optional[np.ndarray]:
        open_ = np.flatnonzero(assignment < 0)
        if not len(open_):
            return assignment
        x = int(open_[0])
        for y in np.flatnonzero(~used):
            state = self.extend(assignment, used, [(x, int(y))])
            if state is None:
                continue
            found = self._descend(*state)
            if found is not None:
                return found
        return None


def find_embedding(
    A: HeytingAlgebra,
    B: HeytingAlgebra,
    fixed: Optional[Dict[int, int]] = None,
    onto: bool = False,
) -> Optional[AlgebraEmbedding]:
    """First embedding of A into B in canonical search order.

    Args:
        A: Source algebra
        B: Target algebra
        fixed: Required images for some source elements
        onto: Require a bijection

    Returns:
        The embedding, or None if there is none
    """
    if A.size > B.size or (onto and A.size != B.size):
        return None
    if A.is_trivial() != B.is_trivial():
        return None
    mapping = _Search(A, B, onto).run(dict(fixed or {}))
    if mapping is None:
        return None
    return AlgebraEmbedding(A, B, mapping).validate()


def find_isomorphism(
    A: HeytingAlgebra, B: HeytingAlgebra, fixed: Optional[Dict[int, int]] = None
) -> Optional[AlgebraEmbedding]:
    """First isomorphism A -> B in canonical search order, or None."""
    return find_embedding(A, B, fixed=fixed, onto=True)


def generating_set(A: HeytingAlgebra, max_size: Optional[int] = None) -> Optional[List[int]]:
    """A smallest set of elements generating A, first in lexicographic order.

    Returns None when every generating set has more than ``max_size`` elements.
    """
    candidates = [x for x in A.elements if x not in (A.bot, A.top)]
    limit = len(candidates) if max_size is None else min(max_size, len(candidates))
    for size in range(limit + 1):
        for combo in itertools.combinations(candidates, size):
            if len(closure(A, combo)) == A.size:
                return list(combo)
    return None
