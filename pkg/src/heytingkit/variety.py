"""Term evaluation, identity search, variety membership and the theorem checks built on them."""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import config
from .enrichment import (
    EPair,
    PackingReport,
    TauExpansion,
    canonical_expansion,
    check_packing,
    tilde_from_pair,
)
from .errors import BudgetExceeded, MissingInterpretation, NotEPair, NotPacked, UnboundVariable
from .filters import pair_spectrum_maps, special_filters
from .formulas import (
    TAU,
    And,
    Formula,
    Imp,
    Neg,
    One,
    Or,
    Tau,
    Tilde,
    Var,
    Zero,
)
from .lattice import (
    AlgebraEmbedding,
    HeytingAlgebra,
    find_embedding,
    find_isomorphism,
    generating_set,
)
from .logging_config import get_logger
from .stone import delta_algebra, delta_h, delta_subalgebra, stone_embed

logger = get_logger(__name__)

Target = Union[HeytingAlgebra, TauExpansion]


@dataclass(frozen=True, eq=False)
class _Structure:
    algebra: HeytingAlgebra
    tau: Optional[int] = None
    tilde: Optional[np.ndarray] = None


def _structure(target: Target) -> _Structure:
    if isinstance(target, TauExpansion):
        tilde = target.tilde.t if target.tilde is not None else None
        return _Structure(target.algebra, target.tau, tilde)
    return _Structure(target)


@dataclass(frozen=True)
class Valuation:
    """An assignment of elements to variables in an algebra or expansion."""

    target: Target
    assignment: Dict[int, int]

    @property
    def algebra(self) -> HeytingAlgebra:
        return _structure(self.target).algebra

    def describe(self) -> str:
        labels = self.algebra.labels
        return ", ".join(f"p{v}={labels[x]}" for v, x in sorted(self.assignment.items()))


def _binary_table(A: HeytingAlgebra, node: Formula) -> np.ndarray:
    if isinstance(node, And):
        return A.meet
    if isinstance(node, Or):
        return A.join
    return A.imp


def evaluate(term: Formula, valuation: Valuation) -> int:
    """Value of a term under a valuation.

    Raises:
        UnboundVariable: If a variable of the term has no value
        MissingInterpretation: If the term uses tau or ~ and the target lacks it
    """
    s = _structure(valuation.target)
    A = s.algebra

    def walk(node: Formula) -> int:
        if isinstance(node, Var):
            if node.index not in valuation.assignment:
                raise UnboundVariable(node.index)
            return valuation.assignment[node.index]
        if isinstance(node, Zero):
            return A.bot
        if isinstance(node, One):
            return A.top
        if isinstance(node, Tau):
            if s.tau is None:
                raise MissingInterpretation("tau is not interpreted")
            return s.tau
        if isinstance(node, Neg):
            return int(A.neg[walk(node.body)])
        if isinstance(node, Tilde):
            if s.tilde is None:
                raise MissingInterpretation("~ is not interpreted")
            return int(s.tilde[walk(node.body)])
        table = _binary_table(A, node)
        return int(table[walk(node.left), walk(node.right)])

    return walk(term)


def _grid(size: int, count: int) -> np.ndarray:
    """Row v holds variable v in every assignment; the first variable is most significant."""
    if count == 0:
        return np.zeros((0, 1), dtype=np.int64)
    return np.indices((size,) * count).reshape(count, -1)


def _vectorized(term: Formula, s: _Structure, grid: np.ndarray) -> np.ndarray:
    A = s.algebra
    width = grid.shape[1]
    cache: Dict[Formula, np.ndarray] = {}

    def walk(node: Formula) -> np.ndarray:
        if node in cache:
            return cache[node]
        if isinstance(node, Var):
            if node.index >= len(grid):
                raise UnboundVariable(node.index)
            value = grid[node.index]
        elif isinstance(node, Zero):
            value = np.full(width, A.bot)
        elif isinstance(node, One):
            value = np.full(width, A.top)
        elif isinstance(node, Tau):
            if s.tau is None:
                raise MissingInterpretation("tau is not interpreted")
            value = np.full(width, s.tau)
        elif isinstance(node, Neg):
            value = A.neg[walk(node.body)]
        elif isinstance(node, Tilde):
            if s.tilde is None:
                raise MissingInterpretation("~ is not interpreted")
            value = s.tilde[walk(node.body)]
        else:
            value = _binary_table(A, node)[walk(node.left), walk(node.right)]
        cache[node] = value
        return value

    return walk(term)


def evaluate_all(term: Formula, target: Target, variables: Optional[int] = None) -> np.ndarray:
    """Values of a term under every assignment, in lexicographic order of assignments."""
    s = _structure(target)
    count = variables if variables is not None else max(term.variables(), default=-1) + 1
    return _vectorized(term, s, _grid(s.algebra.size, count))


def find_counterexample(target: Target, term: Formula) -> Optional[Valuation]:
    """Lexicographically least valuation sending the term below 1, or None."""
    s = _structure(target)
    count = max(term.variables(), default=-1) + 1
    grid = _grid(s.algebra.size, count)
    values = _vectorized(term, s, grid)
    failing = np.flatnonzero(values != s.algebra.top)
    if not len(failing):
        return None
    column = int(failing[0])
    assignment = {v: int(grid[v, column]) for v in range(count)}
    return Valuation(target, assignment)


def holds_in(target: Target, term: Formula) -> bool:
    """True iff the term evaluates to 1 under every valuation."""
    return find_counterexample(target, term) is None


def random_term(
    rng: np.random.Generator,
    variables: int,
    depth: int,
    tau: bool = False,
    tilde: bool = False,
) -> Formula:
    """A random term of depth at most ``depth`` over ``variables`` variables."""
    atoms: List[Formula] = [Var(i) for i in range(variables)] + [Zero(), One()]
    if tau:
        atoms.append(TAU)
    if depth == 0 or rng.random() < 0.25:
        return atoms[int(rng.integers(len(atoms)))]
    kinds = ["and", "or", "imp", "neg"] + (["tilde"] if tilde else [])
    kind = kinds[int(rng.integers(len(kinds)))]
    if kind in ("neg", "tilde"):
        body = random_term(rng, variables, depth - 1, tau, tilde)
        return Neg(body) if kind == "neg" else Tilde(body)
    left = random_term(rng, variables, depth - 1, tau, tilde)
    right = random_term(rng, variables, depth - 1, tau, tilde)
    return {"and": And, "or": Or, "imp": Imp}[kind](left, right)


# Separating identities


@dataclass(frozen=True)
class SeparationResult:
    """Outcome of a separating-identity search.

    Attributes:
        term: First separating term found, or None
        holds_in_first: Whether ``term`` holds in the first structure
        classes: Distinct term classes explored
        truncated: True when the class limit stopped the search
        decided_by: "embedding", "variety" or "search"
    """

    term: Optional[Formula]
    holds_in_first: Optional[bool]
    classes: int
    truncated: bool
    decided_by: str


def _common(first: _Structure, second: _Structure) -> Tuple[_Structure, _Structure]:
    with_tau = first.tau is not None and second.tau is not None
    with_tilde = with_tau and first.tilde is not None and second.tilde is not None

    def strip(s: _Structure) -> _Structure:
        return _Structure(
            s.algebra, s.tau if with_tau else None, s.tilde if with_tilde else None
        )

    return strip(first), strip(second)


def _embeds(source: _Structure, target: _Structure) -> bool:
    fixed = {source.tau: target.tau} if source.tau is not None else None
    e = find_embedding(source.algebra, target.algebra, fixed=fixed)
    if e is None:
        return False
    if source.tilde is not None:
        m = e.mapping
        return bool(np.array_equal(m[source.tilde], target.tilde[m]))
    return True


def _same_variety(first: _Structure, second: _Structure) -> bool:
    if first.tau is not None:
        return False
    try:
        return variety_contains(first.algebra, second.algebra) and variety_contains(
            second.algebra, first.algebra
        )
    except BudgetExceeded as error:
        logger.debug("Exact variety comparison skipped: %s", error)
        return False


class _TermClasses:
    """Terms up to equality of their value vectors in both structures."""

    def __init__(self, first: _Structure, second: _Structure, variables: int):
        self.structures = (first, second)
        self.grids = tuple(_grid(s.algebra.size, variables) for s in self.structures)
        self.terms: List[Formula] = []
        self.depths: List[int] = []
        self.values: Tuple[List[np.ndarray], List[np.ndarray]] = ([], [])
        self.seen: Dict[bytes, int] = {}

    def __len__(self) -> int:
        return len(self.terms)

    def add(self, term: Formula, depth: int, first: np.ndarray, second: np.ndarray) -> bool:
        key = np.ascontiguousarray(first).tobytes() + np.ascontiguousarray(second).tobytes()
        if key in self.seen:
            return False
        self.seen[key] = len(self.terms)
        self.terms.append(term)
        self.depths.append(depth)
        self.values[0].append(first)
        self.values[1].append(second)
        return True

    def separates(self, index: int) -> Optional[bool]:
        """Whether the class holds in the first structure, when it holds in exactly one."""
        verdicts = [
            bool(np.all(vector[index] == s.algebra.top))
            for vector, s in zip(self.values, self.structures)
        ]
        return verdicts[0] if verdicts[0] != verdicts[1] else None


def _atoms(first: _Structure, variables: int) -> List[Formula]:
    atoms: List[Formula] = [Var(i) for i in range(variables)] + [Zero(), One()]
    if first.tau is not None:
        atoms.append(TAU)
    return atoms


def search_separating_identity(
    first: Target,
    second: Target,
    max_vars: int = config.SEARCH_MAX_VARS,
    max_depth: int = config.SEARCH_MAX_DEPTH,
    limit: int = config.SEARCH_TERM_LIMIT,
    exhaustive: bool = False,
) -> SeparationResult:
    """Search for a term holding in exactly one of two structures.

    Terms are explored by depth, one representative per class of terms with equal values in
    both structures, so the search is exhaustive up to the bounds. Within a depth the
    separating term with the shortest text (then the least text) is returned. When the two
    structures embed into each other, or generate the same variety, no term can separate them
    and the search is skipped unless ``exhaustive`` is set.

    Args:
        first: Algebra or expansion
        second: Algebra or expansion; only the shared signature is used
        max_vars: Number of variables
        max_depth: Maximal connective nesting
        limit: Maximal number of term classes before the search gives up
        exhaustive: Enumerate terms even when embeddings or membership decide the answer

    Returns:
        The search outcome
    """
    if max_vars < 0 or max_depth < 0:
        raise ValueError("search bounds must be non-negative")
    a, b = _common(_structure(first), _structure(second))
    if not exhaustive:
        if _embeds(a, b) and _embeds(b, a):
            logger.debug("Structures embed into each other; no separating identity")
            return SeparationResult(None, None, 0, False, "embedding")
        if _same_variety(a, b):
            logger.debug("Structures generate the same variety; no separating identity")
            return SeparationResult(None, None, 0, False, "variety")

    classes = _TermClasses(a, b, max_vars)
    found: List[Tuple[int, str, int]] = []

    def consider(term: Formula, depth: int, first_value, second_value) -> bool:
        if classes.add(term, depth, first_value, second_value):
            index = len(classes) - 1
            if classes.separates(index) is not None:
                found.append((term.size, str(term), index))
        return len(classes) >= limit

    def result(truncated: bool) -> SeparationResult:
        if not found:
            return SeparationResult(None, None, len(classes), truncated, "search")
        _, _, index = min(found)
        return SeparationResult(
            classes.terms[index], classes.separates(index), len(classes), truncated, "search"
        )

    def stop() -> SeparationResult:
        logger.warning(
            "Term search stopped after %d classes (limit %d); result is inconclusive",
            len(classes),
            limit,
        )
        return result(True)

    for atom in _atoms(a, max_vars):
        values = [_vectorized(atom, s, grid) for s, grid in zip((a, b), classes.grids)]
        if consider(atom, 0, *values):
            return stop()
    if found:
        return result(False)

    binary = [(And, "meet", True), (Or, "join", True), (Imp, "imp", False)]
    for depth in range(1, max_depth + 1):
        count = len(classes)
        depths = np.array(classes.depths[:count])
        stacked = [np.stack(values[:count]) for values in classes.values]
        previous = np.flatnonzero(depths == depth - 1)
        for i in previous:
            for unary, table in ((Neg, "neg"), (Tilde, "tilde")):
                if unary is Tilde and a.tilde is None:
                    continue
                values = [
                    (s.algebra.neg if table == "neg" else s.tilde)[matrix[i]]
                    for s, matrix in zip((a, b), stacked)
                ]
                if consider(unary(classes.terms[i]), depth, *values):
                    return stop()
        for node, table, commutative in binary:
            for i in range(count):
                partners = np.arange(count)
                if depths[i] != depth - 1:
                    partners = partners[depths == depth - 1]
                if commutative:
                    partners = partners[partners >= i]
                if not len(partners):
                    continue
                blocks = [
                    getattr(s.algebra, table)[matrix[i][None, :], matrix[partners]]
                    for s, matrix in zip((a, b), stacked)
                ]
                for row, j in enumerate(partners):
                    term = node(classes.terms[i], classes.terms[int(j)])
                    if consider(term, depth, blocks[0][row], blocks[1][row]):
                        return stop()
        logger.debug("Depth %d: %d term classes", depth, len(classes))
        if found:
            return result(False)
    return result(False)


def separating_identity(
    first: Target,
    second: Target,
    max_vars: int = config.SEARCH_MAX_VARS,
    max_depth: int = config.SEARCH_MAX_DEPTH,
    limit: int = config.SEARCH_TERM_LIMIT,
) -> Optional[Formula]:
    """First term holding in exactly one of the structures, or None within the bounds."""
    return search_separating_identity(first, second, max_vars, max_depth, limit).term


# Variety membership


def variety_contains(
    B: HeytingAlgebra,
    A: HeytingAlgebra,
    budget: int = config.FREE_ALGEBRA_BUDGET,
    max_elements: int = config.FREE_ALGEBRA_MAX_ELEMENTS,
) -> bool:
    """Decide whether A lies in the variety generated by B.

    A belongs to the variety iff it is a quotient of the free algebra of that variety on as
    many generators as A needs. The free algebra is the subalgebra of B^(|B|^g) generated by
    the coordinate projections; it is built together with a shadow copy of A, starting from
    (projection_i, generator_i), and A is a quotient exactly when the shadow is a function of
    the B-part.

    Raises:
        BudgetExceeded: If |B|^g exceeds ``budget`` or the free algebra outgrows ``max_elements``
    """
    if A.is_trivial() or find_embedding(A, B) is not None:
        return True
    if B.is_trivial():
        return False
    generators = generating_set(A)
    coordinates = B.size ** len(generators)
    if coordinates > budget:
        raise BudgetExceeded("free algebra coordinates", coordinates, budget)

    grid = _grid(B.size, len(generators))
    width = grid.shape[1]
    elements: List[np.ndarray] = []
    values: List[int] = []
    index: Dict[bytes, int] = {}

    def admit(row: np.ndarray, value: int) -> bool:
        key = np.ascontiguousarray(row).tobytes()
        known = index.get(key)
        if known is not None:
            return values[known] == value
        index[key] = len(elements)
        elements.append(row)
        values.append(value)
        if len(elements) > max_elements:
            raise BudgetExceeded("free algebra elements", len(elements), max_elements)
        return True

    seeds = [(np.full(width, B.bot), A.bot), (np.full(width, B.top), A.top)]
    seeds += [(grid[i], g) for i, g in enumerate(generators)]
    for row, value in seeds:
        if not admit(row, value):
            return False

    done = 0
    while done < len(elements):
        current = len(elements)
        for i in range(done, current):
            row, value = elements[i], values[i]
            if not admit(B.neg[row], int(A.neg[value])):
                return False
            for j in range(current):
                other, other_value = elements[j], values[j]
                pairs = [
                    (B.meet[row, other], A.meet[value, other_value]),
                    (B.join[row, other], A.join[value, other_value]),
                    (B.imp[row, other], A.imp[value, other_value]),
                    (B.imp[other, row], A.imp[other_value, value]),
                ]
                for candidate, image in pairs:
                    if not admit(candidate, int(image)):
                        return False
        done = current
    logger.debug(
        "Free algebra on %d generators over %d coordinates has %d elements",
        len(generators),
        coordinates,
        len(elements),
    )
    return True


# Theorem checks


@dataclass(frozen=True)
class SearchBounds:
    """Bounds shared by the theorem checks."""

    max_vars: int = config.SEARCH_MAX_VARS
    max_depth: int = config.SEARCH_MAX_DEPTH
    term_limit: int = config.SEARCH_TERM_LIMIT
    budget: int = config.FREE_ALGEBRA_BUDGET
    max_elements: int = config.FREE_ALGEBRA_MAX_ELEMENTS
    pair_samples: int = config.PAIR_SAMPLE_LIMIT
    random_terms: int = config.RANDOM_TERMS


@dataclass
class ElementFinding:
    """Findings for one element a of the main-theorem check."""

    a: int
    delta_size: int
    separating: Optional[Formula]
    truncated: bool
    contains_delta: Optional[bool]
    contained_in_delta: Optional[bool]
    budget_note: Optional[str] = None
    random_disagreements: int = 0
    classes: int = 0

    @property
    def ok(self) -> bool:
        return (
            self.separating is None
            and self.contains_delta is not False
            and self.contained_in_delta is not False
            and self.random_disagreements == 0
        )


@dataclass
class PairFinding:
    """Whether delta[A_{a,b}] and delta[delta[A_a]_{h(b)}] are isomorphic."""

    a: int
    b: int
    isomorphic: bool


@dataclass
class MainTheoremReport:
    algebra: HeytingAlgebra
    elements: List[ElementFinding] = field(default_factory=list)
    pairs: List[PairFinding] = field(default_factory=list)
    pairs_sampled: bool = False

    @property
    def ok(self) -> bool:
        return all(f.ok for f in self.elements) and all(p.isomorphic for p in self.pairs)


def _chosen_pairs(
    A: HeytingAlgebra, limit: int, rng: np.random.Generator
) -> Tuple[List[Tuple[int, int]], bool]:
    pairs = list(itertools.combinations(A.elements, 2))
    if len(pairs) <= limit:
        return pairs, False
    picked = sorted(rng.choice(len(pairs), size=limit, replace=False).tolist())
    return [pairs[i] for i in picked], True


def two_step_isomorphic(A: HeytingAlgebra, a: int, b: int) -> bool:
    """delta[A_{a,b}] is isomorphic to delta[delta[A_a]_{h(b)}]."""
    both, _ = delta_algebra(A, [a, b])
    first = delta_subalgebra(A, [a])
    again, _ = delta_algebra(first.algebra, [first.embedding(b)])
    return find_isomorphism(both, again) is not None


def verify_main_theorem(
    A: HeytingAlgebra, bounds: Optional[SearchBounds] = None, seed: int = config.DEFAULT_SEED
) -> MainTheoremReport:
    """Check that A and every delta[A_a] generate the same variety.

    For each a the separating-identity search must come back empty and, within budget, variety
    membership must hold both ways; random terms must agree on both algebras. The two-step
    isomorphism is checked on all pairs, or on a seeded sample when there are too many.
    """
    bounds = bounds or SearchBounds()
    rng = np.random.default_rng(seed)
    report = MainTheoremReport(A)
    sd = stone_embed(A)
    for a in A.elements:
        D = delta_subalgebra(A, [a], stone=sd).algebra
        search = search_separating_identity(
            A, D, bounds.max_vars, bounds.max_depth, bounds.term_limit, exhaustive=True
        )
        finding = ElementFinding(
            a, D.size, search.term, search.truncated, None, None, classes=search.classes
        )
        try:
            finding.contains_delta = variety_contains(A, D, bounds.budget, bounds.max_elements)
            finding.contained_in_delta = variety_contains(
                D, A, bounds.budget, bounds.max_elements
            )
        except BudgetExceeded as error:
            finding.budget_note = str(error)
            logger.warning("Variety check for a=%s fell back to search: %s", A.labels[a], error)
        for _ in range(bounds.random_terms):
            term = random_term(rng, bounds.max_vars, bounds.max_depth)
            if holds_in(A, term) != holds_in(D, term):
                finding.random_disagreements += 1
        report.elements.append(finding)

    pairs, sampled = _chosen_pairs(A, bounds.pair_samples, rng)
    report.pairs_sampled = sampled
    for a, b in pairs:
        report.pairs.append(PairFinding(a, b, two_step_isomorphic(A, a, b)))
    logger.info(
        "Main theorem check on %d elements: %s", A.size, "passed" if report.ok else "FAILED"
    )
    return report


@dataclass
class ConjectureReport:
    """Stages of the isomorphism check for a packed embedded pair.

    Attributes:
        packing: Packing of A_{tau_a} in B_{tau_a}
        forward_inclusion: h_B(a*) is contained in phi-inverse of delta h_A(a)
        reverse_inclusion: The converse inclusion
        meet_of_special_filter: The meet of h_B(e(x)) over x in F_a of A equals h_B(a*)
        induced_map: B -> delta[A_a] matched through phi-inverse, when it is an isomorphism
        isomorphism: First isomorphism B -> delta[A_a] found by search
        delta_size: Size of delta[A_a]
    """

    packing: PackingReport
    forward_inclusion: bool
    reverse_inclusion: bool
    meet_of_special_filter: bool
    induced_map: Optional[AlgebraEmbedding]
    isomorphism: Optional[AlgebraEmbedding]
    delta_size: int

    @property
    def ok(self) -> bool:
        return (
            self.forward_inclusion
            and self.reverse_inclusion
            and self.meet_of_special_filter
            and self.induced_map is not None
            and self.isomorphism is not None
        )


def _induced_map(maps, D, sd_B, B: HeytingAlgebra) -> Optional[AlgebraEmbedding]:
    preimages = {maps.phi_inv(D.mask(d)): d for d in D.algebra.elements}
    mapping = []
    for y in B.elements:
        d = preimages.get(sd_B.h_mask(y))
        if d is None:
            return None
        mapping.append(d)
    candidate = AlgebraEmbedding(B, D.algebra, np.array(mapping, dtype=np.int64))
    if not candidate.is_bijective() or candidate.violations():
        return None
    return candidate


def _lifted_special_meet(e: AlgebraEmbedding, a: int, sd_B) -> int:
    """Intersection of h_B(e(x)) over x in F_a, with F_a taken in the source of e."""
    _, f_a = special_filters(e.source, a)
    result = sd_B.spectrum.full
    for x in f_a.elements():
        result &= sd_B.h_mask(e(x))
    return result


def verify_conjecture(e: AlgebraEmbedding, a: int, a_star: int) -> ConjectureReport:
    """Check whether B is isomorphic to delta[A_a] for a packed pair A <= B.

    Args:
        e: Embedding of A into B
        a: Element of A
        a_star: Element of B enriching e(a)

    Raises:
        NotEPair: If a_star does not enrich e(a) in B
        NotPacked: If A_{tau_a} is not packed in B_{tau_a}
    """
    A, B = e.source, e.target
    pair = EPair(B, e(a), a_star)
    if not pair.is_valid():
        raise NotEPair(f"{B.labels[a_star]} does not enrich {B.labels[e(a)]}")
    inner = TauExpansion(A, a)
    outer = TauExpansion(B, e(a), tilde_from_pair(pair))
    packing = check_packing(inner, outer, e)
    if not packing:
        raise NotPacked("the image of A does not generate B with its tilde")

    sd_A, sd_B = stone_embed(A), stone_embed(B)
    maps = pair_spectrum_maps(e)
    target = maps.phi_inv(delta_h(sd_A, a))
    star = sd_B.h_mask(a_star)
    D = delta_subalgebra(A, [a], stone=sd_A)
    report = ConjectureReport(
        packing=packing,
        forward_inclusion=not star & ~target,
        reverse_inclusion=not target & ~star,
        meet_of_special_filter=_lifted_special_meet(e, a, sd_B) == star,
        induced_map=_induced_map(maps, D, sd_B, B),
        isomorphism=find_isomorphism(B, D.algebra),
        delta_size=D.algebra.size,
    )
    logger.debug(
        "Conjecture at a=%s, a*=%s: forward=%s reverse=%s iso=%s",
        A.labels[a],
        B.labels[a_star],
        report.forward_inclusion,
        report.reverse_inclusion,
        report.isomorphism is not None,
    )
    return report


def canonical_conjecture(A: HeytingAlgebra, a: int) -> ConjectureReport:
    """verify_conjecture on the canonical expansion of (A, a)."""
    expansion = canonical_expansion(A, a)
    outer = expansion.outer
    return verify_conjecture(expansion.embedding, a, outer.tilde(outer.algebra.bot))


def conservativity_witness(
    A: HeytingAlgebra, a: int, bounds: Optional[SearchBounds] = None
) -> SeparationResult:
    """Search for an identity with tau separating A_{tau_a} from its canonical expansion."""
    bounds = bounds or SearchBounds()
    expansion = canonical_expansion(A, a)
    outer = TauExpansion(expansion.outer.algebra, expansion.outer.tau)
    return search_separating_identity(
        expansion.inner,
        outer,
        bounds.max_vars,
        bounds.max_depth,
        bounds.term_limit,
        exhaustive=True,
    )


def logic_inclusion_failures(
    A: HeytingAlgebra, subalgebras: Sequence[HeytingAlgebra], terms: Sequence[Formula]
) -> List[Tuple[Formula, int]]:
    """Terms valid in A that fail in one of the subalgebras, with the subalgebra index."""
    failures = []
    for term in terms:
        if not holds_in(A, term):
            continue
        for i, sub in enumerate(subalgebras):
            if not holds_in(sub, term):
                failures.append((term, i))
    return failures
