"""The upset algebra of a spectrum, the Stone embedding and the delta operator.

Upsets of the prime-filter poset are bitsets over filter indices. The upset algebra lists
them sorted by bitset value, so element ``i`` of ``Up(S_A)`` is ``StoneData.upsets[i]``.
"""

import enum
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from .errors import IdentityViolation, PreconditionViolated
from .filters import PrimeFilterPoset, SpectrumMaps, members_of, prime_filters, special_filters
from .lattice import (
    AlgebraEmbedding,
    HeytingAlgebra,
    find_isomorphism,
    from_order,
    restrict,
    subalgebra_generated,
)
from .logging_config import get_logger

logger = get_logger(__name__)


class Marker(enum.Enum):
    ALL = "all"


ALL = Marker.ALL


def upsets(S: PrimeFilterPoset) -> List[int]:
    """All upward-closed sets of prime filters, sorted by bitset value."""
    # larger filters first, so a point is decided after everything above it
    points = sorted(range(len(S)), key=lambda i: -len(S.filters[i]))
    found = []

    def walk(position: int, mask: int) -> None:
        if position == len(points):
            found.append(mask)
            return
        point = points[position]
        walk(position + 1, mask)
        if not S.strict_up(point) & ~mask:
            walk(position + 1, mask | 1 << point)

    walk(0, 0)
    return sorted(found)


def _upset_label(mask: int) -> str:
    return "{" + ",".join(f"F{i}" for i in members_of(mask)) + "}"


def _upset_algebra(S: PrimeFilterPoset) -> Tuple[HeytingAlgebra, List[int]]:
    masks = upsets(S)
    n = len(masks)
    leq = np.array([[(x & ~y) == 0 for y in masks] for x in masks], dtype=bool).reshape(n, n)
    algebra = from_order([_upset_label(m) for m in masks], leq)

    position = {m: i for i, m in enumerate(masks)}
    ups = [S.up(i) for i in range(len(S))]
    for i, x in enumerate(masks):
        for j, y in enumerate(masks):
            if position[x & y] != algebra.meet[i, j] or position[x | y] != algebra.join[i, j]:
                raise IdentityViolation("upset meet/join differ from intersection/union")
            arrow = 0
            for point, above in enumerate(ups):
                if not (above & x) & ~y:
                    arrow |= 1 << point
            if position[arrow] != algebra.imp[i, j]:
                raise IdentityViolation("upset implication differs from its definition")
    return algebra, masks


def upset_algebra(S: PrimeFilterPoset) -> HeytingAlgebra:
    """The Heyting algebra Up(S) of all upsets of a spectrum.

    Meet is intersection, join is union and X -> Y is the set of filters F such that every
    filter above F lying in X also lies in Y. The table computed from the order is checked
    against these definitions.
    """
    return _upset_algebra(S)[0]


@dataclass(frozen=True, eq=False)
class StoneData:
    """The Stone embedding of an algebra into the upsets of its spectrum.

    Attributes:
        algebra: The algebra A
        spectrum: Its prime filters S_A
        upsets: Bitset of each element of ``upset_algebra``
        upset_algebra: Up(S_A)
        embedding: x -> h(x) as an algebra embedding
        image: The subalgebra h[A] of Up(S_A)
    """

    algebra: HeytingAlgebra
    spectrum: PrimeFilterPoset
    upsets: Tuple[int, ...]
    upset_algebra: HeytingAlgebra
    embedding: AlgebraEmbedding
    image: HeytingAlgebra
    position: Dict[int, int] = field(repr=False)

    def h(self, x: int) -> int:
        """Index in Up(S_A) of h(x)."""
        return self.embedding(x)

    def h_mask(self, x: int) -> int:
        return self.upsets[self.embedding(x)]

    def index_of(self, mask: int) -> int:
        return self.position[mask]

    def is_onto(self) -> bool:
        return self.image.size == self.upset_algebra.size


def stone_embed(A: HeytingAlgebra) -> StoneData:
    """Build h: A -> Up(S_A), h(x) = {F : x in F}, and verify it is an embedding."""
    spectrum = prime_filters(A)
    algebra, masks = _upset_algebra(spectrum)
    position = {m: i for i, m in enumerate(masks)}
    h = np.array([position[spectrum.containing(x)] for x in A.elements], dtype=np.int64)
    embedding = AlgebraEmbedding(A, algebra, h).validate()
    image = restrict(algebra, np.sort(h))
    logger.debug(
        "Stone embedding: %d elements, %d prime filters, %d upsets",
        A.size,
        len(spectrum),
        len(masks),
    )
    return StoneData(A, spectrum, tuple(masks), algebra, embedding, image, position)


def delta(S: PrimeFilterPoset, X: int) -> int:
    """The filters all of whose strict extensions lie in X.

    Raises:
        PreconditionViolated: If X is not an upset
    """
    if not S.is_upset(X):
        raise PreconditionViolated("delta expects an upset")
    result = 0
    for i in range(len(S)):
        if not S.strict_up(i) & ~X:
            result |= 1 << i
    return result


def delta_h(sd: StoneData, x: int) -> int:
    """delta(h(x)), checked against h(x) joined with max h-bar(x).

    Raises:
        IdentityViolation: If the two computations differ
    """
    S = sd.spectrum
    by_definition = delta(S, sd.h_mask(x))
    by_identity = S.containing(x) | S.maximal(S.excluding(x))
    if by_definition != by_identity:
        raise IdentityViolation(
            f"delta h({sd.algebra.labels[x]}) = {S.describe(by_definition)} "
            f"but h(x) with max h-bar(x) is {S.describe(by_identity)}"
        )
    return by_definition


def meet_of_special_filter(sd: StoneData, a: int) -> int:
    """Intersection of h(x) over x in F_a."""
    _, f_a = special_filters(sd.algebra, a)
    result = sd.spectrum.full
    for x in f_a.elements():
        result &= sd.h_mask(x)
    return result


@dataclass(frozen=True, eq=False)
class DeltaAlgebra:
    """A subalgebra delta[A_X] of Up(S_A) with its bookkeeping.

    Attributes:
        algebra: delta[A_X]
        embedding: A -> delta[A_X], x -> h(x)
        inclusion: delta[A_X] -> Up(S_A)
        stone: Stone data of A
    """

    algebra: HeytingAlgebra
    embedding: AlgebraEmbedding
    inclusion: AlgebraEmbedding
    stone: StoneData

    def mask(self, d: int) -> int:
        """Upset of S_A represented by element d."""
        return self.stone.upsets[self.inclusion(d)]

    def element(self, mask: int) -> Optional[int]:
        index = self.stone.position.get(mask)
        if index is None:
            return None
        found = np.flatnonzero(self.inclusion.mapping == index)
        return int(found[0]) if len(found) else None


def delta_subalgebra(
    A: HeytingAlgebra,
    X: Union[Iterable[int], Marker] = ALL,
    stone: Optional[StoneData] = None,
) -> DeltaAlgebra:
    """Subalgebra of Up(S_A) generated by h(A) and the delta h(x) for x in X."""
    sd = stone or stone_embed(A)
    chosen = list(A.elements) if X is ALL else sorted(set(X))
    generators = [sd.h(x) for x in A.elements]
    generators += [sd.index_of(delta_h(sd, x)) for x in chosen]
    sub, inclusion = subalgebra_generated(sd.upset_algebra, generators)
    position = np.full(sd.upset_algebra.size, -1, dtype=np.int64)
    position[inclusion.mapping] = np.arange(sub.size)
    embedding = AlgebraEmbedding(A, sub, position[sd.embedding.mapping]).validate()
    logger.debug("delta subalgebra over %d generators has %d elements", len(chosen), sub.size)
    return DeltaAlgebra(sub, embedding, inclusion, sd)


def delta_algebra(
    A: HeytingAlgebra, X: Union[Iterable[int], Marker] = ALL
) -> Tuple[HeytingAlgebra, AlgebraEmbedding]:
    """delta[A_X] with the embedding x -> h(x); ``ALL`` gives delta[A]."""
    built = delta_subalgebra(A, X)
    return built.algebra, built.embedding


@dataclass(frozen=True, eq=False)
class Tower:
    """Iterates A_0 = A, A_{i+1} = delta[A_i].

    Attributes:
        algebras: A_0 .. A_k
        embeddings: ``embeddings[i]`` maps A_i into A_{i+1}
        stabilized: True when some A_{i+1} is isomorphic to A_i via the canonical map
        stable_at: The step i at which that happened
    """

    algebras: List[HeytingAlgebra]
    embeddings: List[AlgebraEmbedding]
    stabilized: bool
    stable_at: Optional[int]

    def composite(self, i: int, j: int) -> AlgebraEmbedding:
        """phi_ij: A_i -> A_j for i <= j."""
        if not 0 <= i <= j < len(self.algebras):
            raise IndexError(f"no composite from step {i} to step {j}")
        result = AlgebraEmbedding.identity(self.algebras[i])
        for step in range(i, j):
            result = result.then(self.embeddings[step])
        return result


def tower(A: HeytingAlgebra, max_steps: int) -> Tower:
    """Build the tower of delta algebras, stopping once it stabilizes."""
    if max_steps < 0:
        raise PreconditionViolated("max_steps must be non-negative")
    algebras = [A]
    embeddings: List[AlgebraEmbedding] = []
    for step in range(max_steps):
        current = algebras[-1]
        following, embedding = delta_algebra(current, ALL)
        algebras.append(following)
        embeddings.append(embedding)
        if embedding.is_bijective() and find_isomorphism(current, following) is not None:
            logger.info("Tower stabilized at step %d with %d elements", step, current.size)
            return Tower(algebras, embeddings, True, step)
    return Tower(algebras, embeddings, False, None)


def pretop(A: HeytingAlgebra) -> Optional[int]:
    """The element w < 1 above every x < 1, when it exists."""
    below_top = [x for x in A.elements if x != A.top]
    if not below_top:
        return None
    candidate = A.join_all(below_top)
    return candidate if candidate != A.top else None


def spectrum_embedding(
    maps: SpectrumMaps, source: StoneData, target: StoneData
) -> AlgebraEmbedding:
    """phi-inverse as a map Up(S_A) -> Up(S_B)."""
    mapping = [target.index_of(maps.phi_inv(mask)) for mask in source.upsets]
    return AlgebraEmbedding(source.upset_algebra, target.upset_algebra, np.array(mapping))
