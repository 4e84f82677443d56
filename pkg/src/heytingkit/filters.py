"""Filters, prime filters and the special filters X_a and F_a.

Filters are stored as Python-int bitsets over element indices. In a finite lattice every
filter is principal, so enumeration walks the principal filters ``[x)`` instead of the
powerset.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

import numpy as np

from .errors import IdentityViolation, PreconditionViolated
from .lattice import AlgebraEmbedding, HeytingAlgebra
from .logging_config import get_logger

logger = get_logger(__name__)


def mask_of(items: Iterable[int]) -> int:
    mask = 0
    for item in items:
        mask |= 1 << int(item)
    return mask


def members_of(mask: int) -> List[int]:
    items = []
    index = 0
    while mask:
        if mask & 1:
            items.append(index)
        mask >>= 1
        index += 1
    return items


def up_masks(A: HeytingAlgebra) -> List[int]:
    """``up_masks(A)[x]`` is the bitset of the principal filter [x)."""
    return [mask_of(np.flatnonzero(A.leq[x])) for x in A.elements]


@dataclass(frozen=True)
class Filter:
    """A filter of a finite algebra, as a bitset of element indices."""

    algebra: HeytingAlgebra
    members: int

    def __contains__(self, x: int) -> bool:
        return bool(self.members >> int(x) & 1)

    def __len__(self) -> int:
        return bin(self.members).count("1")

    def elements(self) -> List[int]:
        return members_of(self.members)

    @property
    def is_proper(self) -> bool:
        return self.algebra.bot not in self

    @property
    def generator(self) -> int:
        """The least element; every finite filter is principal."""
        return self.algebra.meet_all(self.elements())

    def labels(self) -> List[str]:
        return sorted(self.algebra.labels[x] for x in self.elements())

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def is_filter(A: HeytingAlgebra, mask: int) -> bool:
    items = members_of(mask)
    if not mask >> A.top & 1:
        return False
    ups = up_masks(A)
    for x in items:
        if ups[x] & ~mask:
            return False
        for y in items:
            if not mask >> int(A.meet[x, y]) & 1:
                return False
    return True


def is_prime(A: HeytingAlgebra, mask: int) -> bool:
    """Proper, and x | y in F implies x in F or y in F."""
    if mask >> A.bot & 1:
        return False
    for x in A.elements:
        for y in range(x, A.size):
            if mask >> int(A.join[x, y]) & 1 and not (mask >> x & 1 or mask >> y & 1):
                return False
    return True


def generated_filter(A: HeytingAlgebra, X: Iterable[int]) -> Filter:
    """Smallest filter containing X.

    Closes X under meets before taking the upward closure; in a finite algebra this is the
    principal filter of the meet of X. The result may be improper.
    """
    generator = A.meet_all(X)
    return Filter(A, up_masks(A)[generator])


@dataclass(frozen=True, eq=False)
class PrimeFilterPoset:
    """The spectrum of an algebra: its prime filters ordered by inclusion.

    Attributes:
        algebra: The algebra
        filters: Prime filters sorted by bitset value
        order: ``order[i, j]`` is True iff filters[i] is a subset of filters[j]
    """

    algebra: HeytingAlgebra
    filters: Tuple[Filter, ...]
    order: np.ndarray

    def __len__(self) -> int:
        return len(self.filters)

    def __iter__(self):
        return iter(self.filters)

    @property
    def full(self) -> int:
        return (1 << len(self.filters)) - 1

    def index(self, members: int) -> int:
        for i, f in enumerate(self.filters):
            if f.members == members:
                return i
        raise KeyError("not a prime filter of this algebra")

    def containing(self, x: int) -> int:
        """Bitset over filter indices of the prime filters containing x."""
        return mask_of(i for i, f in enumerate(self.filters) if x in f)

    def excluding(self, x: int) -> int:
        return self.full & ~self.containing(x)

    def up(self, i: int) -> int:
        return mask_of(np.flatnonzero(self.order[i]))

    def strict_up(self, i: int) -> int:
        return self.up(i) & ~(1 << i)

    def maximal(self, mask: int) -> int:
        """The inclusion-maximal members of a set of filter indices."""
        return mask_of(i for i in members_of(mask) if not self.strict_up(i) & mask)

    def is_upset(self, mask: int) -> bool:
        return all(not self.up(i) & ~mask for i in members_of(mask))

    def subset(self, mask: int) -> List[Filter]:
        return [self.filters[i] for i in members_of(mask)]

    def describe(self, mask: int) -> str:
        return "{" + ", ".join(str(f) for f in self.subset(mask)) + "}"


def prime_filters(A: HeytingAlgebra) -> PrimeFilterPoset:
    """All proper prime filters of A, sorted by bitset value."""
    found = set()
    for mask in up_masks(A):
        if is_prime(A, mask):
            found.add(mask)
    ordered = sorted(found)
    filters = tuple(Filter(A, mask) for mask in ordered)
    order = np.array(
        [[(f.members & ~g.members) == 0 for g in filters] for f in filters], dtype=bool
    ).reshape(len(filters), len(filters))
    logger.debug("Algebra of size %d has %d prime filters", A.size, len(filters))
    return PrimeFilterPoset(A, filters, order)


def excluding_and_max(
    A: HeytingAlgebra, a: int, spectrum: Optional[PrimeFilterPoset] = None
) -> Tuple[List[Filter], List[Filter]]:
    """Prime filters omitting a, and the maximal ones among them."""
    spectrum = spectrum or prime_filters(A)
    excluded = spectrum.excluding(a)
    return spectrum.subset(excluded), spectrum.subset(spectrum.maximal(excluded))


def special_filters(A: HeytingAlgebra, a: int) -> Tuple[Filter, Filter]:
    """The filters X_a = {x : x -> a = a} and F_a.

    F_a is computed as {x | (x -> a)}, as {y : y -> a <= y} and as X_a meet [a); the three
    must agree.

    Raises:
        IdentityViolation: If the three descriptions of F_a differ
    """
    x_a = mask_of(x for x in A.elements if A.imp[x, a] == a)
    by_join = mask_of(int(A.join[x, A.imp[x, a]]) for x in A.elements)
    by_condition = mask_of(y for y in A.elements if A.leq[A.imp[y, a], y])
    by_intersection = x_a & up_masks(A)[a]
    if not by_join == by_condition == by_intersection:
        raise IdentityViolation(f"descriptions of F_a disagree at a={A.labels[a]}")
    return Filter(A, x_a), Filter(A, by_join)


def restrict_to_source(e: AlgebraEmbedding, members: int) -> int:
    """Bitset over the source of the elements whose image lies in ``members``."""
    return mask_of(x for x in e.source.elements if members >> e(x) & 1)


@dataclass(frozen=True, eq=False)
class SpectrumMaps:
    """Maps between the spectra of an embedded pair A <= B.

    ``phi[j]`` is the index in S_A of the restriction of the j-th prime filter of B.
    """

    embedding: AlgebraEmbedding
    source: PrimeFilterPoset
    target: PrimeFilterPoset
    phi: np.ndarray

    def phi_tilde(self, mask: int) -> int:
        """Imagewise restriction of a set of B-filters."""
        return mask_of(int(self.phi[j]) for j in members_of(mask))

    def phi_inv(self, mask: int) -> int:
        """The B-filters whose restriction lies in ``mask``."""
        return mask_of(j for j in range(len(self.target)) if mask >> int(self.phi[j]) & 1)

    def is_surjective(self) -> bool:
        return len(set(self.phi.tolist())) == len(self.source)


def pair_spectrum_maps(e: AlgebraEmbedding) -> SpectrumMaps:
    """Build phi, phi-tilde and phi-inverse for an embedding.

    Raises:
        InvalidEmbedding: If e is not an embedding
    """
    e.validate()
    source = prime_filters(e.source)
    target = prime_filters(e.target)
    phi = np.empty(len(target), dtype=np.int64)
    for j, g in enumerate(target):
        restricted = restrict_to_source(e, g.members)
        try:
            phi[j] = source.index(restricted)
        except KeyError:
            raise IdentityViolation("restriction of a prime filter is not prime") from None
    return SpectrumMaps(e, source, target, phi)


def _check_extension_precondition(e: AlgebraEmbedding, F: Filter, a: int) -> None:
    if F.algebra is not e.source:
        raise PreconditionViolated("filter does not belong to the embedded algebra")
    if not is_filter(e.source, F.members) or not is_prime(e.source, F.members):
        raise PreconditionViolated(f"{F} is not a prime filter")
    if a in F:
        raise PreconditionViolated(f"{e.source.labels[a]} lies in {F}")


def extend_prime_filter(e: AlgebraEmbedding, F: Filter, a: int) -> Filter:
    """A prime B-filter G with G meet A = F and a not in G.

    Starts from [e(F))_B and adds elements of B in index order whenever the restriction to A
    stays F. The result is maximal among filters restricting to F, hence prime.

    Raises:
        PreconditionViolated: If F is not prime or contains a
    """
    _check_extension_precondition(e, F, a)
    B = e.target
    ups = up_masks(B)
    generator = B.meet_all(e(x) for x in F.elements())
    for y in B.elements:
        candidate = int(B.meet[generator, y])
        if restrict_to_source(e, ups[candidate]) == F.members:
            generator = candidate
    G = Filter(B, ups[generator])
    if not is_prime(B, G.members) or restrict_to_source(e, G.members) != F.members:
        raise IdentityViolation("maximal extension is not a prime filter over F")
    logger.debug("Extended %s to %s", F, G)
    return G


def extend_to_max_excluding(e: AlgebraEmbedding, F: Filter, a: int) -> Filter:
    """A member of max h-bar_B(a) restricting to F, for F in max h-bar_A(a).

    Raises:
        PreconditionViolated: If F is not maximal among prime filters omitting a
    """
    _check_extension_precondition(e, F, a)
    spectrum = prime_filters(e.source)
    if not spectrum.maximal(spectrum.excluding(a)) >> spectrum.index(F.members) & 1:
        raise PreconditionViolated(f"{F} is not maximal among prime filters omitting a")
    B = e.target
    ups = up_masks(B)
    image = e(a)
    generator = extend_prime_filter(e, F, a).generator
    for y in B.elements:
        candidate = int(B.meet[generator, y])
        if not ups[candidate] >> image & 1:
            generator = candidate
    G = Filter(B, ups[generator])
    if not is_prime(B, G.members) or restrict_to_source(e, G.members) != F.members:
        raise IdentityViolation("maximal filter omitting a does not restrict to F")
    return G
