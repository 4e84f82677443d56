"""Tests for filters, prime filters and the spectrum maps of an embedded pair."""

import pytest

from src.heytingkit.errors import PreconditionViolated
from src.heytingkit.filters import (
    Filter,
    excluding_and_max,
    extend_prime_filter,
    extend_to_max_excluding,
    generated_filter,
    is_filter,
    is_prime,
    mask_of,
    members_of,
    pair_spectrum_maps,
    prime_filters,
    special_filters,
)
from src.heytingkit.lattice import boolean, chain, find_embedding


def test_mask_helpers():
    assert mask_of([0, 2]) == 5
    assert members_of(5) == [0, 2]
    assert members_of(0) == []


def test_prime_filters_of_chain(chain3):
    spectrum = prime_filters(chain3)
    assert [F.members for F in spectrum] == [4, 6]
    assert [str(F) for F in spectrum] == ["{1}", "{1, a}"]
    assert spectrum.order[0, 1]
    assert not spectrum.order[1, 0]
    assert spectrum.containing(1) == 0b10
    assert spectrum.excluding(1) == 0b01
    assert spectrum.maximal(spectrum.full) == 0b10


def test_prime_filters_of_boolean(boolean2):
    spectrum = prime_filters(boolean2)
    assert [F.labels() for F in spectrum] == [["1", "a"], ["1", "b"]]
    assert not spectrum.order[0, 1] and not spectrum.order[1, 0]


@pytest.mark.parametrize("n", range(2, 7))
def test_chain_spectrum_size(n):
    assert len(prime_filters(chain(n))) == n - 1


@pytest.mark.parametrize("k", range(1, 4))
def test_boolean_spectrum_size(k):
    assert len(prime_filters(boolean(k))) == k


def test_prime_filters_are_upsets_of_their_order(corpus_algebra):
    spectrum = prime_filters(corpus_algebra)
    for F in spectrum:
        assert is_filter(corpus_algebra, F.members)
        assert is_prime(corpus_algebra, F.members)
        assert F.is_proper


def test_filter_properties(chain3):
    F = generated_filter(chain3, [1])
    assert F.members == 6
    assert F.generator == 1
    assert F.is_proper
    assert 2 in F and 0 not in F
    assert len(F) == 2


def test_generated_filter_can_be_improper(boolean2):
    F = generated_filter(boolean2, [1, 2])
    assert not F.is_proper
    assert len(F) == 4


def test_top_filter_is_not_prime(boolean2):
    top_only = mask_of([boolean2.top])
    assert is_filter(boolean2, top_only)
    assert not is_prime(boolean2, top_only)
    assert not is_filter(boolean2, mask_of([1]))


def test_special_filters(chain3):
    x_a, f_a = special_filters(chain3, 1)
    assert x_a.labels() == ["1"]
    assert f_a.labels() == ["1"]
    x_0, f_0 = special_filters(chain3, 0)
    assert x_0.labels() == ["1", "a"]
    assert f_0.labels() == ["1", "a"]


def test_special_filter_agrees_with_intersection(corpus_algebra):
    """F_a = X_a meet [a)."""
    A = corpus_algebra
    for a in A.elements:
        x_a, f_a = special_filters(A, a)
        up = {x for x in A.elements if A.leq[a, x]}
        assert set(f_a.elements()) == set(x_a.elements()) & up


def test_excluding_and_max(chain3):
    excluded, maximal = excluding_and_max(chain3, 0)
    assert [str(F) for F in excluded] == ["{1}", "{1, a}"]
    assert [str(F) for F in maximal] == ["{1, a}"]


def test_spectrum_maps_of_embedded_chain():
    e = find_embedding(chain(2), chain(3))
    maps = pair_spectrum_maps(e)
    assert maps.phi.tolist() == [0, 0]
    assert maps.is_surjective()
    assert maps.phi_tilde(0b11) == 0b1
    assert maps.phi_inv(0b1) == 0b11


def test_extend_prime_filter():
    e = find_embedding(chain(2), chain(3))
    F = prime_filters(chain(2)).filters[0]
    G = extend_prime_filter(e, Filter(e.source, F.members), 0)
    assert G.members == 6
    H = extend_to_max_excluding(e, Filter(e.source, F.members), 0)
    assert H.members == 6


def test_extend_prime_filter_preconditions():
    e = find_embedding(chain(2), chain(3))
    F = Filter(e.source, 2)
    with pytest.raises(PreconditionViolated, match="lies in"):
        extend_prime_filter(e, F, 1)
    with pytest.raises(PreconditionViolated, match="not a prime filter"):
        extend_prime_filter(e, Filter(e.source, 3), 0)
    with pytest.raises(PreconditionViolated, match="does not belong"):
        extend_prime_filter(e, Filter(chain(2), 2), 0)
