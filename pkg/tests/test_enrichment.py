"""Tests for enrichments, E-pairs, tilde tables, expansions and packing."""

import numpy as np
import pytest

from src.heytingkit.enrichment import (
    EPair,
    TauExpansion,
    TildeTable,
    box_operator,
    canonical_expansion,
    check_packing,
    check_tilde,
    confirm_expansions,
    enrichment,
    enriches,
    epairs,
    pair_from_tilde,
    proper_axiom_tables,
    same_tilde,
    satisfies_proper_axioms,
    tilde_from_pair,
    tilde_roundtrip_holds,
)
from src.heytingkit.errors import IncompatibleTau, InvalidEPair, InvalidTilde
from src.heytingkit.lattice import AlgebraEmbedding, find_embedding, find_isomorphism


def test_enrichments_of_chain(chain3):
    assert [enrichment(chain3, a) for a in chain3.elements] == [1, 2, 2]
    assert box_operator(chain3).tolist() == [1, 2, 2]


def test_bottom_of_boolean_is_enriched_by_top(boolean2):
    assert enrichment(boolean2, boolean2.bot) == boolean2.top


def test_enriches(chain3):
    assert enriches(chain3, 0, 1)
    assert not enriches(chain3, 0, 2)
    assert not enriches(chain3, 1, 0)


def test_every_element_enriched(corpus_algebra):
    """In a finite algebra every a* exists, is dense and is the meet of F_a."""
    A = corpus_algebra
    box = box_operator(A)
    assert box is not None
    assert np.all(A.neg[box] == A.bot)
    assert np.all(A.leq[np.arange(A.size), box])


def test_epair_validation(chain3):
    assert EPair(chain3, 0, 1).validate().is_valid()
    with pytest.raises(InvalidEPair, match=r"\(0, 1\) is not an E-pair"):
        EPair(chain3, 0, 2).validate()
    assert [tuple(p) for p in epairs(chain3)] == [(0, 1), (1, 2), (2, 2)]


def test_tilde_from_pair(chain3):
    tilde = tilde_from_pair(EPair(chain3, 0, 1))
    assert tilde.t.tolist() == [1, 0, 0]
    assert tilde(chain3.top) == 0
    back = pair_from_tilde(tilde)
    assert (back.a, back.a_star) == (0, 1)


def test_tilde_table_is_frozen(chain3):
    tilde = TildeTable(chain3, [1, 0, 0])
    with pytest.raises(ValueError):
        tilde.t[0] = 2


def test_invalid_tilde(chain3):
    report = check_tilde(chain3, [0, 0, 0])
    assert not report.is_tilde
    assert report.failures() == ["endpoints"]
    assert report.properties == {}
    with pytest.raises(InvalidTilde, match="endpoints"):
        TildeTable(chain3, [0, 0, 0]).validate()


def test_negation_is_not_a_tilde_on_a_chain(chain3):
    report = check_tilde(chain3, chain3.neg)
    assert report.definition["contraposition"]
    assert not report.definition["join-bound"]


def test_tilde_properties_hold(small_algebra):
    for pair in epairs(small_algebra):
        report = tilde_from_pair(pair).report()
        assert report.ok, report.failures()


def test_tilde_roundtrip(corpus_algebra):
    assert tilde_roundtrip_holds(corpus_algebra)


def test_same_tilde(chain3):
    first = tilde_from_pair(EPair(chain3, 0, 1))
    second = TildeTable(chain3, [1, 0, 0])
    other = tilde_from_pair(EPair(chain3, 1, 2))
    assert same_tilde(first, second)
    assert not same_tilde(first, other)


def test_expansion_validation(chain3):
    tilde = tilde_from_pair(EPair(chain3, 0, 1))
    assert TauExpansion(chain3, 0, tilde).validate().has_tilde
    assert not TauExpansion(chain3, 1).has_tilde
    with pytest.raises(IncompatibleTau):
        TauExpansion(chain3, 2, tilde).validate()


def test_proper_axiom_tables(small_algebra):
    """The identities single out one table per tau, the tilde of (tau, tau*)."""
    A = small_algebra
    found = list(proper_axiom_tables(A))
    assert [tau for tau, _ in found] == list(A.elements)
    for tau, tilde in found:
        assert same_tilde(tilde, tilde_from_pair(EPair(A, tau, enrichment(A, tau))))
    assert all(confirmed for _, _, confirmed in confirm_expansions(A))


def test_satisfies_proper_axioms(chain3):
    assert satisfies_proper_axioms(chain3, 0, [1, 0, 0])
    assert not satisfies_proper_axioms(chain3, 0, [2, 0, 0])


def test_canonical_expansion_is_packed(small_algebra):
    A = small_algebra
    for a in A.elements:
        built = canonical_expansion(A, a)
        assert check_packing(built.inner, built.outer, built.embedding).packed
        assert find_isomorphism(A, built.outer.algebra) is not None


def test_packing_trichotomy(chain2, chain3):
    e = find_embedding(chain2, chain3)
    outer = TauExpansion(chain3, 0, tilde_from_pair(EPair(chain3, 0, 1)))
    report = check_packing(TauExpansion(chain2, 0), outer, e)
    assert report.packed and report.generated_by_image_and_t0
    assert not report.image_closed and not report.t0_in_image


def test_packing_needs_compatible_tau(chain3):
    identity = AlgebraEmbedding.identity(chain3)
    with pytest.raises(IncompatibleTau, match="needs a tilde"):
        check_packing(TauExpansion(chain3, 0), TauExpansion(chain3, 0), identity)
    outer = TauExpansion(chain3, 0, tilde_from_pair(EPair(chain3, 0, 1)))
    with pytest.raises(IncompatibleTau, match="preserve tau"):
        check_packing(TauExpansion(chain3, 1), outer, identity)
