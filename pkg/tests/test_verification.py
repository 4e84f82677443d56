"""Tests for the invariant suite."""

import unittest
from unittest.mock import patch

import pytest

from src.heytingkit.errors import IdentityViolation
from src.heytingkit.lattice import AlgebraEmbedding, chain, subalgebra_generated
from src.heytingkit.variety import SearchBounds
from src.heytingkit.verification import (
    CheckResult,
    VerificationReport,
    check_delta_identity,
    check_delta_isomorphic,
    check_embedded_pairs,
    check_enrichment,
    check_filters,
    check_pretop,
    check_proper_axioms,
    check_stone,
    check_tilde_laws,
    check_tilde_roundtrip,
    check_tower,
    embedded_pair_identities,
    run_suite,
)
from tests.conftest import CORPUS, SMALL

BOUNDS = SearchBounds(max_vars=1, max_depth=2, random_terms=3, pair_samples=3)

SUITE = [
    "enrichment-unique-dense",
    "special-filters",
    "stone-embedding",
    "delta-identity",
    "delta-isomorphic",
    "tower-stable",
    "pretop-preserved",
    "tilde-laws",
    "tilde-roundtrip",
    "proper-axioms",
    "embedded-pairs",
    "main-theorem",
    "conjecture-canonical",
    "tau-conservativity",
    "logic-inclusion",
]


class TestStructuralChecks(unittest.TestCase):
    """The checks that need no term search, over every fixture."""

    def test_checks_pass_on_corpus(self):
        checks = [
            check_enrichment,
            check_filters,
            check_stone,
            check_delta_identity,
            check_delta_isomorphic,
            check_tower,
            check_pretop,
            check_tilde_laws,
            check_tilde_roundtrip,
            check_proper_axioms,
        ]
        for name in sorted(CORPUS):
            A = CORPUS[name]()
            for check in checks:
                with self.subTest(algebra=name, check=check.__name__):
                    passed, detail = check(A)
                    self.assertTrue(passed, detail)


def test_embedded_pair_identities_on_chain(chain3):
    _, inclusion = subalgebra_generated(chain3, [])
    results = embedded_pair_identities(inclusion, inclusion.source.bot)
    assert set(results) == {
        "phi-surjective",
        "phi-of-h",
        "phi-of-max",
        "phi-of-enrichment",
        "enrichment-inclusion",
    }
    assert all(results.values())


def test_embedded_pair_identities_on_identity(boolean2):
    results = embedded_pair_identities(AlgebraEmbedding.identity(boolean2), 1)
    assert all(results.values())


def test_embedded_pairs(small_algebra):
    passed, detail = check_embedded_pairs(small_algebra)
    assert passed, detail


@pytest.mark.parametrize("name", SMALL)
def test_run_suite(name):
    report = run_suite(CORPUS[name](), BOUNDS, seed=0)
    assert [r.name for r in report.results] == SUITE
    assert report.ok, report.failures()
    summary = report.as_dict()
    assert summary["ok"] is True
    assert len(summary["checks"]) == len(SUITE)


def test_run_suite_records_errors(chain3):
    with patch(
        "src.heytingkit.verification.check_stone",
        side_effect=IdentityViolation("h is not onto"),
    ):
        report = run_suite(chain3, BOUNDS)
    failed = report.failures()
    assert [r.name for r in failed] == ["stone-embedding"]
    assert failed[0].detail == "IdentityViolation: h is not onto"
    assert not report.ok


def test_report_failures():
    report = VerificationReport(chain(2))
    report.results.append(CheckResult("first", True))
    report.results.append(CheckResult("second", False, "broken"))
    assert not report.ok
    assert report.failures() == [CheckResult("second", False, "broken")]


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(set(CORPUS) - set(SMALL)))
def test_run_suite_on_larger_fixtures(name):
    report = run_suite(CORPUS[name](), BOUNDS, seed=1)
    assert report.ok, report.failures()
