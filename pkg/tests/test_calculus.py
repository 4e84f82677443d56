"""Tests for the calculi, the derivation format and ranks."""

import pytest

from src.heytingkit.calculus import (
    INT_AXIOMS,
    PROPER_AXIOMS,
    ROOT,
    Calculus,
    Derivation,
    DiagnosticKind,
    IntAxiom,
    ModusPonens,
    Rank,
    Step,
    check_derivation,
    format_derivation,
    is_pure,
    maximal_occurrences,
    parse_derivation,
    rank,
    rank_of,
    unsound_steps,
    validate_semantics,
)
from src.heytingkit.enrichment import TauExpansion, epairs, tilde_from_pair
from src.heytingkit.errors import FormatError, MissingInterpretation
from src.heytingkit.formulas import P0, P1, TAU, Imp, Or, Tilde, parse_formula
from src.heytingkit.io import load_derivation
from src.heytingkit.variety import holds_in
from tests.conftest import CORPUS, SMALL, data_path


@pytest.fixture
def ex1():
    return load_derivation(data_path("ex1.drv"))


def expansions(name):
    A = CORPUS[name]()
    return [TauExpansion(A, pair.a, tilde_from_pair(pair)) for pair in epairs(A)]


def test_axiom_tables():
    assert sorted(INT_AXIOMS, key=lambda name: int(name[1:])) == [f"a{i}" for i in range(1, 11)]
    assert str(PROPER_AXIOMS["b"]) == "(~tau -> tau) -> tau"
    assert str(PROPER_AXIOMS["d"]) == "tau -> ~tau"


@pytest.mark.parametrize("name", SMALL)
def test_axioms_hold_in_expansions(name):
    for expansion in expansions(name):
        for schema in list(INT_AXIOMS.values()) + list(PROPER_AXIOMS.values()):
            assert holds_in(expansion, schema), (expansion.tau, str(schema))


def test_example_is_valid(ex1):
    assert len(ex1) == 7
    assert ex1.premise is None
    assert ex1.conclusion == parse_formula("tau -> (p0 | (p0 -> tau))")
    assert check_derivation(ex1, Calculus.KM_TAU).valid
    assert rank(ex1) == Rank(1, 1)
    assert not is_pure(ex1)
    assert not ex1.is_tilde_free()


def test_example_is_not_in_int_tau(ex1):
    verdict = check_derivation(ex1, Calculus.INT_TAU)
    assert not verdict
    kinds = {d.kind for d in verdict.diagnostics}
    assert kinds == {DiagnosticKind.ILLEGAL_SUBSTITUTION_LANGUAGE}
    assert str(verdict.diagnostics[0]) == "step 1: IllegalSubstitutionLanguage: substitution uses ~"


def test_proper_axioms_outside_kmtau(ex1):
    verdict = check_derivation(ex1, Calculus.INT_TAU_TILDE)
    messages = [d.message for d in verdict.diagnostics]
    assert messages == ["proper axiom d outside kmtau", "proper axiom c outside kmtau"]


def test_broken_derivation():
    verdict = check_derivation(load_derivation(data_path("broken.drv")), Calculus.KM_TAU)
    assert [str(d) for d in verdict.diagnostics] == [
        "step 2: BadAxiomInstance: formula is not the stated axiom a1 instance",
        "step 3: BadMP: step 2 is not step 1 -> this formula",
    ]


def test_tilde_substitution_in_int_tau():
    D = load_derivation(data_path("tilde_in_int.drv"))
    assert check_derivation(D, Calculus.KM_TAU).valid
    assert check_derivation(D, Calculus.INT_TAU_TILDE).valid
    verdict = check_derivation(D, Calculus.INT_TAU)
    assert verdict.diagnostics[0].kind is DiagnosticKind.ILLEGAL_SUBSTITUTION_LANGUAGE


def test_premise_derivation():
    D = load_derivation(data_path("premise.drv"))
    assert D.premise == parse_formula("(p0 | (p0 -> tau)) -> tau")
    assert D.conclusion == TAU
    assert check_derivation(D, Calculus.KM_TAU).valid
    bare = Derivation(D.steps)
    messages = [d.message for d in check_derivation(bare, Calculus.KM_TAU).diagnostics]
    assert messages == ["no premise was given"]
    other = check_derivation(D, Calculus.KM_TAU, premise=TAU)
    assert [d.index for d in other.diagnostics] == [1]


@pytest.mark.parametrize(
    "step,message",
    [
        (Step(P0, IntAxiom("a11")), "unknown axiom a11"),
        (
            Step(parse_formula("(p0 & p1) -> p0"), IntAxiom("a4", ((0, P0), (1, P1), (2, P0)))),
            "axiom a4 has no variable p2",
        ),
        (Step(P0, ModusPonens(0, 0)), "mp must cite earlier steps"),
    ],
)
def test_step_diagnostics(step, message):
    verdict = check_derivation(Derivation((step,)), Calculus.KM_TAU)
    assert [d.message for d in verdict.diagnostics] == [message]


def test_format_roundtrip(ex1):
    text = format_derivation(ex1)
    assert text.splitlines()[1] == "2. ~tau -> (p0 | (p0 -> tau)) ; proper c p0 := p0"
    assert parse_derivation(text) == ex1
    premised = load_derivation(data_path("premise.drv"))
    assert format_derivation(premised).startswith("premise: (p0 | (p0 -> tau)) -> tau\n")


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("1. p0 ; mp 1", 1, "mp needs two step numbers"),
        ("2. p0 -> p0 ; axiom a1", 1, "expected step 1"),
        ("1. p0 -> ; axiom a1", 1, "expected an atom"),
        ("# nothing\n\n1. p0 ; guess", 3, "unknown justification"),
        ("1. p0 ; axiom a1 p0 = p1", 1, "malformed substitution"),
        ("1. p0 ; axiom a1 p0 := p1, p0 := p1", 1, "p0 bound twice"),
        ("1. p0 ; axiom a1\npremise: p0", 2, "premise must be declared once"),
        ("p0 -> p0", 1, "expected '<k>. <formula> ; <justification>'"),
    ],
)
def test_parse_errors(text, line, message):
    with pytest.raises(FormatError, match=message) as info:
        parse_derivation(text)
    assert info.value.line == line


def test_parse_requires_steps():
    with pytest.raises(FormatError, match="no steps"):
        parse_derivation("premise: tau\n")


def test_rank_order():
    assert Rank(1, 3).precedes(Rank(2, 1))
    assert Rank(1, 1).precedes(Rank(1, 2))
    assert Rank(1, 2).precedes(Rank(1, 2))
    assert not Rank(2, 1).precedes(Rank(1, 5))
    assert str(Rank(2, 1)) == "(2,1)"


def test_rank_of_formulas():
    formulas = [parse_formula("~~p0 -> ~p1"), parse_formula("~tau | ~p1")]
    assert maximal_occurrences(formulas) == [
        parse_formula("~~p0"),
        parse_formula("~p1"),
        Tilde(TAU),
    ]
    assert rank_of(formulas) == Rank(2, 1)
    assert rank_of([parse_formula("p0 -> p0")]) == ROOT


def test_is_pure():
    step = Step(Imp(Tilde(P0), Tilde(P0)), IntAxiom("a1"))
    assert is_pure(Derivation((step,)))
    noisy = Step(Imp(Tilde(P1), Tilde(P1)), IntAxiom("a1"))
    assert not is_pure(Derivation((noisy, step)))
    assert is_pure(Derivation((noisy, step), premise=Or(Tilde(P1), P0)))


@pytest.mark.parametrize("name", SMALL)
def test_valid_derivations_are_sound(ex1, name):
    single = load_derivation(data_path("tilde_in_int.drv"))
    for expansion in expansions(name):
        assert unsound_steps(ex1, expansion) == []
        assert unsound_steps(single, expansion) == []


def test_semantics_need_a_tilde(chain3):
    with pytest.raises(MissingInterpretation):
        validate_semantics(TAU, TauExpansion(chain3, 0))
