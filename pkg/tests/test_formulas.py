"""Tests for formula parsing, rendering and rewriting."""

import pytest

from src.heytingkit.errors import FormulaSyntaxError
from src.heytingkit.formulas import (
    P0,
    P1,
    P2,
    TAU,
    TOP,
    And,
    Imp,
    Neg,
    One,
    Or,
    Tilde,
    Zero,
    conjunction,
    iff,
    outer_tildes,
    parse_formula,
    replace,
    substitute,
)


@pytest.mark.parametrize(
    "text,expected",
    [
        ("p0", P0),
        ("tau", TAU),
        ("0 | 1", Or(Zero(), One())),
        ("p0 & p1 | p2", Or(And(P0, P1), P2)),
        ("p0 | p1 & p2", Or(P0, And(P1, P2))),
        ("p0 -> p1 -> p2", Imp(P0, Imp(P1, P2))),
        ("(p0 -> p1) -> p2", Imp(Imp(P0, P1), P2)),
        ("-~p0", Neg(Tilde(P0))),
        ("~p0 & p1", And(Tilde(P0), P1)),
        ("p0 <-> p1", iff(P0, P1)),
        ("  p12  ", parse_formula("p12")),
    ],
)
def test_parse(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize(
    "text",
    [
        "~tau -> (p0 | (p0 -> tau))",
        "(p0 -> p1) & (p1 -> p0)",
        "-~p0 | ~(p0 & tau)",
        "0 -> 1",
    ],
)
def test_render_is_canonical(text):
    assert str(parse_formula(text)) == text


@pytest.mark.parametrize(
    "text,position",
    [
        ("p0 $ p1", 3),
        ("p0 &", 4),
        ("", 0),
        ("(p0 | p1", 8),
        ("p0 p1", 3),
        ("q", 0),
    ],
)
def test_parse_errors(text, position):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.position == position
    assert info.value.text == text


def test_measures():
    formula = parse_formula("~~p0 & ~tau")
    assert formula.degree == 3
    assert formula.depth == 3
    assert formula.size == 6
    assert not formula.is_tilde_free
    assert parse_formula("p0 -> p1").is_tilde_free


def test_variables_and_contains():
    formula = parse_formula("(p0 -> tau) & ~p2")
    assert formula.variables() == {0, 2}
    assert formula.uses_tau()
    assert formula.contains(Tilde(P2))
    assert not formula.contains(Tilde(P0))


def test_substitute_is_simultaneous():
    formula = Imp(P0, P1)
    assert substitute(formula, {0: P1, 1: P0}) == Imp(P1, P0)
    assert substitute(TAU, {0: P1}) == TAU


def test_replace():
    assert replace(parse_formula("~~p0"), Tilde(P0), TOP) == Tilde(TOP)
    assert replace(parse_formula("~p0 -> p0"), P0, P1) == parse_formula("~p1 -> p1")
    assert replace(P0, P0, TAU) == TAU


def test_outer_tildes():
    found = list(outer_tildes(parse_formula("~p0 -> ~~p0")))
    assert found == [Tilde(P0), Tilde(Tilde(P0))]
    assert list(outer_tildes(parse_formula("p0 | -p1"))) == []


def test_conjunction():
    assert conjunction([]) == TOP
    assert conjunction([P0]) == P0
    assert conjunction([P0, P1, P2]) == And(P0, And(P1, P2))


def test_formulas_are_hashable():
    assert len({parse_formula("p0 & p1"), And(P0, P1), parse_formula("p1 & p0")}) == 2
