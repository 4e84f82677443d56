"""Tests for algebra and derivation files."""

import os

import pytest

from src.heytingkit.errors import FormatError, NotAPartialOrder, NotDistributive
from src.heytingkit.io import (
    format_algebra,
    load_algebra,
    load_derivation,
    parse_algebra,
    save_derivation,
)
from src.heytingkit.lattice import boolean, chain
from tests.conftest import data_path


def test_load_algebra_files():
    A = load_algebra(data_path("chain3.alg"))
    assert A.labels == ("0", "a", "1")
    assert A.same_tables(chain(3))
    assert load_algebra(data_path("chain2.alg")).same_tables(chain(2))


def test_load_fixture():
    assert load_algebra("fixture:boolean2").same_tables(boolean(2))
    with pytest.raises(FormatError, match="unknown fixture"):
        load_algebra("fixture:lattice7")


def test_load_fixture_with_bad_size():
    with pytest.raises(FormatError, match="bad fixture 'chain0'"):
        load_algebra("fixture:chain0")


def test_undecodable_files_are_format_errors(tmp_path):
    path = tmp_path / "latin1.alg"
    path.write_bytes(b"elements: 0 \xe9 1\n")
    with pytest.raises(FormatError, match="not UTF-8"):
        load_algebra(str(path))
    with pytest.raises(FormatError, match="not UTF-8"):
        load_derivation(str(path))


def test_load_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_algebra(str(tmp_path / "missing.alg"))


def test_rejected_orders():
    with pytest.raises(NotAPartialOrder):
        load_algebra(data_path("cyclic.alg"))
    with pytest.raises(NotDistributive):
        load_algebra(data_path("m3.alg"))


def test_bad_key_reports_line():
    with pytest.raises(FormatError, match="unknown key 'geq'") as info:
        load_algebra(data_path("bad_key.alg"))
    assert info.value.line == 2


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("leq: 0 1", 1, "leq before elements"),
        ("elements: 0 1\nleq: 0", 2, "leq takes two elements, got 1"),
        ("elements: 0 1\nleq: 0 2", 2, "undeclared element '2'"),
        ("elements: 0 1\n\nelements: 0 1", 3, "already declared on line 1"),
        ("elements:", 1, "no elements declared"),
        ("elements 0 1", 1, "expected 'elements:' or 'leq:'"),
        ("# only a comment\n", None, "missing 'elements:' line"),
    ],
)
def test_parse_errors(text, line, message):
    with pytest.raises(FormatError, match=message) as info:
        parse_algebra(text)
    assert info.value.line == line


def test_format_algebra():
    assert format_algebra(chain(3)) == "elements: 0 a 1\nleq: 0 a\nleq: a 1\n"
    square = boolean(2)
    assert parse_algebra(format_algebra(square)).same_tables(square)


def test_save_derivation(tmp_path):
    D = load_derivation(data_path("ex1.drv"))
    path = tmp_path / "nested" / "out.drv"
    save_derivation(D, str(path))
    assert os.path.exists(path)
    assert load_derivation(str(path)) == D
