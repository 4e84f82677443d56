"""Test cases for CLI functionality."""

import json
from unittest.mock import patch

import pytest

from src.heytingkit import cli, commands
from src.heytingkit.errors import BudgetExceeded
from src.heytingkit.formulas import parse_formula
from src.heytingkit.io import load_derivation
from tests.conftest import data_path

SEARCH = ["--vars", "1", "--depth", "2"]


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_no_arguments_prints_help(capsys):
    code, out = run(capsys)
    assert code == 0
    assert "usage: heytingkit" in out


def test_unknown_command(capsys):
    assert cli.main(["frobnicate"]) == 3


def test_prime_filters(capsys):
    code, out = run(capsys, "prime-filters", "fixture:chain3", "-q")
    assert code == 0
    assert out.splitlines()[0] == "algebra: 3 elements, 2 prime filters"
    assert "F0  generator 1  {1}  inside {F1}" in out.splitlines()
    assert not out.startswith("# heytingkit")


def test_banner(capsys):
    _, out = run(capsys, "prime-filters", "fixture:chain2")
    assert out.startswith("# heytingkit 0.1.0 prime-filters\n")


def test_enrich_json(capsys):
    code, out = run(capsys, "enrich", "fixture:chain3", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "enrich"
    assert payload["enrichment"] == {"0": "a", "a": "1", "1": "1"}
    assert payload["box"] == ["a", "1", "1"]
    assert [t["tau"] for t in payload["tildes"]] == ["0", "a", "1"]
    assert payload["tildes"][0]["table"] == ["a", "0", "0"]


def test_enrich_chosen_tau(capsys):
    code, out = run(capsys, "enrich", "fixture:chain3", "--tau", "a", "-q")
    assert code == 0
    assert "tilde (a, 1): 1 1 a" in out.splitlines()
    assert "tilde (0, a)" not in out


def test_delta(capsys):
    code, out = run(capsys, "delta", "fixture:chain3", "-q")
    assert code == 0
    assert out.splitlines()[-1] == "delta[A_X]: 3 elements, isomorphic to A: True"


def test_delta_unknown_element(capsys):
    assert cli.main(["delta", "fixture:chain3", "--elements", "z"]) == 3


def test_verify(capsys):
    code, out = run(capsys, "verify", "fixture:chain3", *SEARCH, "-q")
    assert code == 0
    assert out.splitlines()[-1] == "0 of 15 checks failed"


def test_compare_finds_identity(capsys):
    code, out = run(capsys, "compare-varieties", "fixture:chain2", "fixture:chain3", *SEARCH)
    assert code == 1
    assert "separating identity: " in out
    assert "holds in the first algebra only" in out


def test_compare_same_variety(capsys):
    code, out = run(capsys, "compare-varieties", "fixture:boolean2", "fixture:chain2", "-q")
    assert code == 0
    assert out.strip().endswith("decided by variety")
    code, out = run(
        capsys, "compare-varieties", "fixture:boolean2", "fixture:chain2", "--exact", "-q"
    )
    assert code == 0
    assert "same variety" in out


def test_compare_rejects_bad_limit(capsys):
    args = ["compare-varieties", "fixture:chain2", "fixture:chain3", "--limit", "0"]
    assert cli.main(args) == 3


def test_compare_samples_random_terms_with_seed(capsys):
    args = ["compare-varieties", "fixture:chain2", "fixture:chain3", "--vars", "1"]
    args += ["--depth", "0", "--seed", "5", "-q"]
    with patch(
        "src.heytingkit.commands.compare.random_term",
        return_value=parse_formula("p0 | -p0"),
    ) as sampler:
        code, out = run(capsys, *args)
    assert code == 1
    assert sampler.called
    assert "holds in the first algebra only" in out
    assert out.strip().endswith("found by random sampling (seed 5)")


def test_compare_seed_is_reproducible(capsys):
    args = ["compare-varieties", "fixture:chain2", "fixture:chain3", "--vars", "1"]
    args += ["--depth", "0", "--seed", "5", "--json"]
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second
    payload = json.loads(first[1])
    assert payload["seed"] == 5
    assert payload["classes"] == 3


def test_compare_budget_exit_code(capsys):
    with patch(
        "src.heytingkit.commands.compare.variety_contains",
        side_effect=BudgetExceeded("free algebra elements", 10, 5),
    ):
        args = ["compare-varieties", "fixture:chain2", "fixture:chain3", "--exact"]
        assert cli.main(args) == 2


def test_check(capsys):
    code, out = run(capsys, "check", data_path("ex1.drv"), "-q")
    assert code == 0
    assert out.strip() == "valid in kmtau: 7 steps, rank (1,1)"
    code, out = run(capsys, "check", data_path("ex1.drv"), "--calculus", "inttau", "-q")
    assert code == 1
    assert "step 1: IllegalSubstitutionLanguage: substitution uses ~" in out


def test_check_json(capsys):
    code, out = run(capsys, "check", data_path("broken.drv"), "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["valid"] is False
    assert [d["step"] for d in payload["diagnostics"]] == [2, 3]
    assert payload["diagnostics"][1]["kind"] == "BadMP"


def test_check_premise_flag(capsys):
    path = data_path("premise.drv")
    assert cli.main(["check", path, "-q"]) == 0
    assert cli.main(["check", path, "--premise", "tau", "-q"]) == 1


def test_check_input_errors(capsys, tmp_path):
    assert cli.main(["check", str(tmp_path / "missing.drv")]) == 3
    assert cli.main(["check", data_path("ex1.drv"), "--calculus", "s4"]) == 3
    bad = tmp_path / "bad.drv"
    bad.write_text("1. p0 -> ; axiom a1\n")
    assert cli.main(["check", str(bad)]) == 3


def test_purify(capsys):
    code, out = run(capsys, "purify", data_path("ex1.drv"), "-q")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "ranks: (1,1) (0,0)"
    assert lines[-1].startswith(f"{len(lines) - 2}. tau -> (p0 | (p0 -> tau)) ; ")


def test_purify_to_file(capsys, tmp_path):
    target = tmp_path / "out" / "pure.drv"
    code, out = run(capsys, "purify", data_path("ex1.drv"), "--out", str(target), "-q")
    assert code == 0
    written = load_derivation(str(target))
    assert written.is_tilde_free()
    assert "steps out" in out


def test_purify_invalid_derivation(capsys):
    assert cli.main(["purify", data_path("broken.drv")]) == 1


def test_debug_flag(capsys):
    with patch("src.heytingkit.cli.enable_debug") as debug:
        assert cli.main(["--debug", "enrich", "fixture:chain2", "-q"]) == 0
        debug.assert_called_once_with()
    with patch("src.heytingkit.cli.enable_debug") as debug:
        cli.main(["enrich", "fixture:chain2", "-q"])
        debug.assert_not_called()


def test_unexpected_failure(capsys):
    with patch.object(commands.EnrichCommand, "_run", side_effect=RuntimeError("boom")):
        assert cli.main(["enrich", "fixture:chain2"]) == 1


@pytest.mark.parametrize("command", ["prime-filters", "delta", "enrich", "verify"])
def test_missing_algebra_file(capsys, tmp_path, command):
    assert cli.main([command, str(tmp_path / "none.alg")]) == 3


@pytest.mark.parametrize("kind", ["chain0", "nosuch", "product(chain2)"])
def test_bad_fixture_is_an_input_error(capsys, kind):
    assert cli.main(["prime-filters", f"fixture:{kind}"]) == 3


@pytest.mark.parametrize("command", ["prime-filters", "check"])
def test_undecodable_file_is_an_input_error(capsys, tmp_path, command):
    path = tmp_path / "latin1.txt"
    path.write_bytes(b"elements: 0 \xe9 1\n")
    assert cli.main([command, str(path)]) == 3
