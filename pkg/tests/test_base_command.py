"""Tests for the base command classes."""

import io
import json
from unittest.mock import MagicMock

import pytest

from src.heytingkit import __version__
from src.heytingkit.commands.base import (
    EXIT_FINDING,
    EXIT_OK,
    AlgebraCommand,
    HeytingCommand,
)
from src.heytingkit.errors import CommandError, InputError, PreconditionViolated


@pytest.fixture
def stream():
    return io.StringIO()


def test_command_init(stream):
    cmd = HeytingCommand(stream=stream)
    assert not cmd.json_output
    assert not cmd.quiet
    assert cmd._total_items == 0
    assert cmd._current_item == 0
    assert not cmd._validated


def test_run_without_validation(stream):
    cmd = HeytingCommand(stream=stream)
    assert cmd.run() == EXIT_OK
    assert cmd._validated
    assert stream.getvalue() == f"# heytingkit {__version__} command\n"


def test_run_wraps_unexpected_errors(stream):
    cmd = HeytingCommand(stream=stream)
    cmd._run = MagicMock(side_effect=Exception("Test error"))
    with pytest.raises(CommandError, match="Test error"):
        cmd.run()
    assert stream.getvalue() == ""


def test_run_passes_domain_errors(stream):
    cmd = HeytingCommand(stream=stream)
    cmd._run = MagicMock(side_effect=PreconditionViolated("empty derivation"))
    with pytest.raises(PreconditionViolated):
        cmd.run()
    cmd._run = MagicMock(side_effect=FileNotFoundError("x.alg"))
    with pytest.raises(OSError):
        cmd.run()


def test_text_report(stream):
    cmd = HeytingCommand(quiet=True, stream=stream)

    def body():
        cmd.emit("first")
        cmd.emit()
        cmd.emit("second")
        return EXIT_FINDING

    cmd._run = body
    assert cmd.run() == EXIT_FINDING
    assert stream.getvalue() == "first\n\nsecond\n"


def test_json_report(stream):
    cmd = HeytingCommand(json_output=True, stream=stream)

    def body():
        cmd.emit("ignored in json")
        cmd.payload = {"size": 3}
        return EXIT_OK

    cmd._run = body
    cmd.run()
    assert json.loads(stream.getvalue()) == {"command": "command", "size": 3}


def test_progress_is_silent_when_quiet(stream):
    cmd = HeytingCommand(quiet=True, stream=stream)
    assert not cmd.show_progress
    assert list(cmd.progress([1, 2, 3], "checks")) == [1, 2, 3]


def test_progress_tracking(stream):
    cmd = HeytingCommand(stream=stream)
    cmd.set_total_items(10)
    assert cmd._total_items == 10
    assert cmd._current_item == 0
    cmd.update_progress()
    cmd.update_progress()
    assert cmd._current_item == 2
    cmd.update_progress(7)
    assert cmd._current_item == 7


def test_algebra_command_requires_algebra(stream):
    with pytest.raises(InputError, match="algebra file or fixture is required"):
        AlgebraCommand("", stream=stream).validate()


def test_algebra_command_loads_fixture(stream):
    cmd = AlgebraCommand("fixture:chain3", stream=stream)
    cmd.validate()
    A = cmd.load()
    assert A.size == 3
    assert cmd.element(A, "a") == 1
    with pytest.raises(InputError, match="unknown element 'z'"):
        cmd.element(A, "z")
