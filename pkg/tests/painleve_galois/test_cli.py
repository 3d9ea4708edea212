"""Test the command-line interface (CLI)."""

from __future__ import annotations

from typing import TYPE_CHECKING
from unittest.mock import patch

import pytest

from painleve_galois.cli import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    main,
    run,
    to_overrides,
)
from painleve_galois.common.exceptions import UsageError
from painleve_galois.common.rational_function import RationalFunction
from painleve_galois.dataset.report import parse_report
from painleve_galois.method.painleve_hierarchy import PainleveHierarchy

if TYPE_CHECKING:
    from pathlib import Path


def test_vy(capsys: pytest.CaptureFixture[str]) -> None:
    """`vy` prints the requested polynomial."""
    assert run(["vy", "--n", "4"]) == EXIT_OK
    assert capsys.readouterr().out == "z^6 + 20*z^3 - 80\n"


def test_ratsol_verify(capsys: pytest.CaptureFixture[str]) -> None:
    """`ratsol --verify` confirms the solution."""
    assert run(["ratsol", "--n", "1", "--verify"]) == EXIT_OK
    assert capsys.readouterr().out == "-1/z\nresidual: 0\nbacklund: agrees\n"


def test_nve(capsys: pytest.CaptureFixture[str]) -> None:
    """`nve` prints the potential."""
    assert run(["nve", "--n", "1"]) == EXIT_OK
    assert capsys.readouterr().out == "(z^3 + 6)/z^2\n"


def test_analyze_airy(capsys: pytest.CaptureFixture[str]) -> None:
    """n = 0 reduces to the Airy equation."""
    assert run(["analyze", "--n", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "note: Airy equation" in out
    assert "verdict: SL2" in out


def test_analyze_potential_json(capsys: pytest.CaptureFixture[str]) -> None:
    """A potential given on the command line is reported as JSON."""
    assert run(["analyze", "--r", "2/z^2", "--format", "json"]) == EXIT_OK
    certificate = parse_report(capsys.readouterr().out)
    assert certificate.verdict == "Liouvillian-case-1"


def test_certify(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    """`certify` prints the summary and writes the JSON document."""
    path = tmp_path / "out.json"
    assert run(["certify", "--from", "0", "--to", "2", "--out", str(path)]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == [
        "   n  gamma  verdict",
        "   0      -  SL2",
        "   1      2  SL2",
        "   2      5  SL2",
    ]
    assert path.exists()


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["vy"],
        ["analyze", "--n", "1", "--r", "z"],
        ["analyze", "--r", "z)"],
        ["certify", "--from", "3", "--to", "1"],
        ["--max-n", "2", "vy", "--n", "4"],
    ],
)
def test_errors(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    """Bad input exits with status 1 and a message on stderr."""
    assert run(argv) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("painleve-galois: error:")


def test_internal_inconsistency(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    """A failed identity exits with status 2."""
    monkeypatch.setattr(
        PainleveHierarchy,
        "backlund_chain",
        staticmethod(lambda n: [RationalFunction.constant(1)]),
    )
    assert run(["ratsol", "--n", "2", "--verify"]) == EXIT_INTERNAL
    assert "fails verification" in capsys.readouterr().err


def test_help(capsys: pytest.CaptureFixture[str]) -> None:
    """`--help` exits cleanly."""
    assert run(["--help"]) == EXIT_OK
    assert "certify" in capsys.readouterr().out


def test_parser_raises_usage_error() -> None:
    """The parser reports problems as exceptions."""
    with pytest.raises(UsageError, match="required"):
        build_parser().parse_args(["analyze"])


def test_overrides_quote_strings() -> None:
    """Expressions and paths are passed as quoted strings."""
    args = build_parser().parse_args(
        ["--max-n", "8", "analyze", "--r", "6/z^2 + z", "--format", "json"]
    )
    assert to_overrides(args) == [
        "step=analyze",
        "step.format=json",
        "step.r='6/z^2 + z'",
        "step.session.max_n=8",
    ]


def test_main_exit_code() -> None:
    """`main` exits with the status of the run."""
    with patch("sys.argv", ["painleve-galois", "vy"]), pytest.raises(
        SystemExit
    ) as excinfo:
        main()
    assert excinfo.value.code == EXIT_USAGE
