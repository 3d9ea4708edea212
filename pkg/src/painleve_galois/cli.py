"""CLI for painleve_galois."""

from __future__ import annotations

import argparse
import sys
from typing import TYPE_CHECKING, NoReturn

from hydra import compose, initialize
from hydra.errors import HydraException
from hydra.utils import instantiate
from omegaconf.errors import OmegaConfBaseException

from painleve_galois.common.exceptions import (
    InternalInconsistencyError,
    PainleveGaloisError,
    UsageError,
)
from painleve_galois.config import register_config

if TYPE_CHECKING:
    from collections.abc import Sequence

register_config()

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising instead of exiting on bad input."""

    def error(self: _ArgumentParser, message: str) -> NoReturn:
        """Raise the problem as a usage error.

        Args:
            message (str): argparse message

        Raises:
            UsageError: always
        """
        raise UsageError(f"{self.prog}: {message}")


def _quoted(value: str) -> str:
    return "'" + value.replace("'", "\\'") + "'"


def build_parser() -> argparse.ArgumentParser:
    """Command-line grammar.

    Returns:
        argparse.ArgumentParser: parser with one subcommand per step
    """
    parser = _ArgumentParser(
        prog="painleve-galois",
        description="Exact Galois analysis of the normal variational equations of Painleve II along its rational solutions.",
    )
    parser.add_argument("--verbose", action="store_true", help="log progress to stderr")
    parser.add_argument("--max-n", type=int, help="deepest Vorobev-Yablonski index")
    parser.add_argument(
        "--enumeration-limit", type=int, help="largest exhaustive enumeration"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    vy = commands.add_parser("vy", help="print Q_n")
    vy.add_argument("--n", type=int, required=True)

    ratsol = commands.add_parser("ratsol", help="print w(z, n)")
    ratsol.add_argument("--n", type=int, required=True)
    ratsol.add_argument("--verify", action="store_true")

    nve = commands.add_parser("nve", help="print the normal variational potential r(z)")
    nve.add_argument("--n", type=int, required=True)

    analyze = commands.add_parser("analyze", help="print a Galois certificate")
    target = analyze.add_mutually_exclusive_group(required=True)
    target.add_argument("--n", type=int)
    target.add_argument("--r", type=str)
    analyze.add_argument("--format", choices=("text", "json"), default="text")

    certify = commands.add_parser("certify", help="certify a range of parameters")
    certify.add_argument("--from", dest="from_n", type=int, required=True)
    certify.add_argument("--to", dest="to_n", type=int, required=True)
    certify.add_argument("--out", type=str)
    certify.add_argument("--parallel", action="store_true")
    certify.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def to_overrides(args: argparse.Namespace) -> list[str]:
    """Hydra overrides equivalent to parsed arguments.

    Args:
        args (argparse.Namespace): parsed command line

    Returns:
        list[str]: overrides selecting the step and setting its fields

    Examples:
        >>> to_overrides(build_parser().parse_args(["--verbose", "vy", "--n", "4"]))
        ['step=vy', 'step.n=4', 'step.session.log_level=INFO']
    """
    overrides = [f"step={args.command}"]
    for key in ("n", "verify", "from_n", "to_n", "parallel", "format"):
        value = getattr(args, key, None)
        if value is not None:
            overrides.append(f"step.{key}={str(value).lower()}")
    for key in ("r", "out"):
        value = getattr(args, key, None)
        if value is not None:
            overrides.append(f"step.{key}={_quoted(value)}")
    if args.verbose:
        overrides.append("step.session.log_level=INFO")
    if args.max_n is not None:
        overrides.append(f"step.session.max_n={args.max_n}")
    if args.enumeration_limit is not None:
        overrides.append(f"step.session.enumeration_limit={args.enumeration_limit}")
    return overrides


def _cause_chain(exc: BaseException) -> list[BaseException]:
    chain = [exc]
    while chain[-1].__cause__ is not None:
        chain.append(chain[-1].__cause__)
    return chain


def run(argv: Sequence[str]) -> int:
    """Parse the command line, compose the step configuration and run it.

    Args:
        argv (Sequence[str]): arguments without the program name

    Returns:
        int: 0 on success, 1 for usage, parse or domain errors, 2 when an internal identity fails
    """
    try:
        args = build_parser().parse_args(list(argv))
        with initialize(version_base="1.3", config_path=None):
            cfg = compose(config_name="config", overrides=to_overrides(args))
        instantiate(cfg.step)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_USAGE
    except (
        PainleveGaloisError,
        HydraException,
        OmegaConfBaseException,
        ValueError,
    ) as exc:
        chain = _cause_chain(exc)
        reported = next(
            (e for e in chain if not isinstance(e, HydraException)), chain[-1]
        )
        print(f"painleve-galois: error: {reported}", file=sys.stderr)  # noqa: T201
        if any(isinstance(e, InternalInconsistencyError) for e in chain):
            return EXIT_INTERNAL
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    """Painleve-galois CLI."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
