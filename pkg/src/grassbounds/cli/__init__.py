# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Command-line interface: ``grassbounds <command> [options]``."""

from __future__ import annotations  # not required for Python >= 3.10

import argparse
import dataclasses
import pathlib
import sys
import typing

from sphinx.util import logging

from .. import DomainError, oneliner
from ..bounds import Method
from ..cache import CACHE_ENVIRONMENT_VARIABLE, GroebnerCache, default_cache_directory
from ..gf2_ring import GroebnerLimitError, GroebnerLimits, PolynomialSyntaxError

logger = logging.getLogger(__name__)


EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_GROEBNER_LIMIT = 3


FORMATS = ("table", "csv", "json")


@dataclasses.dataclass
class CliConfig:
    """Validated options of one command invocation."""

    subcommand: str
    k: int | None = None
    n: int | None = None
    d: int | None = None
    methods: list[Method] | None = None
    format: str = "table"
    cache_dir: pathlib.Path | None = None
    groebner_limit: int | None = None
    f0_override: int | None = None
    verify_cohomology: bool = False
    height_w1: bool = False
    normal_form: str | None = None
    check_nonzero: str | None = None
    betti: bool = False
    f: list[int] | None = None
    betti_list: list[int] | None = None
    check: str | None = None

    def limits(self) -> GroebnerLimits:
        if self.groebner_limit is None:
            return GroebnerLimits()
        return GroebnerLimits(
            max_pairs=self.groebner_limit, max_terms=self.groebner_limit
        )

    def cache(self) -> GroebnerCache | None:
        directory = self.cache_dir or default_cache_directory()
        return GroebnerCache(directory) if directory is not None else None


def setup_verbosity(verbose: int) -> None:
    """Sets up logger verbosity.

    Messages go to ``stderr``, so that ``stdout`` only carries results.
    """
    import logging as builtin_logging

    package_logger = builtin_logging.getLogger("sphinx." + __package__.split(".")[0])

    for h in list(package_logger.handlers):
        if getattr(h, "_grassbounds", False):
            package_logger.removeHandler(h)

    handler = builtin_logging.StreamHandler(sys.stderr)
    formatter = builtin_logging.Formatter("[%(levelname)s] %(message)s")
    handler.setFormatter(formatter)
    handler.setLevel(builtin_logging.DEBUG)
    handler._grassbounds = True  # type: ignore[attr-defined]

    package_logger.addHandler(handler)
    if verbose == 0:
        package_logger.setLevel(builtin_logging.ERROR)
    elif verbose == 1:
        package_logger.setLevel(builtin_logging.WARNING)
    elif verbose == 2:
        package_logger.setLevel(builtin_logging.INFO)
    else:
        package_logger.setLevel(builtin_logging.DEBUG)


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors exit with status 1."""

    def error(self, message: str) -> typing.NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def integer_list(text: str) -> list[int]:
    """Parses a comma-separated list of integers, like ``7,21,14``."""
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"`{text}' is not a comma-separated list of integers"
        ) from None


def method_list(text: str) -> list[Method]:
    """Parses a comma-separated list of methods, like ``lbt,hpp``."""
    try:
        return [Method.parse(v) for v in text.split(",") if v.strip()]
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = 0
    if value < 1:
        raise argparse.ArgumentTypeError(f"`{text}' is not a positive integer")
    return value


def add_common_arguments(
    parser: argparse.ArgumentParser, formats: typing.Sequence[str] = FORMATS
) -> None:
    """Options shared by every command."""
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Can be set multiple times to increase console verbosity",
    )

    parser.add_argument(
        "--format",
        choices=formats,
        default="table",
        help="Output format [default: %(default)s]",
    )


def add_ring_arguments(parser: argparse.ArgumentParser) -> None:
    """Options selecting a Grassmannian and its Gröbner machinery."""
    parser.add_argument(
        "--k",
        type=int,
        required=True,
        help="Dimension of the subspaces",
    )

    parser.add_argument(
        "--n",
        type=int,
        required=True,
        help="Dimension of the ambient space",
    )

    parser.add_argument(
        "--cache",
        type=pathlib.Path,
        default=None,
        help=oneliner(
            f"""
            Directory for cached Gröbner bases [default: the value of
            ${CACHE_ENVIRONMENT_VARIABLE}, if set]
            """
        ),
    )

    parser.add_argument(
        "--groebner-limit",
        type=positive_int,
        default=None,
        help=(
            "Maximum number of queued S-pairs, and of terms held by a Gröbner "
            "basis under construction"
        ),
    )


def config_from_args(subcommand: str, args: argparse.Namespace) -> CliConfig:
    """Builds a :py:class:`CliConfig` out of parsed arguments."""
    fields = {f.name for f in dataclasses.fields(CliConfig)}
    values = {k: v for k, v in vars(args).items() if k in fields}
    if "cache" in vars(args):
        values["cache_dir"] = args.cache
    if "f0" in vars(args):
        values["f0_override"] = args.f0
    return CliConfig(subcommand=subcommand, **values)


def run(config: CliConfig) -> tuple[int, str]:
    """Executes a command.


    Returns:

        The exit status and the text to emit: the rendered result on
        success, an error message otherwise.
    """
    from . import cohomology, facevec, poincare, report

    commands: dict[str, typing.Callable[[CliConfig], str]] = {
        "report": report.execute,
        "cohomology": cohomology.execute,
        "poincare": poincare.execute,
        "facevec": facevec.execute,
    }

    try:
        return EXIT_OK, commands[config.subcommand](config)
    except PolynomialSyntaxError as e:
        return EXIT_USAGE, f"error: {e}"
    except DomainError as e:
        return EXIT_DOMAIN, f"error: {e}"
    except GroebnerLimitError as e:
        return EXIT_GROEBNER_LIMIT, f"error: complexity limit exceeded: {e}"


def execute(subcommand: str, args: argparse.Namespace) -> int:
    """Runs a parsed command, printing its output."""
    setup_verbosity(args.verbose)
    config = config_from_args(subcommand, args)
    logger.debug(f"Running with {config}")
    status, text = run(config)
    if status == EXIT_OK:
        print(text)
    else:
        print(text, file=sys.stderr)
    return status


def make_parser() -> argparse.ArgumentParser:
    """Creates the main parser."""
    parser = ArgumentParser(
        prog="grassbounds",
        description="Lower bounds for triangulations of real Grassmannians.",
    )

    # Show the help message when no argument is passed
    parser.set_defaults(func=lambda _args: parser.print_help())

    subparsers = parser.add_subparsers(help="commands")

    from . import report

    report.add_parser(subparsers)

    from . import cohomology

    cohomology.add_parser(subparsers)

    from . import poincare

    poincare.add_parser(subparsers)

    from . import facevec

    facevec.add_parser(subparsers)

    return parser


def main(argv: list[str] | None = None) -> None:
    # parse and execute
    parser = make_parser()
    args = parser.parse_args(argv)
    status = args.func(args)
    if status:
        sys.exit(status)
