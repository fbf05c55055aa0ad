# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations  # not required for Python >= 3.10

import argparse
import json
import textwrap

from ..poincare import poincare_polynomial
from . import CliConfig, add_common_arguments, execute as _execute


def execute(config: CliConfig) -> str:
    """Renders the rational Poincaré polynomial of a Grassmannian."""
    p = poincare_polynomial(config.k, config.n)
    if config.format == "json":
        return json.dumps([[i, c] for i, c in p.terms()])
    if config.format == "csv":
        return "\n".join(["degree,coefficient"] + [f"{i},{c}" for i, c in p.terms()])
    return p.format("t")


def _main(args) -> int:
    """Main function, that actually executes the poincare command."""
    return _execute("poincare", args)


def add_parser(subparsers) -> argparse.ArgumentParser:
    """Just sets up the parser for this CLI."""
    prog = "grassbounds poincare"

    parser = subparsers.add_parser(
        prog.split()[1],
        help="Prints the rational Poincaré polynomial of a Grassmannian",
        description="Prints the rational Poincaré polynomial of a Grassmannian",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=textwrap.dedent(
            f"""
            examples:

            1. Poincaré polynomial of G_3(R^8):

               .. code:: sh

                  {prog} --k 3 --n 8

            2. The same, as [degree, coefficient] pairs:

               .. code:: sh

                  {prog} --k 3 --n 8 --format json
            """
        ),
    )

    add_common_arguments(parser)

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

    parser.set_defaults(func=_main)

    return parser
