# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations  # not required for Python >= 3.10

import argparse
import json
import textwrap
import typing

from .. import oneliner
from ..cache import dumps
from ..gf2_ring import Gf2Polynomial, height_w1_formula, make_ring
from . import CliConfig, add_common_arguments, add_ring_arguments, execute as _execute


def execute(config: CliConfig) -> str:
    """Answers the requested questions about the mod-2 cohomology ring.

    Without any question, prints the reduced Gröbner basis in the cache file
    format.
    """
    # parse expressions before building the ring, which may take long
    nf_input = Gf2Polynomial.parse(config.normal_form) if config.normal_form else None
    nz_input = (
        Gf2Polynomial.parse(config.check_nonzero) if config.check_nonzero else None
    )

    ring = make_ring(config.k, config.n, config.limits(), config.cache())

    results: dict[str, typing.Any] = {}
    if config.height_w1:
        results["height_w1"] = ring.height_w1_computed()
        results["height_w1_formula"] = height_w1_formula(ring.k, ring.n)
    if nf_input is not None:
        results["normal_form"] = str(ring.normal_form(nf_input))
    if nz_input is not None:
        results["nonzero"] = ring.is_nonzero_class(nz_input)
    if config.betti:
        results["betti"] = list(ring.gf2_betti())

    if config.format == "json":
        document: dict[str, typing.Any] = {"k": ring.k, "n": ring.n}
        if not results:
            document["groebner_basis"] = [str(g) for g in ring.groebner_basis]
        document.update(results)
        return json.dumps(document, indent=2)

    if not results:
        return dumps((ring.k, ring.n), ring.groebner_basis).rstrip("\n")

    lines = []
    if "height_w1" in results:
        lines.append(str(results["height_w1"]))
    if "normal_form" in results:
        lines.append(results["normal_form"])
    if "nonzero" in results:
        lines.append("nonzero" if results["nonzero"] else "zero")
    if "betti" in results:
        lines.append(",".join(str(b) for b in results["betti"]))
    return "\n".join(lines)


def _main(args) -> int:
    """Main function, that actually executes the cohomology command."""
    return _execute("cohomology", args)


def add_parser(subparsers) -> argparse.ArgumentParser:
    """Just sets up the parser for this CLI."""
    prog = "grassbounds cohomology"

    parser = subparsers.add_parser(
        prog.split()[1],
        help="Computes in the mod-2 cohomology ring of a Grassmannian",
        description=oneliner(
            """
            Computes in the mod-2 cohomology ring of a Grassmannian.
            Polynomials are written like "w1^14*w2^2 + w3".  Without options,
            prints the reduced Gröbner basis of the ring.  Each requested answer
            is printed on its own line, in the order of the options below.
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=textwrap.dedent(
            f"""
            examples:

            1. Checks a cup product is nonzero in G_3(R^9):

               .. code:: sh

                  {prog} --k 3 --n 9 --check-nonzero "w1^14*w2^2"

            2. Height of w1 and mod-2 Betti numbers of G_4(R^8):

               .. code:: sh

                  {prog} --k 4 --n 8 --height-w1 --betti

            3. Normal form of a polynomial in G_2(R^5):

               .. code:: sh

                  {prog} --k 2 --n 5 --normal-form "w1^4"
            """
        ),
    )

    add_common_arguments(parser, formats=("table", "json"))
    add_ring_arguments(parser)

    parser.add_argument(
        "--height-w1",
        action="store_true",
        default=False,
        help="If set, prints the largest m such that w1^m is nonzero",
    )

    parser.add_argument(
        "--normal-form",
        metavar="EXPR",
        default=None,
        help="Prints the normal form of a polynomial modulo the Gröbner basis",
    )

    parser.add_argument(
        "--check-nonzero",
        metavar="EXPR",
        default=None,
        help='Prints "nonzero" or "zero" for the class of a polynomial',
    )

    parser.add_argument(
        "--betti",
        action="store_true",
        default=False,
        help="If set, prints the mod-2 Betti numbers (comma-separated)",
    )

    parser.set_defaults(func=_main)

    return parser
