# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations  # not required for Python >= 3.10

import argparse
import json
import textwrap
import typing

from .. import DomainError, oneliner
from ..face_vectors import (
    FaceVector,
    check_dehn_sommerville,
    f_to_h,
    g_tilde,
    h_double_prime,
    h_to_g,
    is_m_sequence,
)
from ..poincare import BettiVector
from . import CliConfig, add_common_arguments, execute as _execute, integer_list


def analyse(
    f: typing.Sequence[int], d: int | None, betti: typing.Sequence[int] | None
) -> dict[str, typing.Any]:
    """Runs the transform family on a face vector.


    Arguments:

        f: Face numbers :math:`f_0..f_d`

        d: Dimension; inferred from ``f`` when ``None``

        betti: Betti numbers :math:`\\beta_0..\\beta_d`; all zero when ``None``


    Returns:

        The sequences ``f``, ``h``, ``h_pp`` (full range), ``g_pp`` and
        ``g_tilde`` (prefix ``0..floor((d+1)/2)``), and the verdicts
        ``dehn_sommerville`` and ``m_sequence`` (on the :math:`g''` prefix).
    """
    if d is None:
        d = len(f) - 1
    fv = FaceVector(d, tuple(f))
    if betti is None:
        b = BettiVector.zero(d)
    else:
        if len(betti) != d + 1:
            raise DomainError(
                f"Expected {d + 1} Betti numbers (beta_0..beta_{d}), got {len(betti)}"
            )
        b = BettiVector.from_betti(d, betti)

    h = f_to_h(fv)
    hpp = h_double_prime(h, b)
    gpp = h_to_g(hpp)
    gt = g_tilde(gpp, b)

    return {
        "f": list(fv.f),
        "h": list(h.values),
        "h_pp": list(hpp.values),
        "g_pp": list(gpp.prefix()),
        "g_tilde": list(gt.prefix()),
        "dehn_sommerville": check_dehn_sommerville(hpp),
        "m_sequence": is_m_sequence(gpp.prefix()),
    }


def execute(config: CliConfig) -> str:
    """Renders the analysis of a face vector."""
    if not config.f:
        raise DomainError("An f-vector is required (--f)")
    result = analyse(config.f, config.d, config.betti_list)

    if config.check is not None:
        key = "dehn_sommerville" if config.check == "ds" else "m_sequence"
        return "true" if result[key] else "false"

    if config.format == "json":
        return json.dumps(
            {
                k: [str(x) for x in v] if isinstance(v, list) else v
                for k, v in result.items()
            },
            indent=2,
        )

    lines = []
    for key, value in result.items():
        if isinstance(value, list):
            lines.append(f"{key}: {','.join(str(x) for x in value)}")
        else:
            lines.append(f"{key}: {'true' if value else 'false'}")
    return "\n".join(lines)


def _main(args) -> int:
    """Main function, that actually executes the facevec command."""
    return _execute("facevec", args)


def add_parser(subparsers) -> argparse.ArgumentParser:
    """Just sets up the parser for this CLI."""
    prog = "grassbounds facevec"

    parser = subparsers.add_parser(
        prog.split()[1],
        help="Transforms the face vector of a simplicial manifold",
        description=oneliner(
            """
            Computes the h-, h''-, g''- and g~-sequences of a face vector and
            checks Dehn-Sommerville relations and the M-sequence property.
            """
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=textwrap.dedent(
            f"""
            examples:

            1. The 7-vertex torus, with its Betti numbers:

               .. code:: sh

                  {prog} --f 7,21,14 --betti-list 0,2,1

            2. Dehn-Sommerville check only:

               .. code:: sh

                  {prog} --f 7,21,14 --betti-list 0,2,1 --check ds
            """
        ),
    )

    add_common_arguments(parser, formats=("table", "json"))

    parser.add_argument(
        "--d",
        type=int,
        default=None,
        help="Dimension of the complex [default: length of the f-vector - 1]",
    )

    parser.add_argument(
        "--f",
        type=integer_list,
        required=True,
        help="Comma-separated face numbers f_0..f_d",
    )

    parser.add_argument(
        "--betti-list",
        type=integer_list,
        default=None,
        help="Comma-separated reduced Betti numbers beta_0..beta_d [default: zeros]",
    )

    parser.add_argument(
        "--check",
        choices=("ds", "msequence"),
        default=None,
        help="Prints only the verdict of one check (true or false)",
    )

    parser.set_defaults(func=_main)

    return parser
