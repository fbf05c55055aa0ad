# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

from __future__ import annotations  # not required for Python >= 3.10

import argparse
import csv
import io
import json
import textwrap

from .. import oneliner
from ..bounds import BoundReport, grassmannian_report
from . import (
    CliConfig,
    add_common_arguments,
    add_ring_arguments,
    execute as _execute,
    method_list,
)


def _cell(value: int | None) -> str:
    return "" if value is None else str(value)


def render_csv(report: BoundReport) -> str:
    """One row per dimension, one column per method, then the sums."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["i"] + [m.value for m in report.methods])
    for i, values in report.rows():
        writer.writerow([i] + [_cell(v) for v in values])
    writer.writerow(["sum"] + [_cell(v) for v in report.totals()])
    return out.getvalue().rstrip("\n")


def render_table(report: BoundReport) -> str:
    """Human-readable report: summary, aligned table, checks and notes."""
    lines = [
        f"G_{report.k}(R^{report.n}): d={report.d}, "
        + ("orientable" if report.orientable else "non-orientable"),
        f"vertices >= {report.delta.value} from {report.delta.witness} "
        f"[{report.delta.source}]",
        f"f0 = {report.f0}",
        "",
    ]

    header = ["i"] + [m.value for m in report.methods]
    body = [[str(i)] + [_cell(v) for v in values] for i, values in report.rows()]
    body.append(["sum"] + [_cell(v) for v in report.totals()])
    widths = [max(len(row[c]) for row in [header] + body) for c in range(len(header))]
    for row in [header] + body:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)))

    if report.cross_checks:
        lines.append("")
        lines.append("cross-checks:")
        for c in report.cross_checks:
            verdict = "ok" if c.match else "MISMATCH"
            lines.append(
                f"  {c.name}: published {c.published_value}, "
                f"computed {c.computed_value} [{verdict}]"
            )

    if report.notes:
        lines.append("")
        lines.append("notes:")
        for note in report.notes:
            lines.append(textwrap.indent(note, "  * ", lambda _: True))

    return "\n".join(lines)


def execute(config: CliConfig) -> str:
    """Computes and renders a :py:class:`grassbounds.bounds.BoundReport`."""
    report = grassmannian_report(
        config.k,
        config.n,
        methods=config.methods or None,
        f0=config.f0_override,
        verify_cohomology=config.verify_cohomology,
        limits=config.limits(),
        cache=config.cache(),
    )

    if config.format == "csv":
        return render_csv(report)
    if config.format == "json":
        return json.dumps(report.to_json(), indent=2)
    return render_table(report)


def _main(args) -> int:
    """Main function, that actually executes the report command."""
    return _execute("report", args)


def add_parser(subparsers) -> argparse.ArgumentParser:
    """Just sets up the parser for this CLI."""
    prog = "grassbounds report"

    parser = subparsers.add_parser(
        prog.split()[1],
        help="Computes vertex and face-number lower bounds for a Grassmannian",
        description="Computes vertex and face-number lower bounds for a Grassmannian",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=textwrap.dedent(
            f"""
            examples:

            1. Full table of bounds for G_3(R^8), in CSV format:

               .. code:: sh

                  {prog} --k 3 --n 8 --format csv

            2. Classical bounds only, for G_3(R^9):

               .. code:: sh

                  {prog} --k 3 --n 9 --method lbt

            3. What-if table with 200 vertices, certifying the witness in
               cohomology and caching the Gröbner basis:

               .. code:: sh

                  {prog} --k 3 --n 8 --f0 200 --verify-cohomology --cache=.cache
            """
        ),
    )

    add_common_arguments(parser)
    add_ring_arguments(parser)

    parser.add_argument(
        "-m",
        "--method",
        dest="methods",
        type=method_list,
        action="extend",
        default=None,
        help=oneliner(
            """
            Bound method: lbt, lbtm, slbtm or hpp (nonnegativity facet bound).
            May be repeated or comma-separated.  By default, runs every method
            valid for the parity of n.
            """
        ),
    )

    parser.add_argument(
        "--f0",
        type=int,
        default=None,
        help="Overrides the vertex count fed to the face-number bounds",
    )

    parser.add_argument(
        "--verify-cohomology",
        action="store_true",
        default=False,
        help="If set, certifies the witness and height of w1 by Gröbner reduction",
    )

    parser.set_defaults(func=_main)

    return parser
