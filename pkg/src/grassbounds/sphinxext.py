# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Sphinx extension rendering Grassmannian bound tables in documentation.

Add ``grassbounds.sphinxext`` to the ``extensions`` of your ``conf.py`` and
write:

.. code:: rst

   .. grassmann-bounds::
      :k: 3
      :n: 8
      :methods: lbt, lbtm, slbtm

The ``:verify:`` flag certifies the vertex bound witness in cohomology, using
the Gröbner basis cache set by ``grassbounds_cache``, if any.
"""

from __future__ import annotations  # not required for Python >= 3.10

import importlib.metadata
import pathlib
import typing

from docutils import nodes
from docutils.parsers.rst import directives
from docutils.statemachine import StringList
from sphinx.application import Sphinx
from sphinx.util import logging
from sphinx.util.docutils import SphinxDirective

from . import DomainError
from .bounds import BoundReport, Method, grassmannian_report
from .cache import GroebnerCache
from .gf2_ring import GroebnerLimitError

logger = logging.getLogger(__name__)


def _list_table(report: BoundReport, caption: str) -> list[str]:
    """reStructuredText ``list-table`` with one row per dimension."""
    lines = [
        f".. list-table:: {caption}",
        "   :header-rows: 1",
        "",
        "   * - i",
    ]
    lines += [f"     - {m.value}" for m in report.methods]
    rows = [(str(i), values) for i, values in report.rows()]
    rows.append(("sum", report.totals()))
    for label, values in rows:
        lines.append(f"   * - {label}")
        lines += [f"     - {'' if v is None else v}" for v in values]
    return lines


class GrassmannBoundsDirective(SphinxDirective):
    """Renders the table of lower bounds for :math:`G_k(\\mathbb{R}^n)`."""

    has_content = False
    option_spec = {
        "k": directives.positive_int,
        "n": directives.positive_int,
        "methods": directives.unchanged,
        "f0": directives.positive_int,
        "verify": directives.flag,
    }

    def run(self) -> list[nodes.Node]:
        config = self.env.config
        if "k" not in self.options or "n" not in self.options:
            raise self.error("grassmann-bounds needs both :k: and :n: options")
        k, n = self.options["k"], self.options["n"]

        explicit = self.options.get("methods")
        names = explicit or ",".join(config.grassbounds_methods)
        cache = None
        if config.grassbounds_cache:
            path = pathlib.Path(config.grassbounds_cache)
            if not path.is_absolute():
                path = pathlib.Path(self.env.srcdir) / path
            cache = GroebnerCache(path)

        try:
            methods = [Method.parse(m) for m in names.split(",") if m.strip()] or None
            if methods and not explicit and n % 2:
                # configured defaults skip methods undefined for odd n
                methods = [m for m in methods if not m.needs_orientable] or None
            report = grassmannian_report(
                k,
                n,
                methods=methods,
                f0=self.options.get("f0"),
                verify_cohomology="verify" in self.options,
                cache=cache,
            )
        except (DomainError, GroebnerLimitError) as e:
            raise self.error(f"grassmann-bounds: {e}")

        logger.info(f"Rendering bounds for G_{k}(R^{n})")

        caption = (
            f"Lower bounds for G_{k}(R^{n}) with at least "
            f"{report.delta.value} vertices"
        )
        container = nodes.container(classes=["grassmann-bounds"])
        self.state.nested_parse(
            StringList(_list_table(report, caption), source=self.get_source_info()[0]),
            self.content_offset,
            container,
        )
        return [container]


def setup(app: Sphinx) -> dict[str, typing.Any]:
    """Sphinx extension configuration entry-point."""
    # Default methods when a directive sets no :methods: option.  An empty
    # list means every method valid for the parity of n.
    app.add_config_value("grassbounds_methods", [], "html")

    # Directory where Gröbner bases are cached.  A relative path is taken
    # w.r.t. the documentation source directory.
    app.add_config_value("grassbounds_cache", None, "html")

    app.add_directive("grassmann-bounds", GrassmannBoundsDirective)

    return {
        "version": importlib.metadata.version(__package__),
        "parallel_read_safe": True,
    }
