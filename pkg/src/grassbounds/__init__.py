# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Certified lower bounds for the size of triangulations of real Grassmann
manifolds.

This package combines exact arithmetic in the mod-2 cohomology of
:math:`G_k(\\mathbb{R}^n)`, rational Poincaré polynomials, cup-length vertex
bounds and the family of lower bound theorems for simplicial manifolds to
compute how many vertices, faces and facets any triangulation of a
Grassmannian must have.
"""

from __future__ import annotations  # not required for Python >= 3.10

import inspect
import textwrap


class DomainError(ValueError):
    """Raised when inputs fall outside the mathematical domain of an
    operation (e.g. ``k > n``, mismatching dimensions, or orientable-only
    methods requested for a non-orientable Grassmannian)."""


def oneliner(s: str) -> str:
    """Transforms a multiline docstring into a single line of text.

    This method converts the multi-line string into a single line, while also
    dedenting the text.


    Arguments:

        s: The input multiline string


    Returns:

        A single line with all text.
    """
    return inspect.cleandoc(s).replace("\n", " ")


def rewrap(s: str) -> str:
    """Re-wrap a multiline message into a 80-character format.


    Arguments:

        s: The input multiline string


    Returns:

        An 80-column wrapped multiline string
    """
    return "\n".join(textwrap.wrap(oneliner(s), width=80))
