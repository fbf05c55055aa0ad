# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Face numbers of simplicial manifolds and their transforms.

Implements the ``f -> h -> g`` transforms, the Betti-corrected
:math:`h''`, :math:`g''` and :math:`\\tilde{g}` sequences, Dehn-Sommerville
checks and Macaulay's M-sequence test.  All arithmetic is on exact
(signed) Python integers.
"""

from __future__ import annotations  # not required for Python >= 3.10

import dataclasses
import enum
import math
import typing

from sphinx.util import logging

from . import DomainError
from .poincare import BettiVector

logger = logging.getLogger(__name__)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient that is zero for ``b < 0`` or ``b > a``.

    Raises:

        DomainError: if ``a < 0``
    """
    if a < 0:
        raise DomainError(f"Binomial coefficient C({a}, {b}) has a negative top")
    if b < 0 or b > a:
        return 0
    return math.comb(a, b)


class HTag(enum.Enum):
    """What an :py:class:`HVector` holds."""

    PLAIN = "plain"
    DOUBLE_PRIME = "double_prime"
    G = "g"
    G_DOUBLE_PRIME = "g_double_prime"
    G_TILDE = "g_tilde"
    F_DOUBLE_PRIME = "f_double_prime"


@dataclasses.dataclass(frozen=True)
class FaceVector:
    """Face numbers :math:`(f_0, \\ldots, f_d)` of a ``d``-dimensional
    simplicial complex."""

    d: int
    f: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(self.f))
        if self.d < 0:
            raise DomainError(f"Dimension must be >= 0, got {self.d}")
        if len(self.f) != self.d + 1:
            raise DomainError(
                f"A {self.d}-dimensional face vector has {self.d + 1} entries, "
                f"got {len(self.f)}"
            )
        if any(x < 0 for x in self.f):
            raise DomainError(f"Face numbers must be nonnegative: {self.f}")

    def face(self, i: int) -> int:
        """:math:`f_i`, with :math:`f_{-1} = 1` and zero outside ``-1..d``."""
        if i == -1:
            return 1
        if 0 <= i <= self.d:
            return self.f[i]
        return 0


@dataclasses.dataclass(frozen=True)
class HVector:
    """A sequence indexed ``0..d+1`` attached to a ``d``-dimensional complex.

    The same shape holds h-, g-, :math:`h''`-, :math:`g''`-,
    :math:`\\tilde{g}`- and :math:`f''`-sequences; ``tag`` tells which one.
    For :math:`f''` the entry at index ``i`` is :math:`f''_{i-1}`.
    """

    d: int
    values: tuple[int, ...]
    tag: HTag = HTag.PLAIN

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.d < 0:
            raise DomainError(f"Dimension must be >= 0, got {self.d}")
        if len(self.values) != self.d + 2:
            raise DomainError(
                f"Expected {self.d + 2} entries (0..{self.d + 1}), "
                f"got {len(self.values)}"
            )

    def __getitem__(self, j: int) -> int:
        if 0 <= j <= self.d + 1:
            return self.values[j]
        return 0

    def prefix(self) -> tuple[int, ...]:
        """Entries ``0..floor((d+1)/2)``, the range where g-type sequences
        are constrained."""
        return self.values[: (self.d + 1) // 2 + 1]


def _expect(hv: HVector, *tags: HTag) -> None:
    if hv.tag not in tags:
        names = ", ".join(t.value for t in tags)
        raise DomainError(f"Expected a sequence tagged {names}, got {hv.tag.value}")


def _expect_same_dimension(hv: HVector, b: BettiVector) -> None:
    if hv.d != b.d:
        raise DomainError(
            f"Dimension mismatch: sequence has d={hv.d}, Betti vector has d={b.d}"
        )


def f_to_h(fv: FaceVector) -> HVector:
    """Computes :math:`h_j = \\sum_{i=0}^{j} (-1)^{j-i}
    \\binom{d+1-i}{d+1-j} f_{i-1}` for ``j = 0..d+1``."""
    d = fv.d
    return HVector(
        d,
        tuple(
            sum(
                (-1) ** (j - i) * binomial(d + 1 - i, d + 1 - j) * fv.face(i - 1)
                for i in range(j + 1)
            )
            for j in range(d + 2)
        ),
    )


def _invert(hv: HVector, offset: int) -> list[int]:
    """:math:`\\sum_{j=0}^{i} \\binom{d+o-j}{d+o-i} h_j` for ``i = 0..d+1``."""
    d = hv.d
    return [
        sum(binomial(d + offset - j, d + offset - i) * hv[j] for j in range(i + 1))
        for i in range(d + 2)
    ]


def h_to_f(hv: HVector) -> FaceVector:
    """Recovers the face vector from a plain h-vector.

    Computes :math:`f_{i-1} = \\sum_{j=0}^{i} \\binom{d+1-j}{d+1-i} h_j`.
    """
    _expect(hv, HTag.PLAIN)
    return FaceVector(hv.d, tuple(_invert(hv, 1)[1:]))


def h_to_g(hv: HVector) -> HVector:
    """Successive differences :math:`g_j = h_j - h_{j-1}` (with
    :math:`g_0 = h_0`) over the full range ``0..d+1``.

    A plain h-vector yields a g-vector and an :math:`h''`-vector yields a
    :math:`g''`-vector.
    """
    _expect(hv, HTag.PLAIN, HTag.DOUBLE_PRIME)
    tag = HTag.G if hv.tag is HTag.PLAIN else HTag.G_DOUBLE_PRIME
    return HVector(hv.d, tuple(hv[j] - hv[j - 1] for j in range(hv.d + 2)), tag)


def g_to_f(gv: HVector) -> FaceVector:
    """Recovers the face vector from a full-range g-vector, as
    :math:`f_{i-1} = \\sum_{j=0}^{i} \\binom{d+2-j}{d+2-i} g_j`."""
    _expect(gv, HTag.G)
    return FaceVector(gv.d, tuple(_invert(gv, 2)[1:]))


def h_double_prime(hv: HVector, b: BettiVector) -> HVector:
    """Betti-corrected h-numbers of a manifold.

    For ``0 <= j <= d``:

    .. math::

       h''_j = h_j - \\binom{d+1}{j} \\sum_{i=0}^{j} (-1)^{j-i} \\beta_{i-1}

    and the top entry is :math:`h''_{d+1} = h_{d+1} - \\sum_{i=0}^{d}
    (-1)^{d+1-i} \\beta_{i-1}`, so :math:`\\beta_d` never enters it.


    Arguments:

        hv: A plain h-vector

        b: Reduced Betti numbers of the same dimension


    Returns:

        The :math:`h''`-vector.
    """
    _expect(hv, HTag.PLAIN)
    _expect_same_dimension(hv, b)
    d = hv.d

    def _alternating(j: int) -> int:
        return sum((-1) ** (j - i) * b.beta(i - 1) for i in range(min(j, d) + 1))

    values = [hv[j] - binomial(d + 1, j) * _alternating(j) for j in range(d + 1)]
    values.append(hv[d + 1] - _alternating(d + 1))
    return HVector(d, tuple(values), HTag.DOUBLE_PRIME)


def g_tilde(gpp: HVector, b: BettiVector) -> HVector:
    """:math:`\\tilde{g}_j = g''_j - \\binom{d+1}{j-1} \\beta_{j-1}`, over the
    full range ``0..d+1``."""
    _expect(gpp, HTag.G_DOUBLE_PRIME)
    _expect_same_dimension(gpp, b)
    d = gpp.d
    return HVector(
        d,
        tuple(gpp[j] - binomial(d + 1, j - 1) * b.beta(j - 1) for j in range(d + 2)),
        HTag.G_TILDE,
    )


def f_double_prime(hpp: HVector) -> HVector:
    """Modified face numbers obtained by inverting :math:`h''` like a plain
    h-vector.  Index ``i`` holds :math:`f''_{i-1}`."""
    _expect(hpp, HTag.DOUBLE_PRIME)
    return HVector(hpp.d, tuple(_invert(hpp, 1)), HTag.F_DOUBLE_PRIME)


def check_dehn_sommerville(hpp: HVector) -> bool:
    """Tells if :math:`h''_j = h''_{d+1-j}` for every ``j``."""
    _expect(hpp, HTag.DOUBLE_PRIME, HTag.PLAIN)
    d = hpp.d
    return all(hpp[j] == hpp[d + 1 - j] for j in range(d + 2))


def _macaulay_top(a: int, i: int) -> int:
    """Largest ``x`` with ``C(x, i) <= a`` (requires ``a >= 1``)."""
    lo, hi = i, 2 * i + 1
    while math.comb(hi, i) <= a:
        lo, hi = hi, 2 * hi
    # C(lo, i) <= a < C(hi, i)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if math.comb(mid, i) <= a:
            lo = mid
        else:
            hi = mid
    return lo


def macaulay_representation(a: int, j: int) -> list[tuple[int, int]]:
    """The ``j``-th Macaulay representation of ``a``.

    Returns the pairs ``(a_i, i)`` with :math:`a = \\sum \\binom{a_i}{i}` and
    :math:`a_j > a_{j-1} > \\ldots > a_l \\ge l \\ge 1`, found greedily.
    """
    if a < 0 or j < 1:
        raise DomainError(f"Macaulay representation needs a >= 0, j >= 1 ({a}, {j})")
    retval = []
    i = j
    while a > 0:
        top = _macaulay_top(a, i)
        retval.append((top, i))
        a -= math.comb(top, i)
        i -= 1
    return retval


def macaulay_bound(a: int, j: int) -> int:
    """Macaulay's upper bound :math:`a^{\\langle j \\rangle}` for the entry
    following ``a`` in an M-sequence.

    Each term :math:`\\binom{a_i}{i}` of the ``j``-th Macaulay representation
    becomes :math:`\\binom{a_i+1}{i+1}`.
    """
    return sum(math.comb(top + 1, i + 1) for top, i in macaulay_representation(a, j))


def is_m_sequence(seq: typing.Sequence[int]) -> bool:
    """Tells if ``seq`` is an M-sequence.

    The sequence must start with 1, be nonnegative, and respect
    ``seq[j+1] <= macaulay_bound(seq[j], j)`` for every ``j >= 1``.
    """
    if not seq or seq[0] != 1 or any(x < 0 for x in seq):
        return False
    for j in range(1, len(seq) - 1):
        if seq[j + 1] > macaulay_bound(seq[j], j):
            logger.debug(
                f"Entry {j + 1} ({seq[j + 1]}) exceeds the Macaulay bound "
                f"of {seq[j]} at {j}"
            )
            return False
    return True
