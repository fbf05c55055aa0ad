# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Rational Poincaré polynomials of real Grassmannians and their reduced
Betti numbers."""

from __future__ import annotations  # not required for Python >= 3.10

import dataclasses
import functools
import typing

from sphinx.util import logging

from . import DomainError

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class IntegerPolynomial:
    """Polynomial in one formal variable with exact integer coefficients.

    Coefficients are indexed by degree.  Trailing zeros are removed on
    construction, so the zero polynomial has no coefficients.
    """

    coefficients: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        c = list(self.coefficients)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> IntegerPolynomial:
        return cls((0,) * degree + (coefficient,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial, ``-1`` for zero."""
        return len(self.coefficients) - 1

    def __getitem__(self, degree: int) -> int:
        if 0 <= degree < len(self.coefficients):
            return self.coefficients[degree]
        return 0

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __add__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        size = max(len(self.coefficients), len(other.coefficients))
        return IntegerPolynomial(tuple(self[i] + other[i] for i in range(size)))

    def __mul__(self, other: IntegerPolynomial) -> IntegerPolynomial:
        if not self or not other:
            return IntegerPolynomial()
        acc = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                acc[i + j] += a * b
        return IntegerPolynomial(tuple(acc))

    def shift(self, degree: int) -> IntegerPolynomial:
        """Multiplies by the variable to the power ``degree``."""
        if not self:
            return self
        return IntegerPolynomial((0,) * degree + self.coefficients)

    def substitute_power(self, exponent: int) -> IntegerPolynomial:
        """Evaluates ``p(t ** exponent)``."""
        acc = [0] * (self.degree * exponent + 1) if self else []
        for i, c in enumerate(self.coefficients):
            acc[i * exponent] = c
        return IntegerPolynomial(tuple(acc))

    def evaluate(self, x: int) -> int:
        retval = 0
        for c in reversed(self.coefficients):
            retval = retval * x + c
        return retval

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(degree, coefficient)`` pairs by increasing degree."""
        return [(i, c) for i, c in enumerate(self.coefficients) if c]

    def format(self, variable: str = "t") -> str:
        """Renders the polynomial in the sparse form ``1+t^4+2*t^7``."""
        if not self:
            return "0"
        retval = ""
        for i, c in self.terms():
            if i == 0:
                body = str(abs(c))
            else:
                power = variable if i == 1 else f"{variable}^{i}"
                body = power if abs(c) == 1 else f"{abs(c)}*{power}"
            sign = "-" if c < 0 else ("+" if retval else "")
            retval += sign + body
        return retval

    def __str__(self) -> str:
        return self.format()


@dataclasses.dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers :math:`\\beta_{-1}, \\beta_0, \\ldots, \\beta_d`.

    The entry for :math:`\\beta_i` is stored at index ``i + 1`` of
    ``reduced``.  Use :py:meth:`beta` to access entries by their natural
    index.
    """

    d: int
    reduced: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "reduced", tuple(self.reduced))
        if self.d < 0:
            raise DomainError(f"Dimension must be >= 0, got {self.d}")
        if len(self.reduced) != self.d + 2:
            raise DomainError(
                f"Expected {self.d + 2} reduced Betti numbers "
                f"(beta_-1..beta_{self.d}), got {len(self.reduced)}"
            )
        if self.reduced[0] != 0:
            raise DomainError("beta_-1 must be zero for a nonempty space")
        if any(b < 0 for b in self.reduced):
            raise DomainError(f"Betti numbers must be nonnegative: {self.reduced}")

    @classmethod
    def from_betti(cls, d: int, betti: typing.Sequence[int]) -> BettiVector:
        """Builds the vector from ``(beta_0, ..., beta_d)``."""
        return cls(d, (0, *betti))

    @classmethod
    def zero(cls, d: int) -> BettiVector:
        return cls(d, (0,) * (d + 2))

    def beta(self, i: int) -> int:
        """The reduced Betti number :math:`\\beta_i`, zero outside ``-1..d``."""
        if -1 <= i <= self.d:
            return self.reduced[i + 1]
        return 0


@functools.lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> IntegerPolynomial:
    """Gaussian binomial coefficient :math:`\\left[{n \\atop k}\\right]_q`.

    Computed with the recurrence :math:`\\left[{n \\atop k}\\right] = q^k
    \\left[{n-1 \\atop k}\\right] + \\left[{n-1 \\atop k-1}\\right]`, which
    keeps every intermediate result integral.


    Arguments:

        n: Upper index, ``n >= 0``

        k: Lower index, ``0 <= k <= n``


    Returns:

        A polynomial of degree ``k(n-k)`` with strictly positive coefficients.
    """
    if k < 0 or n < 0 or k > n:
        raise DomainError(f"q-binomial needs 0 <= k <= n, got n={n}, k={k}")
    if k == 0 or k == n:
        return IntegerPolynomial((1,))
    return q_binomial(n - 1, k).shift(k) + q_binomial(n - 1, k - 1)


def poincare_polynomial(k: int, n: int) -> IntegerPolynomial:
    """Rational Poincaré polynomial of :math:`G_k(\\mathbb{R}^n)`.

    With ``j = k // 2`` and ``m = n // 2`` the polynomial is the
    q-binomial :math:`\\left[{m \\atop j}\\right]` at :math:`q = t^4`, except
    for odd ``k`` and even ``n``, where it becomes :math:`(1 + t^{2m-1})
    \\left[{m-1 \\atop j}\\right]` at :math:`q = t^4`.
    """
    if k < 1 or n < k:
        raise DomainError(f"Grassmannian needs 1 <= k <= n, got k={k}, n={n}")
    k = min(k, n - k)
    j, m = k // 2, n // 2

    if k % 2 == 1 and n % 2 == 0:
        factor = IntegerPolynomial((1,)) + IntegerPolynomial.monomial(2 * m - 1)
        return factor * q_binomial(m - 1, j).substitute_power(4)

    return q_binomial(m, j).substitute_power(4)


def reduced_betti(k: int, n: int) -> BettiVector:
    """Reduced rational Betti numbers of :math:`G_k(\\mathbb{R}^n)`.

    The vector covers degrees ``-1..k(n-k)``.  It is zero in degrees ``-1``
    and ``0`` (the manifold is connected) and its top entry is 1 exactly when
    ``n`` is even.
    """
    p = poincare_polynomial(k, n)
    d = k * (n - k)
    reduced = [0, p[0] - 1] + [p[i] for i in range(1, d + 1)]
    logger.debug(f"Reduced Betti numbers for G_{k}(R^{n}): {reduced}")
    return BettiVector(d, tuple(reduced))
