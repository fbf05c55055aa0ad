# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Exact arithmetic in the mod-2 cohomology ring of a real Grassmannian.

The ring :math:`H^*(G_k(\\mathbb{R}^n);\\mathbb{Z}_2)` is presented as the
polynomial ring :math:`\\mathbb{Z}_2[w_1,\\ldots,w_k]` (with :math:`\\deg w_i =
i`) modulo the relations obtained from :math:`w\\cdot\\overline{w}=1`.  A
reduced Gröbner basis under a fixed weighted reverse-lexicographic order gives
unique normal forms, which decide whether a class vanishes.
"""

from __future__ import annotations  # not required for Python >= 3.10

import dataclasses
import functools
import heapq
import itertools
import math
import re
import typing

from sphinx.util import logging

from . import DomainError, rewrap

if typing.TYPE_CHECKING:
    from .cache import GroebnerCache

logger = logging.getLogger(__name__)


ORDER_TAG = "wdegrevlex"
"""Tag of the (only) monomial order used in this module."""

MAX_MEMOISED_MONOMIALS = 1 << 16
"""Size at which a ring forgets which leading monomial divides what."""


class GroebnerLimitError(RuntimeError):
    """Raised when a ring construction exceeds the configured complexity
    limits.  This signals a pair ``(k, n)`` beyond desk scale, not a bug."""


class PolynomialSyntaxError(ValueError):
    """Raised when a polynomial text does not follow the grammar."""


class Monomial(tuple):
    """A monomial :math:`w_1^{e_1}\\cdots w_k^{e_k}` over GF(2).

    Stored as the exponent vector ``(e_1, ..., e_k)`` with trailing zeros
    removed, so the same monomial has a single representation whatever the
    number of variables of the surrounding ring.  The unit is the empty
    tuple.
    """

    __slots__ = ()

    def __new__(cls, exponents: typing.Iterable[int] = ()) -> Monomial:
        e = list(exponents)
        if any(x < 0 for x in e):
            raise ValueError(f"Negative exponent in {e}")
        while e and e[-1] == 0:
            e.pop()
        return super().__new__(cls, e)

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> Monomial:
        """Returns ``w_index ** exponent``."""
        if index < 1:
            raise PolynomialSyntaxError(f"Variable index must be >= 1, got {index}")
        return cls((0,) * (index - 1) + (exponent,))

    @classmethod
    def from_exponents(cls, mapping: typing.Mapping[int, int]) -> Monomial:
        """Builds a monomial from a ``{variable index: exponent}`` mapping."""
        if not mapping:
            return cls()
        if min(mapping) < 1:
            raise PolynomialSyntaxError(f"Variable indexes must be >= 1: {mapping}")
        top = max(mapping)
        return cls(mapping.get(i, 0) for i in range(1, top + 1))

    @property
    def exponents(self) -> dict[int, int]:
        """Mapping from variable index to (positive) exponent."""
        return {i + 1: e for i, e in enumerate(self) if e}

    @property
    def weighted_degree(self) -> int:
        """Cohomological degree :math:`\\sum_i i\\cdot e_i`."""
        return sum((i + 1) * e for i, e in enumerate(self))

    @property
    def nvars(self) -> int:
        """Largest variable index with a nonzero exponent (0 for the unit)."""
        return len(self)

    def __mul__(self, other: Monomial) -> Monomial:  # type: ignore[override]
        return Monomial(
            a + b for a, b in itertools.zip_longest(self, other, fillvalue=0)
        )

    def divides(self, other: Monomial) -> bool:
        """Tells if this monomial divides ``other``."""
        return len(self) <= len(other) and all(a <= b for a, b in zip(self, other))

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(
            max(a, b) for a, b in itertools.zip_longest(self, other, fillvalue=0)
        )

    def quotient(self, divisor: Monomial) -> Monomial:
        """Returns ``self / divisor``, which must be exact."""
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(
            a - b for a, b in itertools.zip_longest(self, divisor, fillvalue=0)
        )

    def __str__(self) -> str:
        if not self:
            return "1"
        return "*".join(
            f"w{i}" if e == 1 else f"w{i}^{e}" for i, e in self.exponents.items()
        )

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


def order_key(m: Monomial) -> tuple:
    """Sort key for the weighted reverse-lexicographic order.

    Monomials compare first by weighted degree.  Ties are broken
    reverse-lexicographically with :math:`w_1` ranked highest: the larger
    monomial is the one with the smaller exponent at the last variable where
    both differ.  Larger keys mean larger monomials.
    """
    return (m.weighted_degree, -len(m), tuple(-e for e in reversed(m)))


def _heap_key(m: Monomial) -> tuple:
    # smaller key means larger monomial, for use with heapq (a min-heap)
    return (-m.weighted_degree, len(m), tuple(reversed(m)))


class Gf2Polynomial:
    """A sparse polynomial over GF(2) in the weighted variables
    :math:`w_1, w_2, \\ldots`.

    The polynomial is a set of monomials (presence means coefficient 1).
    Building it from an iterable with repeated monomials cancels them in
    pairs, as addition in GF(2) does.


    Arguments:

        terms: Monomials to add up.
    """

    __slots__ = ("terms",)

    terms: frozenset[Monomial]

    def __init__(self, terms: typing.Iterable[Monomial] = ()) -> None:
        acc: set[Monomial] = set()
        for t in terms:
            if not isinstance(t, Monomial):
                t = Monomial(t)
            if t in acc:
                acc.remove(t)
            else:
                acc.add(t)
        self.terms = frozenset(acc)

    @classmethod
    def _from_set(cls, terms: typing.AbstractSet[Monomial]) -> Gf2Polynomial:
        """Wraps a set that is known to be free of duplicates."""
        retval = cls.__new__(cls)
        retval.terms = frozenset(terms)
        return retval

    @classmethod
    def zero(cls) -> Gf2Polynomial:
        return cls._from_set(frozenset())

    @classmethod
    def one(cls) -> Gf2Polynomial:
        return cls._from_set({Monomial()})

    @classmethod
    def variable(cls, index: int, exponent: int = 1) -> Gf2Polynomial:
        return cls._from_set({Monomial.variable(index, exponent)})

    @classmethod
    def parse(cls, text: str) -> Gf2Polynomial:
        """Parses a polynomial such as ``"w1^14*w2^2 + w3"``.

        The grammar is::

            polynomial := monomial ('+' monomial)*
            monomial   := term ('*' term)* | '1'
            term       := 'w' INDEX ('^' EXPONENT)?

        Whitespace is ignored.  Repeated factors multiply and repeated
        monomials cancel (GF(2) addition).


        Raises:

            PolynomialSyntaxError: if the text does not follow the grammar
        """
        compact = "".join(text.split())
        if not compact:
            raise PolynomialSyntaxError("Empty polynomial expression")

        terms = []
        for chunk in compact.split("+"):
            if chunk == "1":
                terms.append(Monomial())
                continue
            if not chunk:
                raise PolynomialSyntaxError(f"Empty monomial in `{text}'")
            m = Monomial()
            for factor in chunk.split("*"):
                match = _TERM_RE.fullmatch(factor)
                if match is None:
                    raise PolynomialSyntaxError(
                        f"Cannot parse factor `{factor}' in `{text}'"
                    )
                exponent = int(match.group(2)) if match.group(2) else 1
                m = m * Monomial.variable(int(match.group(1)), exponent)
            terms.append(m)

        return cls(terms)

    def __add__(self, other: Gf2Polynomial) -> Gf2Polynomial:
        return Gf2Polynomial._from_set(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: Gf2Polynomial | Monomial) -> Gf2Polynomial:
        if isinstance(other, Monomial):
            # multiplication by a monomial is injective: nothing cancels
            return Gf2Polynomial._from_set({t * other for t in self.terms})

        acc: set[Monomial] = set()
        for a in self.terms:
            for b in other.terms:
                p = a * b
                if p in acc:
                    acc.remove(p)
                else:
                    acc.add(p)
        return Gf2Polynomial._from_set(acc)

    def square(self) -> Gf2Polynomial:
        # Frobenius: squaring is additive in characteristic 2
        return Gf2Polynomial._from_set({t * t for t in self.terms})

    def __pow__(self, exponent: int) -> Gf2Polynomial:
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = Gf2Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base.square()
            exponent >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf2Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> typing.Iterator[Monomial]:
        """Iterates over terms from the largest to the smallest monomial."""
        return iter(sorted(self.terms, key=order_key, reverse=True))

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("The zero polynomial has no leading monomial")
        return max(self.terms, key=order_key)

    @property
    def nvars(self) -> int:
        """Largest variable index in use."""
        return max((len(t) for t in self.terms), default=0)

    def degrees(self) -> set[int]:
        return {t.weighted_degree for t in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, degree: int) -> Gf2Polynomial:
        return Gf2Polynomial._from_set(
            {t for t in self.terms if t.weighted_degree == degree}
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(str(t) for t in self)

    def __repr__(self) -> str:
        return f"Gf2Polynomial({str(self)!r})"


_TERM_RE = re.compile(r"w(\d+)(?:\^(\d+))?")


def _variables(k: int) -> list[Gf2Polynomial]:
    """``[1, w_1, ..., w_k]``, so that index ``i`` holds :math:`w_i`."""
    return [Gf2Polynomial.one()] + [Gf2Polynomial.variable(i) for i in range(1, k + 1)]


def dual_classes(k: int, n: int) -> tuple[Gf2Polynomial, ...]:
    """Computes the dual Stiefel-Whitney classes in terms of :math:`w_i`.

    The classes satisfy :math:`\\overline{w}_m = \\sum_{i=1}^{\\min(k,m)} w_i
    \\overline{w}_{m-i}` with :math:`\\overline{w}_0 = 1`, which is the
    degree-:math:`m` part of :math:`w\\cdot\\overline{w} = 1` over GF(2).


    Arguments:

        k: Number of Stiefel-Whitney classes :math:`w_1..w_k`

        n: Largest dual class to compute


    Returns:

        The tuple :math:`(\\overline{w}_1, \\ldots, \\overline{w}_n)`.
    """
    if k < 1 or n < k:
        raise DomainError(f"Dual classes need 1 <= k <= n, got k={k}, n={n}")

    w = _variables(k)
    bar = [Gf2Polynomial.one()]
    for m in range(1, n + 1):
        acc = Gf2Polynomial.zero()
        for i in range(1, min(k, m) + 1):
            acc = acc + w[i] * bar[m - i]
        bar.append(acc)
    return tuple(bar[1:])


def ideal_generators(k: int, n: int) -> tuple[Gf2Polynomial, ...]:
    """Relations of the Borel presentation, for ``k <= n - k``.

    These are the components of degrees :math:`n-k+1, \\ldots, n` of
    :math:`w\\cdot\\overline{w}` once the dual classes above
    :math:`\\overline{w}_{n-k}` are set to zero.  Each one equals
    :math:`\\overline{w}_j` modulo the previous ones, hence they generate the
    same ideal.
    """
    bar = (Gf2Polynomial.one(),) + dual_classes(k, n - k)
    w = _variables(k)
    retval = []
    for m in range(n - k + 1, n + 1):
        acc = Gf2Polynomial.zero()
        for i in range(m - (n - k), k + 1):
            acc = acc + w[i] * bar[m - i]
        retval.append(acc)
    return tuple(retval)


@dataclasses.dataclass(frozen=True)
class GroebnerLimits:
    """Complexity limits for ring construction.

    The defaults admit every pair with ``k <= 4`` and ``n <= 12``.


    Attributes:

        max_pairs: Maximum length of the S-pair queue

        max_terms: Maximum number of terms held by the basis under
            construction (or by a polynomial being reduced)

        max_dimension: Largest manifold dimension :math:`k(n-k)` accepted
    """

    max_pairs: int = 100_000
    max_terms: int = 1_000_000
    max_dimension: int = 32

    def __post_init__(self) -> None:
        for f in dataclasses.fields(self):
            if getattr(self, f.name) < 1:
                raise DomainError(f"GroebnerLimits.{f.name} must be positive")


def _find_reducer(
    m: Monomial, leads: list[Monomial], hits: dict[Monomial, int]
) -> int | None:
    """Index of the first leading monomial dividing ``m``, if any.

    Only hits are memoised, which stays valid while ``leads`` only grows.
    """
    idx = hits.get(m)
    if idx is not None:
        return idx
    for i, lead in enumerate(leads):
        if lead.divides(m):
            hits[m] = i
            return i
    return None


def _reduce(
    p: Gf2Polynomial,
    basis: typing.Sequence[Gf2Polynomial],
    leads: list[Monomial],
    hits: dict[Monomial, int],
    max_terms: int | None = None,
) -> Gf2Polynomial:
    """Full reduction of ``p`` by ``basis``: returns the remainder, in which
    no monomial is divisible by a leading monomial of the basis."""
    remainder: set[Monomial] = set()
    current = set(p.terms)
    heap = [(_heap_key(t), t) for t in current]
    heapq.heapify(heap)

    while heap:
        _, m = heapq.heappop(heap)
        if m not in current:
            continue  # cancelled after being queued
        current.remove(m)

        idx = _find_reducer(m, leads, hits)
        if idx is None:
            remainder.add(m)
            continue

        q = m.quotient(leads[idx])
        for t in basis[idx].terms:
            if t == leads[idx]:
                continue
            u = t * q
            if u in current:
                current.remove(u)
            else:
                current.add(u)
                heapq.heappush(heap, (_heap_key(u), u))

        if max_terms is not None and len(current) > max_terms:
            raise GroebnerLimitError(
                f"Reduction exceeded {max_terms} intermediate terms"
            )

    return Gf2Polynomial._from_set(remainder)


def _spoly(f: Gf2Polynomial, lf: Monomial, g: Gf2Polynomial, lg: Monomial):
    lcm = lf.lcm(lg)
    return f * lcm.quotient(lf) + g * lcm.quotient(lg)


def _update(
    leads: list[Monomial], pairs: set[tuple[int, int]], lf: Monomial
) -> set[tuple[int, int]]:
    """Gebauer-Möller update of the pair set when a polynomial with leading
    monomial ``lf`` joins the basis (at index ``len(leads)``)."""
    new = len(leads)

    kept = set()
    for i, j in pairs:
        lij = leads[i].lcm(leads[j])
        if (
            lf.divides(lij)
            and lij != leads[i].lcm(lf)
            and lij != leads[j].lcm(lf)
        ):
            continue
        kept.add((i, j))

    by_lcm: dict[Monomial, list[int]] = {}
    for i, lead in enumerate(leads):
        by_lcm.setdefault(lead.lcm(lf), []).append(i)

    minimal: list[Monomial] = []
    for lcm in sorted(by_lcm, key=order_key):
        if all(not m.divides(lcm) for m in minimal):
            minimal.append(lcm)

    for lcm in minimal:
        indexes = by_lcm[lcm]
        # Buchberger's product criterion: coprime leads need no pair
        if any(leads[i] * lf == lcm for i in indexes):
            continue
        kept.add((min(indexes), new))

    return kept


def _interreduce(
    basis: list[Gf2Polynomial], leads: list[Monomial]
) -> list[Gf2Polynomial]:
    """Turns a Gröbner basis into the reduced one, sorted by leading
    monomial."""
    order = sorted(range(len(basis)), key=lambda i: order_key(leads[i]))
    kept: list[int] = []
    for i in order:
        if not any(leads[j].divides(leads[i]) for j in kept):
            kept.append(i)

    minimal = [basis[i] for i in kept]
    minimal_leads = [leads[i] for i in kept]

    retval = []
    for idx, (g, lead) in enumerate(zip(minimal, minimal_leads)):
        others = minimal[:idx] + minimal[idx + 1 :]
        other_leads = minimal_leads[:idx] + minimal_leads[idx + 1 :]
        tail = Gf2Polynomial._from_set(g.terms - {lead})
        r = _reduce(tail, others, other_leads, {})
        retval.append(Gf2Polynomial._from_set(r.terms | {lead}))
    return retval


def buchberger(
    generators: typing.Iterable[Gf2Polynomial],
    limits: GroebnerLimits = GroebnerLimits(),
) -> tuple[Gf2Polynomial, ...]:
    """Computes the reduced Gröbner basis of the ideal spanned by
    ``generators`` under the weighted reverse-lexicographic order.

    Pairs are processed by increasing least common multiple ("normal"
    selection) and pruned with the Gebauer-Möller criteria.


    Arguments:

        generators: Ideal generators

        limits: Complexity limits


    Returns:

        The reduced Gröbner basis, sorted by increasing leading monomial.


    Raises:

        GroebnerLimitError: if the construction exceeds ``limits``
    """
    basis: list[Gf2Polynomial] = []
    leads: list[Monomial] = []
    pairs: set[tuple[int, int]] = set()
    hits: dict[Monomial, int] = {}
    total_terms = 0

    def _add(r: Gf2Polynomial) -> None:
        nonlocal pairs, total_terms
        lead = r.leading_monomial()
        pairs = _update(leads, pairs, lead)
        basis.append(r)
        leads.append(lead)
        total_terms += len(r)
        if total_terms > limits.max_terms:
            raise GroebnerLimitError(
                f"Gröbner basis exceeded {limits.max_terms} terms "
                f"({len(basis)} elements)"
            )
        if len(pairs) > limits.max_pairs:
            raise GroebnerLimitError(
                f"S-pair queue exceeded {limits.max_pairs} pairs"
            )

    for g in generators:
        r = _reduce(g, basis, leads, hits, limits.max_terms)
        if r:
            _add(r)

    processed = 0
    while pairs:
        i, j = min(
            pairs, key=lambda p: (order_key(leads[p[0]].lcm(leads[p[1]])), p)
        )
        pairs.remove((i, j))
        processed += 1
        s = _spoly(basis[i], leads[i], basis[j], leads[j])
        r = _reduce(s, basis, leads, hits, limits.max_terms)
        if r:
            _add(r)
            logger.debug(
                f"Pair ({i}, {j}) added element #{len(basis)} of degree "
                f"{leads[-1].weighted_degree} ({len(pairs)} pairs queued)"
            )

    logger.debug(
        f"Buchberger finished after {processed} pairs with {len(basis)} elements"
    )
    return tuple(_interreduce(basis, leads))


def _monomials_by_degree(k: int, top: int) -> list[list[Monomial]]:
    """All monomials in :math:`w_1..w_k` of weighted degree ``0..top``,
    bucketed by degree."""
    buckets: list[list[Monomial]] = [[] for _ in range(top + 1)]

    def _walk(prefix: list[int], var: int, degree: int) -> None:
        if var > k:
            buckets[degree].append(Monomial(prefix))
            return
        e = 0
        while degree + var * e <= top:
            _walk(prefix + [e], var + 1, degree + var * e)
            e += 1

    _walk([], 1, 0)
    return buckets


def _normalise(k: int, n: int) -> tuple[int, int]:
    """Applies the homeomorphism :math:`G_k(\\mathbb{R}^n) \\cong
    G_{n-k}(\\mathbb{R}^n)` so that ``k <= n - k``."""
    if k < 1 or n <= k:
        raise DomainError(f"Grassmannian needs 1 <= k < n, got k={k}, n={n}")
    if k > n - k:
        logger.info(f"Using G_{n - k}(R^{n}) in place of G_{k}(R^{n})")
        return n - k, n
    return k, n


@dataclasses.dataclass(frozen=True)
class GrassmannRing:
    """Presentation of :math:`H^*(G_k(\\mathbb{R}^n);\\mathbb{Z}_2)`.

    Instances are immutable and all queries are pure; build them with
    :py:func:`make_ring`.


    Attributes:

        k: Rank of the tautological bundle (``k <= n - k``)

        n: Dimension of the ambient space

        ideal_generators: Relations of degrees ``n-k+1..n``

        groebner_basis: The reduced Gröbner basis of the ideal
    """

    k: int
    n: int
    ideal_generators: tuple[Gf2Polynomial, ...]
    groebner_basis: tuple[Gf2Polynomial, ...]
    _hits: dict[Monomial, int] = dataclasses.field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    monomial_order: typing.ClassVar[str] = ORDER_TAG

    @property
    def top_degree(self) -> int:
        return self.k * (self.n - self.k)

    @functools.cached_property
    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial() for g in self.groebner_basis]

    def _check_variables(self, p: Gf2Polynomial) -> None:
        if p.nvars > self.k:
            raise DomainError(
                f"Variable w{p.nvars} is out of range for G_{self.k}(R^{self.n}), "
                f"which only has w1..w{self.k}"
            )

    def normal_form(self, p: Gf2Polynomial) -> Gf2Polynomial:
        """Unique remainder of ``p`` modulo the Gröbner basis.

        The result is zero if, and only if, ``p`` represents the zero class.
        """
        self._check_variables(p)
        if len(self._hits) > MAX_MEMOISED_MONOMIALS:
            self._hits.clear()
        # every class above the top degree vanishes
        top = self.top_degree
        p = Gf2Polynomial._from_set({t for t in p.terms if t.weighted_degree <= top})
        return _reduce(p, self.groebner_basis, self.leading_monomials, self._hits)

    def is_nonzero_class(self, p: Gf2Polynomial) -> bool:
        return bool(self.normal_form(p))

    def height_w1_computed(self) -> int:
        """Largest ``m`` with :math:`w_1^m \\neq 0`, by iterated reduction.

        Each power is obtained as :math:`w_1` times the normal form of the
        previous one, then reduced again.
        """
        w1 = Monomial.variable(1)
        power = self.normal_form(Gf2Polynomial.variable(1))
        m = 0
        while power:
            m += 1
            power = self.normal_form(power * w1)
        return m

    def standard_monomials(self, degree: int) -> list[Monomial]:
        """Monomials of a weighted degree not divisible by any leading
        monomial of the basis, in decreasing order."""
        if degree < 0:
            return []
        candidates = _monomials_by_degree(self.k, degree)[degree]
        retval = [
            m
            for m in candidates
            if not any(lead.divides(m) for lead in self.leading_monomials)
        ]
        return sorted(retval, key=order_key, reverse=True)

    def gf2_betti(self) -> tuple[int, ...]:
        """Number of standard monomials per degree ``0..k(n-k)``.

        These are the mod-2 Betti numbers; they add up to :math:`\\binom{n}{k}`.
        """
        return _standard_counts(self.k, self.top_degree, self.leading_monomials)


def _standard_counts(k: int, top: int, leads: list[Monomial]) -> tuple[int, ...]:
    return tuple(
        sum(1 for m in bucket if not any(lead.divides(m) for lead in leads))
        for bucket in _monomials_by_degree(k, top)
    )


def is_reduced_basis_of(
    k: int,
    n: int,
    generators: typing.Sequence[Gf2Polynomial],
    candidate: typing.Sequence[Gf2Polynomial],
) -> bool:
    """Checks that ``candidate`` is the reduced Gröbner basis of the ideal of
    :math:`G_k(\\mathbb{R}^n)`, without recomputing it.

    The candidate must be a reduced set of homogeneous polynomials in
    :math:`w_1..w_k`, satisfy Buchberger's criterion, contain the generators
    in its ideal, and leave exactly :math:`\\binom{n}{k}` standard monomials.
    Together, these force its ideal to be the expected one.
    """
    if not candidate:
        return False
    for g in candidate:
        if not g or g.nvars > k or not g.is_homogeneous():
            return False

    leads = [g.leading_monomial() for g in candidate]
    if len(set(leads)) != len(leads):
        return False
    for i, lead in enumerate(leads):
        for j, g in enumerate(candidate):
            if i != j and any(lead.divides(t) for t in g.terms):
                return False

    basis = list(candidate)
    hits: dict[Monomial, int] = {}
    for i, j in itertools.combinations(range(len(basis)), 2):
        if leads[i] * leads[j] == leads[i].lcm(leads[j]):
            continue
        if _reduce(_spoly(basis[i], leads[i], basis[j], leads[j]), basis, leads, hits):
            return False

    if any(_reduce(g, basis, leads, hits) for g in generators):
        return False

    return sum(_standard_counts(k, k * (n - k), leads)) == math.comb(n, k)


def make_ring(
    k: int,
    n: int,
    limits: GroebnerLimits = GroebnerLimits(),
    cache: GroebnerCache | None = None,
) -> GrassmannRing:
    """Builds the mod-2 cohomology ring of :math:`G_k(\\mathbb{R}^n)`.

    Pairs with ``k > n - k`` are replaced by ``(n - k, n)``.  When a cache is
    given, a stored basis is used after verification; a basis that fails
    verification is ignored, recomputed and stored again.


    Arguments:

        k: Dimension of the subspaces

        n: Dimension of the ambient space

        limits: Complexity limits for the construction

        cache: Optional storage of previously computed bases


    Returns:

        The ring, with its reduced Gröbner basis.


    Raises:

        DomainError: if ``k`` is out of range

        GroebnerLimitError: if the pair is beyond the complexity limits
    """
    k, n = _normalise(k, n)

    if k * (n - k) > limits.max_dimension:
        raise GroebnerLimitError(
            rewrap(
                f"""
                G_{k}(R^{n}) has dimension {k * (n - k)}, beyond the configured
                limit of {limits.max_dimension}
                """
            )
        )

    generators = ideal_generators(k, n)

    if cache is not None:
        stored = cache.get((k, n))
        if stored is not None:
            if is_reduced_basis_of(k, n, generators, stored):
                logger.info(f"Using cached Gröbner basis for G_{k}(R^{n})")
                ordered = sorted(stored, key=lambda g: order_key(g.leading_monomial()))
                return GrassmannRing(k, n, generators, tuple(ordered))
            logger.info(f"Ignoring corrupt cached Gröbner basis for G_{k}(R^{n})")

    logger.info(f"Computing Gröbner basis for G_{k}(R^{n})...")
    basis = buchberger(generators, limits)
    logger.info(f"Gröbner basis for G_{k}(R^{n}) has {len(basis)} elements")

    if cache is not None:
        cache[(k, n)] = basis

    return GrassmannRing(k, n, generators, basis)


def height_w1_formula(k: int, n: int) -> int:
    """Height of :math:`w_1` after Stong.

    For ``k >= 2`` and :math:`2^s < n \\le 2^{s+1}` the height is
    :math:`2^{s+1}-2` when ``k == 2`` or (``k == 3`` and :math:`n = 2^s+1`),
    and :math:`2^{s+1}-1` otherwise.  For ``k == 1`` (projective spaces) the
    height is ``n - 1``.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    k, n = _normalise(k, n)
    if k == 1:
        return n - 1
    s = dyadic_s(n)
    if k == 2 or (k == 3 and n == 2**s + 1):
        return 2 ** (s + 1) - 2
    return 2 ** (s + 1) - 1


def dyadic_s(n: int) -> int:
    """The unique ``s >= 0`` with :math:`2^s < n \\le 2^{s+1}`."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return (n - 1).bit_length() - 1
