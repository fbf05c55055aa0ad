# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause
"""Lower bounds for triangulations of real Grassmannians.

Vertex bounds come from non-vanishing cup products in mod-2 cohomology
(Stong's witnesses, or the height of :math:`w_1`).  Face-number bounds come
from the Lower Bound Theorem (``lbt``), its manifold version corrected by
Betti numbers (``lbtm``), the strong manifold version (``slbtm``) and the
facet bound implied by nonnegativity of :math:`h''` (``h_nonneg_facet``).
Everything is assembled per Grassmannian by :py:func:`grassmannian_report`.
"""

from __future__ import annotations  # not required for Python >= 3.10

import dataclasses
import enum
import fractions
import typing

from sphinx.util import logging

from . import DomainError, rewrap
from .face_vectors import binomial
from .gf2_ring import (
    Gf2Polynomial,
    GrassmannRing,
    GroebnerLimits,
    Monomial,
    dyadic_s,
    height_w1_formula,
    make_ring,
)
from .poincare import BettiVector, reduced_betti

if typing.TYPE_CHECKING:
    from .cache import GroebnerCache

logger = logging.getLogger(__name__)


class OrientabilityError(DomainError):
    """Raised when a method that needs an orientable manifold (``n`` even) is
    requested for a non-orientable Grassmannian."""


class Method(enum.Enum):
    """Face-number lower bound methods."""

    LBT = "lbt"
    LBTM = "lbtm"
    SLBTM = "slbtm"
    H_NONNEG_FACET = "h_nonneg_facet"

    @classmethod
    def parse(cls, text: str) -> Method:
        """Parses a method name, accepting ``hpp`` for ``h_nonneg_facet``."""
        name = text.strip().lower()
        if name == "hpp":
            return cls.H_NONNEG_FACET
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join([m.value for m in cls] + ["hpp"])
            raise DomainError(f"Unknown method `{text}' (valid: {valid})") from None

    @property
    def needs_orientable(self) -> bool:
        return self in (Method.LBTM, Method.SLBTM)


def default_methods(n: int) -> list[Method]:
    """All methods valid for the parity of ``n``."""
    if n % 2 == 0:
        return list(Method)
    return [Method.LBT, Method.H_NONNEG_FACET]


class WitnessSource(enum.Enum):
    """Which case of Stong's constructions produced a witness."""

    K2_GENERIC = "k2_generic"
    K3_CASE1 = "k3_case1"
    K3_CASE2 = "k3_case2"
    K3_CASE3 = "k3_case3"
    K4_POW2PLUS1_A = "k4_pow2plus1_a"
    K4_POW2PLUS1_B = "k4_pow2plus1_b"
    K4_GENERIC_A = "k4_generic_a"
    K4_GENERIC_B = "k4_generic_b"
    HEIGHT_ONLY = "height_only"


@dataclasses.dataclass(frozen=True)
class CupWitness:
    """A monomial in Stiefel-Whitney classes known to be nonzero.


    Attributes:

        factors: Pairs ``(dimension, multiplicity)``, e.g. ``((1, 14), (2,
            2))`` for :math:`w_1^{14} w_2^2`

        source: Case that produced the witness

        params: Parameters of that case (``s``, and ``p``, ``t`` or ``r``,
            ``t`` where applicable)
    """

    factors: tuple[tuple[int, int], ...]
    source: WitnessSource
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self) -> None:
        for dimension, multiplicity in self.factors:
            if dimension < 1 or multiplicity < 0:
                raise DomainError(f"Invalid witness factor w{dimension}^{multiplicity}")

    @property
    def degree(self) -> int:
        return sum(dimension * mult for dimension, mult in self.factors)

    @property
    def parameters(self) -> dict[str, int]:
        return dict(self.params)

    def dimensions(self) -> list[int]:
        """Dimensions of the single classes, in ascending order."""
        return sorted(
            dimension for dimension, mult in self.factors for _ in range(mult)
        )

    def monomial(self) -> Monomial:
        exponents: dict[int, int] = {}
        for dimension, mult in self.factors:
            exponents[dimension] = exponents.get(dimension, 0) + mult
        return Monomial.from_exponents(exponents)

    def polynomial(self) -> Gf2Polynomial:
        return Gf2Polynomial((self.monomial(),))

    def describe(self) -> str:
        """Source tag followed by its parameters, e.g. ``k3_case1(s=3, p=3)``."""
        args = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.source.value}({args})"

    def __str__(self) -> str:
        return str(self.monomial())


def _normalise(k: int, n: int) -> tuple[int, int]:
    if k < 1 or n <= k:
        raise DomainError(f"Grassmannian needs 1 <= k < n, got k={k}, n={n}")
    return min(k, n - k), n


def _k3_witness(n: int, s: int) -> CupWitness:
    top = 2 ** (s + 1)
    if n == top:
        return CupWitness(((1, top - 1), (2, top - 4)), WitnessSource.K3_CASE3, (("s", s),))
    for p in range(1, s + 1):
        base = top - 2**p + 1
        half = 2 ** (p - 1)
        if n == base:
            return CupWitness(
                ((1, top - 2), (2, top - 3 * half - 2)),
                WitnessSource.K3_CASE1,
                (("s", s), ("p", p)),
            )
        t = n - base
        if 0 < t < half:
            return CupWitness(
                ((1, top - 1), (2, top - 3 * half - 1), (3, t - 1)),
                WitnessSource.K3_CASE2,
                (("s", s), ("p", p), ("t", t)),
            )
    raise AssertionError(f"No witness case matches k=3, n={n}")


def _k4_witnesses(n: int, s: int) -> list[CupWitness]:
    top = 2 ** (s + 1)
    low = 2**s
    candidates: list[tuple[tuple[tuple[int, int], ...], WitnessSource, tuple]] = []
    if n == low + 1:
        params: tuple = (("s", s),)
        candidates.append(
            (((1, top - 2), (2, low - 5)), WitnessSource.K4_POW2PLUS1_A, params)
        )
        candidates.append(
            (((1, top - 1), (2, low - 7), (3, 1)), WitnessSource.K4_POW2PLUS1_B, params)
        )
    else:
        m = n - low - 1
        r = m.bit_length() - 1
        t = m - 2**r
        params = (("s", s), ("r", r), ("t", t))
        candidates.append(
            (
                ((1, top - 2), (2, low + 2 ** (r + 1) - 5), (4, t)),
                WitnessSource.K4_GENERIC_A,
                params,
            )
        )
        if r > 0:
            candidates.append(
                (
                    ((1, top - 1), (2, low + 2 ** (r + 1) - 7), (3, 1), (4, t)),
                    WitnessSource.K4_GENERIC_B,
                    params,
                )
            )
    return [
        CupWitness(factors, source, params)
        for factors, source, params in candidates
        if all(mult >= 0 for _, mult in factors)
    ]


def stong_candidates(k: int, n: int) -> list[CupWitness]:
    """Every nonzero cup product Stong's constructions give for
    :math:`G_k(\\mathbb{R}^n)`.

    For ``k`` from 2 to 4 the witnesses live in the top degree ``k(n-k)``;
    for ``k >= 5`` only the power :math:`w_1^{2^{s+1}-1}` of the height
    is known.
    """
    if k < 2 or k > n - k:
        raise DomainError(f"Stong witnesses need 2 <= k <= n-k, got k={k}, n={n}")
    s = dyadic_s(n)
    top = 2 ** (s + 1)
    if k == 2:
        return [
            CupWitness(
                ((1, top - 2), (2, n - 1 - 2**s)), WitnessSource.K2_GENERIC, (("s", s),)
            )
        ]
    if k == 3:
        return [_k3_witness(n, s)]
    if k == 4:
        return _k4_witnesses(n, s)
    return [CupWitness(((1, top - 1),), WitnessSource.HEIGHT_ONLY, (("s", s),))]


def vertex_bound_from_height(h: int) -> int:
    """Vertex bound :math:`(h+1)(h+2)/2` from a nonzero ``h``-fold product of
    degree-1 classes."""
    if h < 1:
        raise DomainError(f"Height must be >= 1, got {h}")
    return (h + 1) * (h + 2) // 2


def vertex_bound_from_witness(w: CupWitness) -> int:
    """Vertex bound from a nonzero product of ``m`` classes.

    With the dimensions sorted ascending, the bound is
    :math:`\\sum_{i=1}^{m} i\\cdot\\dim_i + (m+2)`.  Products made only of
    degree-1 classes use :py:func:`vertex_bound_from_height` instead.


    Raises:

        DomainError: if the witness is empty, or made only of classes of one
            dimension larger than 1
    """
    dims = w.dimensions()
    if not dims:
        raise DomainError("Cannot bound vertices from an empty witness")
    if set(dims) == {1}:
        return vertex_bound_from_height(len(dims))
    if len(set(dims)) == 1:
        raise DomainError(
            f"Witness {w} has classes of a single dimension {dims[0]}; the "
            f"cup-product bound needs at least two different dimensions"
        )
    return sum(i * dim for i, dim in enumerate(dims, start=1)) + len(dims) + 2


def stong_witness(k: int, n: int) -> CupWitness:
    """The witness with the largest vertex bound for
    :math:`G_k(\\mathbb{R}^n)`, ties going to the first candidate."""
    return max(stong_candidates(k, n), key=vertex_bound_from_witness)


@dataclasses.dataclass(frozen=True)
class DeltaBound:
    """A lower bound on the number of vertices, with provenance."""

    value: int
    witness: CupWitness
    source: str


def delta_lower_bound(k: int, n: int) -> DeltaBound:
    """Best vertex lower bound for triangulations of
    :math:`G_k(\\mathbb{R}^n)`.

    The maximum over the bound of every Stong witness and the bound from the
    height of :math:`w_1`.  The provenance names the winning case.
    """
    k, n = _normalise(k, n)
    height = height_w1_formula(k, n)
    by_height = CupWitness(((1, height),), WitnessSource.HEIGHT_ONLY, (("height", height),))

    if k == 1:
        return DeltaBound(
            vertex_bound_from_height(height), by_height, "height_w1(k=1 extension)"
        )

    candidates = stong_candidates(k, n) + [by_height]
    best = max(candidates, key=vertex_bound_from_witness)
    return DeltaBound(vertex_bound_from_witness(best), best, best.describe())


def _closed_form_delta(k: int, n: int) -> list[tuple[str, int]]:
    """Published closed forms for the vertex bound applicable to ``(k, n)``."""
    s = dyadic_s(n)
    retval = []
    if k == 2:
        retval.append(("delta:k2_closed_form", (n - 2) ** 2 + 2**s * (2 * n - 2**s - 1)))
    elif k == 3 and n == 2 ** (s + 1):
        retval.append(("delta:k3_power_of_two", 3 * n * (n - 5) + (n * n - n) // 2 + 17))
    elif k == 3 and n == 2**s + 1:
        retval.append(
            ("delta:k3_power_of_two_plus_one", 4 * n * (n - 5) + (n - 1) ** 2 // 4 + 25)
        )
    elif k == 4 and n == 2 ** (s + 1):
        value = 6 * n * (n - 6) - fractions.Fraction(3 * (n * n + 2 * n), 8) + 57
        retval.append(("delta:k4_power_of_two", int(value)))
    elif k == 4 and n == 2**s + 1:
        retval.append(("delta:k4_power_of_two_plus_one", 7 * n * (n - 7) + 3 * n + 89))

    if k >= 4 or (k == 3 and n != 2**s + 1):
        retval.append(("delta:height_bound:dominates", 2**s * (2 ** (s + 1) + 1)))
    return retval


def lbt_face_bounds(f0: int, d: int) -> list[int]:
    """Lower Bound Theorem for a triangulated ``d``-manifold with ``f0``
    vertices.

    Returns :math:`f_0\\binom{d+1}{i} - i\\binom{d+2}{i+1}` for ``i < d`` and
    :math:`f_0 d - (d+2)(d-1)` for the facets.
    """
    if d < 1:
        raise DomainError(f"Dimension must be >= 1, got {d}")
    if f0 < d + 2:
        raise DomainError(f"A {d}-manifold has at least {d + 2} vertices, got {f0}")
    retval = [f0 * binomial(d + 1, i) - i * binomial(d + 2, i + 1) for i in range(d)]
    retval.append(f0 * d - (d + 2) * (d - 1))
    return retval


def _check_betti(d: int, b: BettiVector) -> None:
    if b.d != d:
        raise DomainError(f"Dimension mismatch: d={d}, Betti vector has d={b.d}")


def lbtm_face_bounds(f0: int, d: int, b: BettiVector) -> list[int]:
    """Manifold Lower Bound Theorem: the classical bounds plus Betti terms.

    Row ``i < d`` gains :math:`\\binom{d+1}{i+1} \\sum_{j=0}^{i}
    \\binom{i}{j}\\beta_j` and the facet row gains :math:`\\sum_{j=0}^{d-1}
    \\binom{d}{j}\\beta_j`.
    """
    _check_betti(d, b)
    retval = lbt_face_bounds(f0, d)
    for i in range(d):
        retval[i] += binomial(d + 1, i + 1) * sum(
            binomial(i, j) * b.beta(j) for j in range(i + 1)
        )
    retval[d] += sum(binomial(d, j) * b.beta(j) for j in range(d))
    return retval


def slbtm_face_bounds(f0: int, d: int, b: BettiVector) -> list[int]:
    """Strong manifold Lower Bound Theorem: the manifold bounds plus the terms
    of :math:`\\tilde{g}_j` for ``2 <= j <= floor((d+2)/2)``."""
    _check_betti(d, b)
    retval = lbtm_face_bounds(f0, d, b)
    js = range(2, (d + 2) // 2 + 1)
    for i in range(d):
        retval[i] += sum(
            (binomial(d + 2 - j, d + 1 - i) - binomial(j, d + 1 - i))
            * binomial(d + 1, j - 1)
            * b.beta(j - 1)
            for j in js
        )
    retval[d] += sum(
        (d + 2 - 2 * j) * binomial(d + 1, j - 1) * b.beta(j - 1) for j in js
    )
    return retval


def total_simplices(bounds: typing.Sequence[int]) -> int:
    """Sum of per-dimension bounds: a lower bound on all simplices."""
    if not bounds:
        raise DomainError("Cannot total an empty list of bounds")
    return sum(bounds)


def lbt_total_closed_form(f0: int, d: int, exponent: int) -> int:
    """Closed aggregate :math:`2[(f_0-d)(2^e-1)+1]`.

    The row sum of :py:func:`lbt_face_bounds` matches ``exponent = d``.
    """
    return 2 * ((f0 - d) * (2**exponent - 1) + 1)


def lbtm_total_closed_form(f0: int, d: int, b: BettiVector, exponent: int) -> int:
    """Closed aggregate of the manifold bounds: the classical aggregate plus
    the Betti terms collected per :math:`\\beta_j`."""
    _check_betti(d, b)
    extra = sum(
        (
            binomial(d, j)
            + sum(binomial(d + 1, i + 1) * binomial(i, j) for i in range(j, d))
        )
        * b.beta(j)
        for j in range(d)
    )
    return lbt_total_closed_form(f0, d, exponent) + extra


def facet_bound_generic(k: int, m: int) -> int:
    """Facet bound for :math:`G_k(\\mathbb{R}^m)` from the generic vertex
    bound :math:`m(m+1)/2`.

    With ``n = m - k`` the bound is :math:`\\frac{k}{2}(n^3+n^2) +
    \\frac{k(k+2)(k-1)}{2} n + 2`.
    """
    if k < 2 or k > m - k:
        raise DomainError(f"Generic facet bound needs 2 <= k <= m-k, got k={k}, m={m}")
    n = m - k
    return k * (n**3 + n**2) // 2 + k * (k + 2) * (k - 1) // 2 * n + 2


def g2_identity_sum(m: int) -> int:
    """:math:`\\sum_{k=1}^{m-2} \\binom{4m-4}{4k}`, by direct summation."""
    if m < 3:
        raise DomainError(f"Identity needs m >= 3, got {m}")
    return sum(binomial(4 * m - 4, 4 * k) for k in range(1, m - 1))


def g2_identity_closed(m: int) -> int:
    """:math:`4^{2m-3} + (-1)^{m+1} 2^{2m-3} - 2`."""
    if m < 3:
        raise DomainError(f"Identity needs m >= 3, got {m}")
    return 4 ** (2 * m - 3) + (-1) ** (m + 1) * 2 ** (2 * m - 3) - 2


def g2_exponential_facet_bound(n: int) -> int:
    """Exponential facet bound for :math:`G_2(\\mathbb{R}^n)`, ``n`` even.

    Equals the manifold facet row for the generic vertex count
    :math:`n(n+1)/2`.  The binomial identity behind its closed form is
    checked by direct summation on every call.
    """
    if n % 2 or n < 6:
        raise DomainError(f"G_2 exponential bound needs an even n >= 6, got {n}")
    m = n // 2
    if g2_identity_sum(m) != g2_identity_closed(m):
        raise AssertionError(f"Binomial identity fails at m={m}")
    return (
        4 ** (n - 3)
        + (-1) ** (n // 2 + 1) * 2 ** (n - 3)
        + (n - 2) * (n * n - 3 * n + 6)
    )


def h_nonneg_facet_bound(d: int, b: BettiVector) -> int:
    """Facet bound from nonnegativity of :math:`h''`, valid for any closed
    manifold.

    Adds :math:`h_0 = 1` to the Betti lower bounds of :math:`h_1..h_d`:
    :math:`1 + \\sum_{i=1}^{d} \\binom{d}{i-1}\\beta_{i-1}`.
    """
    _check_betti(d, b)
    return 1 + sum(binomial(d, i - 1) * b.beta(i - 1) for i in range(1, d + 1))


def h_nonneg_single_binomial(k: int, n: int) -> int:
    """Single-binomial simplification of the nonnegativity facet bound:
    :math:`\\binom{k(n-k)}{2n-8}` for even ``n``, :math:`\\binom{k(n-k)}{2n-10}`
    for odd ``n``."""
    k, n = _normalise(k, n)
    return binomial(k * (n - k), 2 * n - (8 if n % 2 == 0 else 10))


def verify_witness(ring: GrassmannRing, witness: CupWitness) -> bool:
    """Certifies a witness by reduction modulo the Gröbner basis."""
    return ring.is_nonzero_class(witness.polynomial())


@dataclasses.dataclass(frozen=True)
class CrossCheck:
    """Comparison of a computed value against a published closed form.

    For names ending in ``:dominates`` the check passes when the computed
    value is at least the published one; otherwise they must be equal.
    """

    name: str
    published_value: int
    computed_value: int

    @property
    def match(self) -> bool:
        if self.name.endswith(":dominates"):
            return self.computed_value >= self.published_value
        return self.computed_value == self.published_value

    def to_json(self) -> dict[str, typing.Any]:
        return {
            "name": self.name,
            "paper_value": str(self.published_value),
            "computed_value": str(self.computed_value),
            "match": self.match,
        }


@dataclasses.dataclass(frozen=True)
class MethodResult:
    """Per-dimension bounds of one method.  Missing rows are ``None``."""

    f: tuple[int | None, ...]
    total: int | None


@dataclasses.dataclass
class BoundReport:
    """All bounds computed for one Grassmannian."""

    k: int
    n: int
    d: int
    orientable: bool
    delta: DeltaBound
    f0: int
    methods: dict[Method, MethodResult]
    cross_checks: list[CrossCheck] = dataclasses.field(default_factory=list)
    notes: list[str] = dataclasses.field(default_factory=list)

    def rows(self) -> typing.Iterator[tuple[int, list[int | None]]]:
        """Yields ``(i, [bound per method])`` for ``i = 0..d``."""
        for i in range(self.d + 1):
            yield i, [r.f[i] for r in self.methods.values()]

    def totals(self) -> list[int | None]:
        return [r.total for r in self.methods.values()]

    def to_json(self) -> dict[str, typing.Any]:
        """JSON-compatible dictionary; big integers become decimal strings."""

        def _str(v: int | None) -> str | None:
            return None if v is None else str(v)

        return {
            "k": self.k,
            "n": self.n,
            "d": self.d,
            "orientable": self.orientable,
            "delta": {
                "value": str(self.delta.value),
                "witness": str(self.delta.witness),
                "source": self.delta.source,
            },
            "methods": {
                m.value: {"f": [_str(v) for v in r.f], "total": _str(r.total)}
                for m, r in self.methods.items()
            },
            "cross_checks": [c.to_json() for c in self.cross_checks],
            "notes": list(self.notes),
        }


def _run_method(method: Method, f0: int, d: int, b: BettiVector) -> MethodResult:
    if method is Method.LBT:
        rows = lbt_face_bounds(f0, d)
    elif method is Method.LBTM:
        rows = lbtm_face_bounds(f0, d, b)
    elif method is Method.SLBTM:
        rows = slbtm_face_bounds(f0, d, b)
    else:
        facets = h_nonneg_facet_bound(d, b)
        return MethodResult(tuple([None] * d + [facets]), None)
    return MethodResult(tuple(rows), total_simplices(rows))


def verify_report_cohomology(
    report: BoundReport,
    limits: GroebnerLimits = GroebnerLimits(),
    cache: GroebnerCache | None = None,
) -> GrassmannRing | None:
    """Checks the report's witness and the height of :math:`w_1` in the
    cohomology ring, appending cross-checks (or a note, when the manifold is
    beyond ``limits.max_dimension``)."""
    if report.d > limits.max_dimension:
        report.notes.append(
            rewrap(
                f"""
                cohomology verification skipped: dimension {report.d} exceeds
                the configured limit of {limits.max_dimension}
                """
            )
        )
        return None

    ring = make_ring(report.k, report.n, limits, cache)
    report.cross_checks.append(
        CrossCheck(
            "cohomology:height_w1",
            height_w1_formula(report.k, report.n),
            ring.height_w1_computed(),
        )
    )
    report.cross_checks.append(
        CrossCheck(
            "cohomology:witness_nonzero",
            1,
            int(verify_witness(ring, report.delta.witness)),
        )
    )
    return ring


def grassmannian_report(
    k: int,
    n: int,
    methods: typing.Iterable[Method] | None = None,
    f0: int | None = None,
    verify_cohomology: bool = False,
    limits: GroebnerLimits = GroebnerLimits(),
    cache: GroebnerCache | None = None,
) -> BoundReport:
    """Computes every requested bound for :math:`G_k(\\mathbb{R}^n)`.


    Arguments:

        k: Dimension of the subspaces

        n: Dimension of the ambient space

        methods: Face-number methods to run.  If ``None``, runs every method
            valid for the parity of ``n`` (see :py:func:`default_methods`).

        f0: Vertex count to feed the face-number bounds.  Defaults to the best
            vertex lower bound (:py:func:`delta_lower_bound`).

        verify_cohomology: If set, certifies the witness and the height of
            :math:`w_1` by Gröbner reduction

        limits: Complexity limits for the cohomology verification

        cache: Optional Gröbner basis cache for the cohomology verification


    Returns:

        The assembled report.


    Raises:

        OrientabilityError: if ``lbtm`` or ``slbtm`` is requested for odd ``n``

        DomainError: for invalid ``(k, n)`` or a too small ``f0``
    """
    kk, n = _normalise(k, n)
    d = kk * (n - kk)
    orientable = n % 2 == 0

    selected = default_methods(n) if methods is None else list(dict.fromkeys(methods))
    if not selected:
        raise DomainError("No bound method requested")
    for m in selected:
        if m.needs_orientable and not orientable:
            raise OrientabilityError(
                rewrap(
                    f"""
                    method {m.value} applies to orientable manifolds only, and
                    G_{k}(R^{n}) is orientable if, and only if, n is even
                    """
                )
            )

    notes: list[str] = []
    if kk != k:
        notes.append(f"G_{k}(R^{n}) is homeomorphic to G_{kk}(R^{n}), used instead")

    delta = delta_lower_bound(kk, n)
    if kk == 1:
        notes.append(
            "the height of w1 for k=1 (n-1) extends the published formula, "
            "stated for k >= 2"
        )
    elif kk >= 5:
        notes.append("only the height of w1 is known for k >= 5; no product witness")

    if f0 is None:
        f0 = delta.value
    else:
        notes.append(f"f0 overridden to {f0} (best vertex bound is {delta.value})")
    if f0 < d + 2:
        raise DomainError(f"f0 must be at least d+2={d + 2}, got {f0}")

    betti = reduced_betti(kk, n)
    results = {m: _run_method(m, f0, d, betti) for m in selected}

    checks = [
        CrossCheck(name, value, delta.value) for name, value in _closed_form_delta(kk, n)
    ]

    if Method.LBT in results:
        lbt = results[Method.LBT]
        if kk >= 2:
            checks.append(
                CrossCheck(
                    "lbt_facet:generic_bound:dominates",
                    facet_bound_generic(kk, n),
                    typing.cast(int, lbt.f[d]),
                )
            )
        checks.append(
            CrossCheck(
                "lbt_total:closed_form_stated",
                lbt_total_closed_form(f0, d, d + 1),
                typing.cast(int, lbt.total),
            )
        )
        checks.append(
            CrossCheck(
                "lbt_total:closed_form_table",
                lbt_total_closed_form(f0, d, d),
                typing.cast(int, lbt.total),
            )
        )

    if Method.LBTM in results:
        lbtm = results[Method.LBTM]
        checks.append(
            CrossCheck(
                "lbtm_total:closed_form_stated",
                lbtm_total_closed_form(f0, d, betti, d + 1),
                typing.cast(int, lbtm.total),
            )
        )
        checks.append(
            CrossCheck(
                "lbtm_total:closed_form_table",
                lbtm_total_closed_form(f0, d, betti, d),
                typing.cast(int, lbtm.total),
            )
        )
        if kk == 2 and n >= 6:
            checks.append(
                CrossCheck(
                    "lbtm_facet:g2_exponential:dominates",
                    g2_exponential_facet_bound(n),
                    typing.cast(int, lbtm.f[d]),
                )
            )

    if Method.H_NONNEG_FACET in results:
        checks.append(
            CrossCheck(
                "h_nonneg_facet:single_binomial:dominates",
                h_nonneg_single_binomial(kk, n),
                typing.cast(int, results[Method.H_NONNEG_FACET].f[d]),
            )
        )

    for c in checks:
        if not c.match:
            notes.append(
                f"cross-check {c.name}: published value {c.published_value} "
                f"disagrees with computed value {c.computed_value}"
            )

    report = BoundReport(
        k=k,
        n=n,
        d=d,
        orientable=orientable,
        delta=delta,
        f0=f0,
        methods=results,
        cross_checks=checks,
        notes=notes,
    )

    if verify_cohomology:
        verify_report_cohomology(report, limits, cache)
        for c in report.cross_checks:
            if c.name.startswith("cohomology:") and not c.match:
                report.notes.append(
                    f"cohomology check {c.name} failed: expected "
                    f"{c.published_value}, computed {c.computed_value}"
                )

    logger.info(
        f"Report for G_{k}(R^{n}): delta >= {delta.value} ({delta.source}), "
        f"methods {', '.join(m.value for m in selected)}"
    )
    return report
