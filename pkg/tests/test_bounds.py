# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

import csv
import json

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from grassbounds import DomainError
from grassbounds.bounds import (
    CupWitness,
    Method,
    OrientabilityError,
    WitnessSource,
    default_methods,
    delta_lower_bound,
    facet_bound_generic,
    g2_exponential_facet_bound,
    g2_identity_closed,
    g2_identity_sum,
    grassmannian_report,
    h_nonneg_facet_bound,
    h_nonneg_single_binomial,
    lbt_face_bounds,
    lbt_total_closed_form,
    lbtm_face_bounds,
    lbtm_total_closed_form,
    slbtm_face_bounds,
    stong_candidates,
    stong_witness,
    total_simplices,
    vertex_bound_from_height,
    vertex_bound_from_witness,
)
from grassbounds.gf2_ring import GroebnerLimits, dyadic_s
from grassbounds.poincare import BettiVector, reduced_betti


def _golden_columns(datadir) -> dict[str, list[int]]:
    with (datadir / "report_k3_n8.csv").open() as f:
        rows = list(csv.reader(f))
    header, body = rows[0], rows[1:-1]
    return {name: [int(r[c]) for r in body] for c, name in enumerate(header) if c}


@st.composite
def manifold_data(draw, max_d: int = 20) -> tuple[int, int, BettiVector]:
    d = draw(st.integers(1, max_d))
    f0 = draw(st.integers(d + 2, 10**5))
    betti = draw(st.lists(st.integers(0, 30), min_size=d + 1, max_size=d + 1))
    return f0, d, BettiVector.from_betti(d, betti)


@pytest.mark.parametrize(
    "k,n,expected,source",
    [
        (3, 9, "w1^14*w2^2", WitnessSource.K3_CASE1),
        (3, 7, "w1^6*w2^3", WitnessSource.K3_CASE1),
        (3, 6, "w1^7*w2", WitnessSource.K3_CASE2),
        (3, 8, "w1^7*w2^4", WitnessSource.K3_CASE3),
        (3, 10, "w1^15*w2^3", WitnessSource.K3_CASE2),
        (2, 8, "w1^6*w2^3", WitnessSource.K2_GENERIC),
        (4, 8, "w1^7*w2*w3*w4", WitnessSource.K4_GENERIC_B),
        (4, 9, "w1^15*w2*w3", WitnessSource.K4_POW2PLUS1_B),
    ],
)
def test_stong_witness_examples(k, n, expected, source):
    w = stong_witness(k, n)
    assert str(w) == expected
    assert w.source is source


@pytest.mark.parametrize("k", [2, 3, 4])
def test_witnesses_live_in_top_degree(k):
    for n in range(2 * k, 65):
        for w in stong_candidates(k, n):
            assert w.degree == k * (n - k), f"{w} for G_{k}(R^{n})"


def test_witness_parameters():
    w = stong_witness(3, 9)
    assert w.parameters == {"s": 3, "p": 3}
    assert w.describe() == "k3_case1(s=3, p=3)"


@pytest.mark.parametrize("k,n", [(1, 5), (5, 9), (0, 4)])
def test_stong_candidates_domain(k, n):
    with pytest.raises(DomainError):
        stong_candidates(k, n)


def test_vertex_bound_from_height():
    assert vertex_bound_from_height(1) == 3
    assert vertex_bound_from_height(14) == 120
    with pytest.raises(DomainError):
        vertex_bound_from_height(0)


def test_vertex_bound_from_witness():
    w = CupWitness(((1, 7), (2, 4)), WitnessSource.K3_CASE3)
    assert vertex_bound_from_witness(w) == 117
    # factors are sorted by dimension
    assert vertex_bound_from_witness(
        CupWitness(((2, 4), (1, 7)), WitnessSource.K3_CASE3)
    ) == 117
    assert vertex_bound_from_witness(
        CupWitness(((3, 1), (1, 15), (2, 1)), WitnessSource.K4_POW2PLUS1_B)
    ) == 222
    assert vertex_bound_from_witness(
        CupWitness(((1, 14),), WitnessSource.HEIGHT_ONLY)
    ) == vertex_bound_from_height(14)


@pytest.mark.parametrize(
    "factors", [(), ((2, 3),), ((1, 0), (3, 2))], ids=["empty", "w2", "w3"]
)
def test_vertex_bound_from_witness_domain(factors):
    with pytest.raises(DomainError):
        vertex_bound_from_witness(CupWitness(factors, WitnessSource.HEIGHT_ONLY))


def test_witness_factor_validation():
    with pytest.raises(DomainError):
        CupWitness(((0, 2),), WitnessSource.HEIGHT_ONLY)


@pytest.mark.parametrize(
    "k,n,expected",
    [
        (3, 8, 117),
        (3, 9, 185),
        (3, 16, 665),
        (3, 17, 905),
        (4, 8, 123),
        (4, 9, 222),
        (4, 16, 909),
        (5, 11, 136),
        (2, 8, 80),
        (5, 8, 117),
    ],
)
def test_delta_examples(k, n, expected):
    assert delta_lower_bound(k, n).value == expected


def test_delta_provenance():
    delta = delta_lower_bound(3, 9)
    assert str(delta.witness) == "w1^14*w2^2"
    assert delta.source == "k3_case1(s=3, p=3)"
    assert delta_lower_bound(5, 11).witness.source is WitnessSource.HEIGHT_ONLY
    assert delta_lower_bound(1, 6).value == vertex_bound_from_height(5)


@pytest.mark.parametrize("n", [n for n in range(5, 65) if (n - 1) & (n - 2)])
def test_delta_k2_closed_form(n):
    s = dyadic_s(n)
    assert delta_lower_bound(2, n).value == (n - 2) ** 2 + 2**s * (2 * n - 2**s - 1)


@pytest.mark.parametrize("n", [8, 16, 32, 64])
def test_delta_k3_power_of_two(n):
    assert delta_lower_bound(3, n).value == 3 * n * (n - 5) + (n * n - n) // 2 + 17


@pytest.mark.parametrize("n", [9, 17, 33])
def test_delta_k3_power_of_two_plus_one(n):
    expected = 4 * n * (n - 5) + (n - 1) ** 2 // 4 + 25
    assert delta_lower_bound(3, n).value == expected


@pytest.mark.parametrize("n", [8, 16, 32, 64])
def test_delta_k4_power_of_two(n):
    expected = 6 * n * (n - 6) - 3 * (n * n + 2 * n) // 8 + 57
    assert delta_lower_bound(4, n).value == expected


@pytest.mark.parametrize("k,n", [(k, n) for k in (3, 4, 5) for n in range(2 * k, 40)])
def test_delta_dominates_height_bound(k, n):
    s = dyadic_s(n)
    assert delta_lower_bound(k, n).value >= 2**s * (2 ** (s + 1) + 1)


def test_lbt_examples():
    assert lbt_face_bounds(117, 15)[:3] == [117, 1736, 12680]
    assert lbt_face_bounds(117, 15)[15] == 1517
    # the boundary of a simplex attains every bound
    for d in range(1, 10):
        assert lbt_face_bounds(d + 2, d)[d] == d + 2


@pytest.mark.parametrize("f0,d", [(3, 2), (10, 0)])
def test_lbt_domain(f0, d):
    with pytest.raises(DomainError):
        lbt_face_bounds(f0, d)


def test_table_for_k3_n8(datadir):
    golden = _golden_columns(datadir)
    b = reduced_betti(3, 8)
    assert lbt_face_bounds(117, 15) == golden["lbt"]
    assert lbtm_face_bounds(117, 15, b) == golden["lbtm"]
    assert slbtm_face_bounds(117, 15, b) == golden["slbtm"]
    assert total_simplices(golden["lbt"]) == 6684470
    assert total_simplices(golden["lbtm"]) == 14378806
    assert total_simplices(golden["slbtm"]) == 24703926


@given(manifold_data())
def test_methods_without_homology_coincide(data):
    f0, d, _ = data
    zero = BettiVector.zero(d)
    assert lbtm_face_bounds(f0, d, zero) == lbt_face_bounds(f0, d)
    assert slbtm_face_bounds(f0, d, zero) == lbt_face_bounds(f0, d)


@settings(deadline=None)
@given(manifold_data(max_d=30))
def test_methods_are_ordered(data):
    f0, d, b = data
    lbt = lbt_face_bounds(f0, d)
    lbtm = lbtm_face_bounds(f0, d, b)
    slbtm = slbtm_face_bounds(f0, d, b)
    assert all(x <= y <= z for x, y, z in zip(lbt, lbtm, slbtm))


@settings(deadline=None)
@given(manifold_data(max_d=30))
def test_bounds_grow_with_vertices(data):
    f0, d, b = data
    pairs = [
        (lbt_face_bounds(f0, d), lbt_face_bounds(f0 + 1, d)),
        (lbtm_face_bounds(f0, d, b), lbtm_face_bounds(f0 + 1, d, b)),
        (slbtm_face_bounds(f0, d, b), slbtm_face_bounds(f0 + 1, d, b)),
    ]
    for fewer, more in pairs:
        assert all(x <= y for x, y in zip(fewer, more))


@given(manifold_data(max_d=30))
def test_totals_match_closed_forms(data):
    f0, d, b = data
    assert total_simplices(lbt_face_bounds(f0, d)) == lbt_total_closed_form(f0, d, d)
    assert total_simplices(lbtm_face_bounds(f0, d, b)) == lbtm_total_closed_form(
        f0, d, b, d
    )


def test_betti_dimension_mismatch():
    with pytest.raises(DomainError):
        lbtm_face_bounds(20, 3, BettiVector.zero(4))


def test_total_simplices_domain():
    with pytest.raises(DomainError):
        total_simplices([])


@pytest.mark.parametrize("k,m,expected", [(3, 9, 470), (2, 4, 22), (2, 6, 98)])
def test_facet_bound_generic_examples(k, m, expected):
    assert facet_bound_generic(k, m) == expected


@pytest.mark.parametrize("k,m", [(k, m) for k in range(2, 6) for m in range(2 * k, 15)])
def test_facet_bound_generic_is_lbt_facet(k, m):
    d = k * (m - k)
    assert facet_bound_generic(k, m) == lbt_face_bounds(m * (m + 1) // 2, d)[d]


def test_facet_bound_generic_domain():
    with pytest.raises(DomainError):
        facet_bound_generic(4, 7)


@pytest.mark.parametrize("m,expected", [(3, 70), (4, 990)])
def test_g2_identity_examples(m, expected):
    assert g2_identity_sum(m) == expected
    assert g2_identity_closed(m) == expected


@pytest.mark.parametrize("m", range(3, 21))
def test_g2_identity(m):
    assert g2_identity_sum(m) == g2_identity_closed(m)


@pytest.mark.parametrize("n,expected", [(6, 168), (8, 1268)])
def test_g2_exponential_examples(n, expected):
    assert g2_exponential_facet_bound(n) == expected


@pytest.mark.parametrize("n", range(6, 17, 2))
def test_g2_exponential_is_lbtm_facet(n):
    d = 2 * (n - 2)
    facets = lbtm_face_bounds(n * (n + 1) // 2, d, reduced_betti(2, n))[d]
    assert g2_exponential_facet_bound(n) == facets


@pytest.mark.parametrize("n", [4, 7])
def test_g2_exponential_domain(n):
    with pytest.raises(DomainError):
        g2_exponential_facet_bound(n)


def test_h_nonneg_facet_bound():
    assert h_nonneg_facet_bound(12, reduced_betti(3, 7)) == 991
    assert h_nonneg_facet_bound(7, BettiVector.zero(7)) == 1
    assert h_nonneg_single_binomial(3, 7) == 495
    assert h_nonneg_single_binomial(3, 8) == 6435


@pytest.mark.parametrize("k,n", [(2, 6), (3, 8), (3, 9), (4, 9), (4, 10)])
def test_h_nonneg_dominates_single_binomial(k, n):
    d = k * (n - k)
    assert h_nonneg_facet_bound(d, reduced_betti(k, n)) >= h_nonneg_single_binomial(
        k, n
    )


def test_method_parsing():
    assert Method.parse("LBT") is Method.LBT
    assert Method.parse(" hpp ") is Method.H_NONNEG_FACET
    assert Method.parse("h_nonneg_facet") is Method.H_NONNEG_FACET
    with pytest.raises(DomainError, match="valid"):
        Method.parse("ubt")
    assert default_methods(8) == list(Method)
    assert default_methods(9) == [Method.LBT, Method.H_NONNEG_FACET]


def test_report_k3_n8(datadir):
    golden = _golden_columns(datadir)
    report = grassmannian_report(3, 8)
    assert report.d == 15
    assert report.orientable
    assert report.f0 == 117
    assert list(report.methods) == list(Method)
    for m in (Method.LBT, Method.LBTM, Method.SLBTM):
        assert list(report.methods[m].f) == golden[m.value]
    facets_only = report.methods[Method.H_NONNEG_FACET]
    assert facets_only.f[:15] == (None,) * 15
    assert facets_only.f[15] == h_nonneg_facet_bound(15, reduced_betti(3, 8))
    assert facets_only.total is None
    assert report.totals()[:3] == [6684470, 14378806, 24703926]

    checks = {c.name: c for c in report.cross_checks}
    assert checks["delta:k3_power_of_two"].match
    assert checks["lbt_total:closed_form_table"].match
    assert not checks["lbt_total:closed_form_stated"].match
    assert checks["lbtm_total:closed_form_table"].match
    assert checks["h_nonneg_facet:single_binomial:dominates"].match


def test_report_k3_n9():
    report = grassmannian_report(3, 9)
    assert not report.orientable
    assert list(report.methods) == [Method.LBT, Method.H_NONNEG_FACET]
    lbt = report.methods[Method.LBT]
    assert lbt.f[18] == 2990
    assert lbt.total == 87555764
    checks = {c.name: c for c in report.cross_checks}
    assert checks["delta:k3_power_of_two_plus_one"].match
    assert checks["lbt_facet:generic_bound:dominates"].match
    assert checks["lbt_facet:generic_bound:dominates"].published_value == 470


def test_report_flags_disagreements():
    report = grassmannian_report(2, 5)
    checks = {c.name: c for c in report.cross_checks}
    assert checks["delta:k2_closed_form"].published_value == 29
    assert checks["delta:k2_closed_form"].computed_value == 28
    assert any("delta:k2_closed_form" in note for note in report.notes)

    report = grassmannian_report(4, 9)
    assert any("242" in note for note in report.notes)


def test_report_orientability():
    with pytest.raises(OrientabilityError, match="orientable"):
        grassmannian_report(3, 7, methods=[Method.LBTM])
    with pytest.raises(OrientabilityError):
        grassmannian_report(2, 9, methods=[Method.LBT, Method.SLBTM])


def test_report_domain():
    with pytest.raises(DomainError):
        grassmannian_report(3, 8, f0=10)
    with pytest.raises(DomainError):
        grassmannian_report(3, 8, methods=[])
    with pytest.raises(DomainError):
        grassmannian_report(8, 8)


def test_report_duality():
    a = grassmannian_report(5, 8)
    b = grassmannian_report(3, 8)
    assert a.k == 5 and a.d == b.d
    assert a.totals() == b.totals()
    assert any("homeomorphic" in note for note in a.notes)


def test_report_f0_override():
    report = grassmannian_report(3, 8, methods=[Method.LBT], f0=200)
    assert report.f0 == 200
    assert report.methods[Method.LBT].f == tuple(lbt_face_bounds(200, 15))
    assert any("overridden" in note for note in report.notes)


def test_report_json():
    document = grassmannian_report(3, 8, methods=[Method.LBT, Method.SLBTM]).to_json()
    assert document["delta"] == {
        "value": "117",
        "witness": "w1^7*w2^4",
        "source": "k3_case3(s=2)",
    }
    assert list(document["methods"]) == ["lbt", "slbtm"]
    assert document["methods"]["lbt"]["total"] == "6684470"
    assert document["methods"]["slbtm"]["f"][0] == "117"
    assert document["cross_checks"][0] == {
        "name": "delta:k3_power_of_two",
        "paper_value": "117",
        "computed_value": "117",
        "match": True,
    }
    assert all(isinstance(c["match"], bool) for c in document["cross_checks"])
    json.dumps(document)


def test_report_cohomology_verification():
    report = grassmannian_report(3, 8, methods=[Method.LBT], verify_cohomology=True)
    checks = {c.name: c for c in report.cross_checks}
    assert checks["cohomology:height_w1"].computed_value == 7
    assert checks["cohomology:height_w1"].match
    assert checks["cohomology:witness_nonzero"].match


def test_report_cohomology_verification_skipped():
    report = grassmannian_report(
        4, 12, methods=[Method.LBT], verify_cohomology=True,
        limits=GroebnerLimits(max_dimension=20),
    )
    assert not any(c.name.startswith("cohomology:") for c in report.cross_checks)
    assert any("skipped" in note for note in report.notes)
