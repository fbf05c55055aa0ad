# SPDX-FileCopyrightText: Copyright © 2024 Idiap Research Institute <contact@idiap.ch>
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from grassbounds import DomainError
from grassbounds.face_vectors import (
    FaceVector,
    HTag,
    HVector,
    binomial,
    check_dehn_sommerville,
    f_double_prime,
    f_to_h,
    g_tilde,
    g_to_f,
    h_double_prime,
    h_to_f,
    h_to_g,
    is_m_sequence,
    macaulay_bound,
    macaulay_representation,
)
from grassbounds.poincare import BettiVector

TORUS = FaceVector(2, (7, 21, 14))
TORUS_BETTI = BettiVector.from_betti(2, (0, 2, 1))


@st.composite
def face_vectors(draw, max_d: int = 16) -> FaceVector:
    d = draw(st.integers(0, max_d))
    f = draw(st.lists(st.integers(0, 10**6), min_size=d + 1, max_size=d + 1))
    return FaceVector(d, tuple(f))


@st.composite
def face_vectors_with_betti(draw, max_d: int = 16) -> tuple[FaceVector, BettiVector]:
    fv = draw(face_vectors(max_d))
    betti = draw(st.lists(st.integers(0, 50), min_size=fv.d + 1, max_size=fv.d + 1))
    return fv, BettiVector.from_betti(fv.d, betti)


def test_binomial_convention():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == 0
    assert binomial(5, 6) == 0
    assert binomial(0, 0) == 1
    with pytest.raises(DomainError):
        binomial(-1, 0)


def test_face_vector_validation():
    assert TORUS.face(-1) == 1
    assert TORUS.face(1) == 21
    assert TORUS.face(3) == 0
    with pytest.raises(DomainError):
        FaceVector(2, (7, 21))
    with pytest.raises(DomainError):
        FaceVector(1, (3, -1))
    with pytest.raises(DomainError):
        HVector(2, (1, 2, 3))


def test_f_to_h_examples():
    # boundary of the tetrahedron
    assert f_to_h(FaceVector(2, (4, 6, 4))).values == (1, 1, 1, 1)
    assert f_to_h(TORUS).values == (1, 4, 10, -1)
    assert f_to_h(TORUS).tag is HTag.PLAIN


@pytest.mark.parametrize("d", range(0, 12))
def test_simplex_boundary(d):
    # the boundary of the (d+1)-simplex has h = (1, ..., 1)
    fv = FaceVector(d, tuple(math.comb(d + 2, i + 1) for i in range(d + 1)))
    h = f_to_h(fv)
    assert h.values == (1,) * (d + 2)
    assert check_dehn_sommerville(h)
    assert h_to_f(h) == fv


def test_h1_tracks_vertices():
    fv = FaceVector(15, (117,) + (0,) * 15)
    assert f_to_h(fv)[1] == 117 - 16


def test_h0_only():
    h = HVector(4, (1, 0, 0, 0, 0, 0))
    assert h_to_f(h).f == tuple(math.comb(5, i + 1) for i in range(5))


@settings(max_examples=1000, deadline=None)
@given(face_vectors(max_d=20))
def test_h_inverts_f(fv):
    assert h_to_f(f_to_h(fv)) == fv


@given(face_vectors())
def test_g_inverts_f(fv):
    g = h_to_g(f_to_h(fv))
    assert g.tag is HTag.G
    assert g[1] == fv.f[0] - (fv.d + 2)
    assert g_to_f(g) == fv


def test_double_prime_torus():
    hpp = h_double_prime(f_to_h(TORUS), TORUS_BETTI)
    assert hpp.values == (1, 4, 4, 1)
    assert hpp.tag is HTag.DOUBLE_PRIME
    assert check_dehn_sommerville(hpp)
    assert not check_dehn_sommerville(f_to_h(TORUS))

    gpp = h_to_g(hpp)
    assert gpp.values == (1, 3, 0, -3)
    assert gpp.tag is HTag.G_DOUBLE_PRIME
    assert gpp.prefix() == (1, 3)
    assert is_m_sequence(gpp.prefix())

    gt = g_tilde(gpp, TORUS_BETTI)
    assert gt.tag is HTag.G_TILDE
    assert gt.prefix() == (1, 3)


@given(face_vectors())
def test_double_prime_without_homology(fv):
    h = f_to_h(fv)
    zero = BettiVector.zero(fv.d)
    assert h_double_prime(h, zero).values == h.values
    gpp = h_to_g(h_double_prime(h, zero))
    assert g_tilde(gpp, zero).values == gpp.values


def test_sphere_top_betti_is_ignored():
    d = 5
    h = f_to_h(FaceVector(d, tuple(math.comb(d + 2, i + 1) for i in range(d + 1))))
    b = BettiVector.from_betti(d, (0,) * d + (1,))
    assert h_double_prime(h, b).values == h.values


def test_g_tilde_correction():
    d = 15
    gpp = HVector(d, (0,) * (d + 2), HTag.G_DOUBLE_PRIME)
    b = BettiVector.from_betti(d, (0, 0, 0, 0, 1) + (0,) * 11)
    gt = g_tilde(gpp, b)
    assert gt[5] == -1820
    assert [j for j in range(d + 2) if gt[j]] == [5]


def test_modified_face_numbers_torus():
    fpp = f_double_prime(h_double_prime(f_to_h(TORUS), TORUS_BETTI))
    assert fpp.values == (1, 7, 15, 10)


@settings(max_examples=200, deadline=None)
@given(face_vectors_with_betti())
def test_modified_face_numbers_closed_form(pair):
    fv, b = pair
    d = fv.d
    fpp = f_double_prime(h_double_prime(f_to_h(fv), b))
    assert fpp.tag is HTag.F_DOUBLE_PRIME

    # beta_d never enters the top entry
    for i in range(d + 2):
        correction = sum(
            math.comb(i - 1, k - 1) * b.beta(k - 1) for k in range(1, min(i, d) + 1)
        )
        assert fpp[i] == fv.face(i - 1) - math.comb(d + 1, i) * correction


def test_tag_mismatch():
    gpp = h_to_g(h_double_prime(f_to_h(TORUS), TORUS_BETTI))
    with pytest.raises(DomainError):
        h_to_f(gpp)
    with pytest.raises(DomainError):
        g_to_f(gpp)
    with pytest.raises(DomainError):
        h_double_prime(gpp, TORUS_BETTI)
    with pytest.raises(DomainError):
        h_double_prime(f_to_h(TORUS), BettiVector.zero(3))


def test_dehn_sommerville_rejects_asymmetric():
    assert not check_dehn_sommerville(HVector(2, (1, 2, 3, 1), HTag.DOUBLE_PRIME))


@pytest.mark.parametrize(
    "a,j,expected",
    [(0, 1, 0), (1, 1, 1), (3, 1, 6), (4, 2, 5), (5, 2, 7), (10, 3, 15)],
)
def test_macaulay_bound(a, j, expected):
    assert macaulay_bound(a, j) == expected


@pytest.mark.parametrize("a", [1, 2, 7, 100, 4321, 10**12])
@pytest.mark.parametrize("j", [1, 2, 3, 7])
def test_macaulay_representation(a, j):
    rep = macaulay_representation(a, j)
    assert sum(math.comb(top, i) for top, i in rep) == a
    tops = [top for top, _ in rep]
    assert tops == sorted(tops, reverse=True) and len(set(tops)) == len(tops)
    assert [i for _, i in rep] == list(range(j, j - len(rep), -1))
    assert all(top >= i >= 1 for top, i in rep)


def test_macaulay_domain():
    with pytest.raises(DomainError):
        macaulay_representation(-1, 2)
    with pytest.raises(DomainError):
        macaulay_representation(3, 0)


@pytest.mark.parametrize(
    "seq,expected",
    [
        ((1,), True),
        ((1, 3, 6, 10), True),
        ((1, 3, 7), False),
        ((1, 2, 3, 4, 5), True),
        ((1, 1, 2), False),
        ((2, 3), False),
        ((1, -1), False),
        ((), False),
    ],
)
def test_is_m_sequence(seq, expected):
    assert is_m_sequence(seq) is expected
