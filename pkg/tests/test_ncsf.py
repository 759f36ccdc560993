import itertools
from math import comb

import pytest

from parkhopf import ncsf as N
from parkhopf import words as W
from parkhopf.coeffs import LinComb


def test_s11_in_ribbons():
    assert N.s_to_r(N.S(1, 1)) == N.R(1, 1) + N.R(2)


@pytest.mark.parametrize("n", range(1, 7))
def test_s_to_r_round_trip(n):
    for c in W.compositions(n):
        assert N.r_to_s(N.s_to_r(N.S(*c))) == N.S(*c)
    assert N.s_to_r(N.S(n)) == N.R(n)


def test_ribbon_product_transport():
    for i, j in itertools.product(W.compositions(2), W.compositions(2)):
        assert N.r_to_s(N.R(*i) * N.R(*j)) == N.r_to_s(N.R(*i)) * N.r_to_s(N.R(*j))


def test_omega():
    assert N.omega(N.S(1, 2)) == N.S(2, 2)


def test_lagrange_small_degrees():
    assert N.lagrange_g(1) == N.S(1)
    assert N.f_from_g(1) == N.S(1)
    assert N.f_from_g(3) == N.S(3) + N.S(2, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_g_shape(n):
    g = N.lagrange_g(n).as_dict()
    assert len(g) == 2 ** (n - 1)
    assert all(c > 0 for c in g.values())
    assert sum(g.values()) == comb(2 * n, n) // (n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_g_counts_parking_functions(n):
    report = N.gn_equals_parking_count(n)
    assert report["recursion_equals_enumeration"] and report["fixed_point_equals_inverse"]
    assert report["weighted_total"] == report["parking_count"] == (n + 1) ** (n - 1)


def test_fixed_point_and_inverse_agree_to_degree_8():
    for n in range(1, 9):
        assert N.lagrange_g(n) == N.inverse_one_minus_f(n)


def test_sqsym_dims():
    assert [N.sqsym_dim_via_ribbons(n) for n in range(1, 6)] == [1, 3, 11, 45, 197]
    assert [N.schroder_closed_form(n) for n in range(1, 6)] == [1, 3, 11, 45, 197]


def test_quasi_shuffle_counts():
    assert len(N.quasi_shuffle((1,), (1,))) == 3
    assert N.m_product((1,), (1,)) == N.M(1, 1).scale(2) + N.M(2)


def test_qsym_bases_round_trip():
    for n in range(1, 5):
        for c in W.compositions(n):
            assert N.fq_to_m(N.m_to_fq(N.M(*c))) == N.M(*c)


def test_fundamental_product_transport():
    for i, j in itertools.product(W.compositions(2), W.compositions(1)):
        assert N.fq_to_m(N.FQ(*i) * N.FQ(*j)) == N.fq_to_m(N.FQ(*i)) * N.fq_to_m(N.FQ(*j))


def test_permutation_of_descents():
    for c in W.compositions(4):
        assert W.descent_composition(N.permutation_of_descents(c)) == c


def test_zero_is_empty():
    assert not (N.S(1) - N.S(1)).as_dict()
    assert N.S(1) - N.S(1) == LinComb("S")
