from collections import Counter
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from parkhopf import words as W

letters = st.lists(st.integers(min_value=1, max_value=12), min_size=0, max_size=9)


def parking_of_size(lo, hi):
    return st.integers(min_value=lo, max_value=hi).flatmap(lambda n: st.sampled_from(W.parking_functions(n)))


parking = parking_of_size(1, 5)
small_parking = parking_of_size(1, 3)


def test_parkize_table():
    assert W.parkize((5, 7, 3, 3, 13, 1, 10, 10, 4)) == (4, 6, 2, 2, 9, 1, 7, 7, 3)


def test_standardize_example():
    # bbacab with a < b < c
    assert W.standardize((2, 2, 1, 3, 1, 2)) == (3, 4, 1, 6, 2, 5)


@given(letters)
def test_parkize_yields_parking_function(w):
    p = W.parkize(w)
    assert W.is_parking(p)
    assert W.parkize(p) == p
    assert W.standardize(p) == W.standardize(w)


@given(letters)
def test_parkize_routes_agree(w):
    assert W.parkize(w) == W.parkize_by_decrement(w)


@given(letters)
def test_standardize_is_permutation(w):
    sigma = W.standardize(w)
    assert W.is_permutation(sigma)
    assert W.inverse(W.inverse(sigma)) == sigma


@given(letters, letters)
def test_shuffle_count(u, v):
    u, v = u[:4], v[:4]
    assert len(list(W.shuffle(u, v))) == comb(len(u) + len(v), len(u))


@given(small_parking, small_parking)
@settings(max_examples=60)
def test_convolution_routes_agree(a, b):
    assert Counter(W.convolution(a, b)) == Counter(W.convolution_by_scan(a, b))
    for c in W.convolution(a, b):
        assert W.is_parking(c)
        assert W.parkize(c[:len(a)]) == a and W.parkize(c[len(a):]) == b


@given(parking)
def test_connected_factorization_concatenates(a):
    pieces = W.connected_factorization(a)
    out = ()
    for p in pieces:
        assert W.is_connected(p)
        out = W.shifted_concat(out, p)
    assert out == a


def test_mirror_symmetry_of_connectedness():
    for n in range(1, 5):
        pfs = W.parking_functions(n)
        assert sum(map(W.is_connected, pfs)) == sum(map(W.is_anticonnected, pfs))


def test_connected_counts():
    assert [sum(map(W.is_connected, W.parking_functions(n))) for n in range(1, 5)] == [1, 2, 11, 92]


def test_parking_fiber():
    assert sorted(W.parking_fiber((1, 2, 1), 3)) == [(1, 2, 1), (2, 3, 2)]
    assert all(W.parkize(w) == (1, 3, 1) for w in W.parking_fiber((1, 3, 1), 5))


def test_prime_parking_functions_are_prime():
    assert W.prime_parking_functions(3) == [a for a in W.parking_functions(3) if W.is_prime(a)]
    assert sorted(W.prime_parking_functions(3)) == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_compositions_and_refinement():
    assert len(W.compositions(5)) == 16
    assert set(W.coarsenings((1, 2))) == {(1, 2), (3,)}
    assert all(W.is_finer(r, (2, 2)) for r in W.refinements((2, 2)))
    assert W.composition_from_descents(4, W.descent_set((1, 3))) == (1, 3)


def test_descent_composition():
    assert W.descent_composition((1, 3, 1)) == (2, 1)


def test_partitions():
    assert len(W.partitions(6)) == 11


@pytest.mark.parametrize("text", ["11|2", "1|2|3", "123", "11|335|6"])
def test_segmented_round_trip(text):
    assert str(W.seg(text)) == text


def test_segmented_compositions_small():
    assert {str(c) for c in W.segmented_compositions(2)} == {"2", "11", "1|1"}


def test_ndpf_noncrossing_example():
    assert W.ndpf_to_noncrossing((1, 1, 3)) == ((1, 2), (3,))
    assert W.noncrossing_to_ndpf(((1, 2), (3,))) == (1, 1, 3)


def test_enumerate_kind():
    assert W.enumerate_kind("PPF", 3) == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert len(W.enumerate_kind("SEGCOMP", 4)) == 27
    with pytest.raises(ValueError):
        W.enumerate_kind("PF", 9, cap=8)


def test_multinomial():
    assert W.multinomial(2, 1, 1) == 12
