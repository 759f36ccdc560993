import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from parkhopf import series as SE
from parkhopf.series import PowerSeries

ORDER = 8
coeffs = st.lists(st.integers(-5, 5), min_size=ORDER, max_size=ORDER)


def series(cs):
    return PowerSeries(cs, ORDER)


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    a, b, c = series(a), series(b), series(c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(coeffs)
def test_inverse(a):
    a = series([1] + a[1:])
    assert a * a.inverse() == PowerSeries.one(ORDER)


@given(coeffs)
def test_sqrt(a):
    a = series([1] + a[1:])
    root = a.sqrt()
    assert root * root == a


@given(coeffs, coeffs)
def test_compose_with_t_is_identity(a, b):
    a = series(a)
    assert a.compose(PowerSeries.t(ORDER)) == a
    g = series([0] + b[1:])
    assert (a * a).compose(g) == a.compose(g) * a.compose(g)


def test_compose_rejects_constant_term():
    with pytest.raises(ValueError):
        PowerSeries.one(ORDER).compose(PowerSeries.one(ORDER))


def test_order_mismatch():
    with pytest.raises(ValueError):
        PowerSeries.one(4) + PowerSeries.one(5)


def test_div_t_drops_order():
    x = PowerSeries.t(ORDER).div_t()
    assert x.order == ORDER - 1 and x == PowerSeries.one(ORDER - 1)
    with pytest.raises(ValueError):
        PowerSeries.one(ORDER).div_t()


@given(st.lists(st.integers(0, 4), min_size=ORDER, max_size=ORDER))
def test_euler_transform_round_trip(e):
    e = [0] + e[1:]
    a = SE.euler_product([-x for x in e], ORDER)
    assert SE.inverse_euler_transform(a) == e


def test_fixed_point_catalan():
    c = SE.fixed_point(lambda f: PowerSeries.one(ORDER) + PowerSeries.t(ORDER) * f * f, ORDER)
    assert c.ints() == [1, 1, 2, 5, 14, 42, 132, 429]


def test_schroder_routes():
    assert SE.schroder_series(10) == SE.schroder_by_fixed_point(10)
    assert SE.schroder_series(7).ints() == [1, 1, 3, 11, 45, 197, 903]


def test_catalan_shift_identity():
    c = SE.catalan_series(ORDER)
    assert 1 - 1 / c == PowerSeries.t(ORDER) * c


def _lyndon_brute(n):
    count = 0
    for pos in itertools.combinations(range(2 * n), n):
        w = tuple(1 if i in pos else 0 for i in range(2 * n))
        if all(w < w[k:] + w[:k] for k in range(1, 2 * n)):
            count += 1
    return count


@pytest.mark.parametrize("n", range(1, 7))
def test_balanced_lyndon(n):
    assert SE.balanced_lyndon_count(n) == _lyndon_brute(n)


def test_cqsym_primitives_values():
    assert SE.named_series("cqsym_primitives", 9).ints(1) == [1, 1, 3, 8, 25, 75, 245, 800]


def test_lie_generators_values():
    assert SE.named_series("lie_generators", 7).ints(1) == [1, 2, 9, 80, 901, 12564]


@pytest.mark.parametrize("n", range(1, 10))
def test_narayana(n):
    assert SE.narayana(n) == SE.narayana_closed(n)


def test_narayana_at_one_is_catalan():
    assert [SE.narayana_value(n, 1) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert isinstance(SE.narayana_value(3, Fraction(1, 2)), Fraction)


def test_unknown_series():
    with pytest.raises(KeyError):
        SE.named_series("nope")


def test_composition_checks():
    assert all(SE.composition_checks(10).values())


def test_series_report_all_green():
    for row in SE.series_report(5):
        assert all(row["checks"].values()), row["name"]
