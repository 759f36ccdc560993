import itertools

import pytest

from parkhopf import pqsym as P
from parkhopf import words as W
from parkhopf.coeffs import LinComb, antipode, coproduct, pairing, rank, tensor_pairing

from helpers import lin, ten

F, G = P.F, P.G


def test_unit_laws():
    assert F("") * F("131") == F("131") == F("131") * F("")
    assert coproduct(F("1")) == ten(F, "/1 1/")


@pytest.mark.parametrize("n", range(1, 5))
def test_power_of_g1_sums_all_parking_functions(n):
    x = G("")
    for _ in range(n):
        x = x * G("1")
    assert x == LinComb.from_keys("G", W.parking_functions(n))


def test_product_restricted_to_permutations_is_fqsym():
    for s, t in itertools.product(W.enumerate_kind("PERM", 2), repeat=2):
        assert all(W.is_permutation(a) for a in (F(s) * F(t)).as_dict())


def test_pairing_is_dual():
    assert pairing(F("121"), G("121")) == 1
    assert pairing(F("121"), G("112")) == 0


def test_product_coproduct_adjunction_degree_3():
    for a in W.parking_functions(1):
        for b in W.parking_functions(2):
            for c in W.parking_functions(3):
                assert pairing(F(a) * F(b), G(c)) == tensor_pairing(ten(F, f"{W.word_str(a)}/{W.word_str(b)}"),
                                                                    coproduct(G(c)))


def test_antipode_agrees_with_generic_recursion():
    for n in range(1, 4):
        for a in W.parking_functions(n):
            assert P.f_antipode(a) == antipode(F(a))


def test_internal_goldens():
    assert P.internal(F("211"), F("112")) == F("312")
    assert P.internal(F("211"), F("121")) == F("321")
    assert P.internal(F("112"), F("312")) == F("213")


def test_internal_needs_equal_degree():
    with pytest.raises(ValueError):
        P.internal_f((1, 2), (1,))


def test_internal_coproduct_cap():
    with pytest.raises(ValueError):
        P.delta_internal_g((1,) * 6)


def test_internal_coproduct_of_g1():
    assert P.delta_internal_g((1,)) == ten(G, "1/1")


def test_internal_coproduct_dual_to_internal_product():
    n = 3
    pfs = W.parking_functions(n)
    for c in pfs:
        dc = P.delta_internal_g(c)
        for a, b in itertools.product(pfs, repeat=2):
            assert pairing(P.internal(F(a), F(b)), G(c)) == dc.as_dict().get((a, b), 0)


@pytest.mark.parametrize("side", ["F", "G"])
def test_free_generator_counts(side):
    assert [P.free_generator_report(side, n)[0] for n in range(1, 5)] == [1, 2, 11, 92]


def test_multiplicative_basis_is_triangular():
    for n in range(1, 5):
        for a in W.parking_functions(n):
            x = P.multiplicative_f(a).as_dict()
            assert x[a] == 1
            assert all(k > a for k in x if k != a)


def test_multiplicative_g_spans():
    for n in range(1, 4):
        assert rank(P.multiplicative_g(d).as_dict() for d in W.parking_functions(n)) == len(W.parking_functions(n))


def test_phi():
    assert P.phi(F("1")) == G("1")
    assert P.phi(F("12")) == lin(G, "11 12")
    with pytest.raises(ValueError):
        P.phi_embed((1, 1))


def test_eta():
    assert P.eta_qsym(F("131")) == LinComb.term("F_qsym", (2, 1))


def test_v_basis():
    assert P.v_basis((3,)) == lin(F, "111 112 121 211")
    for n in range(1, 5):
        total = sum((P.v_basis(c) for c in W.compositions(n)), LinComb("F"))
        assert total == P.all_parking_sum(n)


def test_prime_sum_by_inversion():
    for n in range(1, 5):
        total = LinComb("F")
        for c in W.compositions(n):
            term = F("")
            for i in c:
                term = term * P.all_parking_sum(i)
            total = total + term.scale((-1) ** (len(c) - 1))
        assert total == P.prime_sum(n)


def test_tridendriform_pieces_sum_to_product():
    for a, b in itertools.product(W.parking_functions(2), W.parking_functions(2)):
        lt, mid, gt = P.g_tridendriform(a, b)
        assert lt + mid + gt == G(a) * G(b)
        assert P.g_succ(G(a), G(b)) == mid + gt


def test_f_dendriform_pieces_sum_to_product():
    for a, b in itertools.product(W.parking_functions(2), W.parking_functions(3)):
        lt, gt = P.f_dendriform(a, b)
        assert lt + gt == F(a) * F(b)


def test_biword_parkize_example():
    assert P.biword_parkize((2, 1, 1), (2, 1, 1)) == (3, 1, 1)


@pytest.mark.parametrize("n", range(1, 5))
def test_biword_stride_n_and_2n_agree(n):
    for a, b in itertools.product(W.parking_functions(n), repeat=2):
        assert P.biword_parkize(a, b, stride=n) == P.biword_parkize(a, b, stride=2 * n)
