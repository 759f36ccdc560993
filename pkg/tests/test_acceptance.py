"""Acceptance criteria 1 to 14; conftest prints one PASS/FAIL line per criterion."""
from __future__ import annotations

import random
from collections import Counter
from math import comb

import pytest

from parkhopf import cqsym as C
from parkhopf import ncsf as N
from parkhopf import pqsym as P
from parkhopf import realize as R
from parkhopf import scqsym as SC
from parkhopf import series as SE
from parkhopf import sqsym as S
from parkhopf import words as W
from parkhopf.coeffs import (ALGEBRAS, coproduct, dual_pairs, half_coproducts, primitive_dims, rank,
                             totally_primitive_dims)
from parkhopf.dendriform import g_bidendriform_report, g_tridendriform_report, word_tridendriform_report
from parkhopf.verify import _morphism_checks, run_suite

from helpers import lin, ten


def _catalan(n):
    return comb(2 * n, n) // (n + 1)


# ---------------------------------------------------------------------------
# 1. dimension tables

def test_criterion_01_dimension_tables():
    assert [len(W.parking_functions(n)) for n in range(1, 6)] == [1, 3, 16, 125, 1296]
    assert [len(W.prime_parking_functions(n)) for n in range(1, 6)] == [1, 1, 4, 27, 256]
    assert [len(W.nondecreasing_parking_functions(n)) for n in range(1, 6)] == [1, 2, 5, 14, 42]
    assert [len(W.nondecreasing_parking_functions(n)) for n in range(1, 6)] == [_catalan(n) for n in range(1, 6)]
    assert [S.class_count(n) for n in range(1, 6)] == [1, 3, 11, 45, 197]
    assert [len(W.segmented_compositions(n)) for n in range(1, 9)] == [3 ** (n - 1) for n in range(1, 9)]


# ---------------------------------------------------------------------------
# 2. type histogram

def test_criterion_02_type_histogram():
    hist = Counter(W.type_composition(a) for a in W.parking_functions(4))
    order = [(4,), (3, 1), (1, 3), (2, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2), (1, 1, 1, 1)]
    assert [hist[c] for c in order] == [27, 16, 16, 6, 12, 12, 12, 24]
    assert sum(hist.values()) == 125
    assert W.type_composition((9, 6, 6, 1, 4, 2, 2, 7, 2)) == (1, 4, 3, 1)


# ---------------------------------------------------------------------------
# 3. golden expansions

F, G = P.F, P.G
GOLDENS = {
    "F1 F11": (lambda: F("1") * F("11"), lambda: lin(F, "122 212 221")),
    "F1 F12": (lambda: F("1") * F("12"), lambda: lin(F, "123 213 231")),
    "F1 F21": (lambda: F("1") * F("21"), lambda: lin(F, "132 312 321")),
    "F12 F11": (lambda: F("12") * F("11"), lambda: lin(F, "1233 1323 1332 3123 3132 3312")),
    "F211 F131": (lambda: F("211") * F("131"), lambda: lin(
        F, "211464 214164 214614 214641 241164 241614 241641 246114 246141 246411 "
           "421164 421614 421641 426114 426141 426411 462114 462141 462411 464211")),
    "coproduct F121": (lambda: coproduct(F("121")), lambda: ten(F, "/121 1/21 12/1 121/")),
    "coproduct F3132": (lambda: coproduct(F("3132")), lambda: ten(F, "/3132 1/132 21/21 212/1 3132/")),
    "coproduct F1643165": (lambda: coproduct(F("1643165")), lambda: ten(
        F, "/1643165 1/532154 12/32154 132/2143 1432/132 15431/21 154315/1 1643165/")),
    "antipode F122": (lambda: P.f_antipode((1, 2, 2)), lambda: lin(F, "212 221 -213 -231 -321")),
    "G1 G1": (lambda: G("1") * G("1"), lambda: lin(G, "11 12 21")),
    "G1 G11": (lambda: G("1") * G("11"), lambda: lin(G, "111 122 211 311")),
    "G1 G12": (lambda: G("1") * G("12"), lambda: lin(G, "112 113 123 212 213 312")),
    "G1 G21": (lambda: G("1") * G("21"), lambda: lin(G, "121 131 132 221 231 321")),
    "G12 G11": (lambda: G("12") * G("11"), lambda: lin(
        G, "1211 1222 1233 1311 1322 1411 1422 2311 2411 3411")),
    "G211 G131": (lambda: G("211") * G("131"), lambda: lin(
        G, "211131 211141 211151 211161 211242 211252 211262 211353 211363 211464 "
           "322131 322141 322151 322161 433141 433151 433161 433131 544131")),
    "coproduct G121": (lambda: coproduct(G("121")), lambda: ten(G, "/121 121/")),
    "coproduct G131": (lambda: coproduct(G("131")), lambda: ten(G, "/131 11/1 131/")),
    "coproduct G3132": (lambda: coproduct(G("3132")), lambda: ten(G, "/3132 1/221 12/11 3132/")),
    "coproduct G164821657": (lambda: coproduct(G("164821657")), lambda: ten(
        G, "/164821657 121/315324 1421/24213 14215/1312 164821657/")),
    "G12 left G212": (lambda: P.g_left(G("12"), G("212")), lambda: lin(
        G, "13212 14212 14313 14323 15212 15313 15323 24313 24212 34212 23212 25212 25313 35212 45212")),
    "G12 right G212": (lambda: P.g_succ(G("12"), G("212")), lambda: lin(
        G, "12212 12313 12323 12414 12424 12434 13313 13323 13414 13424 23313 23414")),
    "G12 middle G212": (lambda: P.g_middle(G("12"), G("212")), lambda: lin(G, "12212 13313 13323 23313")),
    "left coproduct G1252754": (lambda: half_coproducts(G("1252754"))[0],
                                lambda: ten(G, "125254/1 1224/131")),
    "right coproduct G1252754": (lambda: half_coproducts(G("1252754"))[1],
                                 lambda: ten(G, "122/2421 1/141643")),
    "internal coproduct G4121": (lambda: P.delta_internal_g("4121"), lambda: ten(G, " ".join(
        [f"{a}/{b}" for a in ("2111", "3111", "4111") for b in ("1232", "1121", "2121", "3121", "4121")]
        + ["1111/4121"]))),
    "F122 in matrices": (lambda: sorted(R.matrices_with_reading((1, 2, 2))),
                         lambda: sorted([((1, 1, 0), (0, 1, 0)), ((1, 0, 0), (0, 1, 0), (0, 1, 0))])),
    "matrix reading": (lambda: R.matrix_reading(((0, 1, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0))),
                       lambda: (2, 3, 1, 2)),
    "PS11|335|6 PS112": (lambda: S.PS("11|335|6") * S.PS("112"),
                         lambda: lin(S.PS, "11|335|6778 11|335|6|778")),
    "QS1|2 QS1": (lambda: S.QS("1|2") * S.QS("1"),
                  lambda: lin(S.QS, "1|23 1|22 12|3 11|3 11|2 1|2|3")),
    "coproduct PS11|3": (lambda: coproduct(S.PS("11|3")), lambda: ten(
        S.PS, "/11|3 1/1|2 1/11 12/1 1|2/1 11|3/")),
    "PS11|34 in ribbons": (lambda: S.ps_to_rs(S.PS("11|34")), lambda: lin(S.RS, "11|34 11|33")),
    "RS11|3346 in PS": (lambda: S.rs_to_ps(S.RS("11|3346")),
                        lambda: lin(S.PS, "11|3346 -11|3336 -11|3344 11|3333")),
    "RS11|3 RS113": (lambda: S.RS("11|3") * S.RS("113"), lambda: lin(S.RS, "11|3|446 11|3446 11|3336")),
    "PCat11 PCat1233": (lambda: C.PCat("11") * C.PCat("1233"), lambda: lin(C.PCat, "113455")),
    "PCat1124 PCat1223": (lambda: C.PCat("1124") * C.PCat("1223"), lambda: lin(C.PCat, "11245667")),
    "coproduct PCat1124": (lambda: coproduct(C.PCat("1124")), lambda: ten(
        C.PCat, "/1124 1/112 1/113 1/123 11/12 12/11 2*12/12 112/1 113/1 123/1 1124/")),
    "MM1 MM12": (lambda: C.MM("1") * C.MM("12"), lambda: lin(C.MM, "112 113 122 3*123")),
    "MM12 MM11": (lambda: C.MM("12") * C.MM("11"), lambda: lin(
        C.MM, "1112 1113 1114 1123 1124 1134 1222 1223 1224 1233")),
    "PCat113346 in ribbons": (lambda: C.pcat_to_rcat(C.PCat("113346")), lambda: lin(
        C.RCat, "113346 113344 113336 113333 111146 111144 111116 111111")),
    "RCat113346 in PCat": (lambda: C.rcat_to_pcat(C.RCat("113346")), lambda: lin(
        C.PCat, "113346 -113344 -113336 113333 -111146 111144 111116 -111111")),
    "RCat11224 RCat113": (lambda: C.RCat("11224") * C.RCat("113"), lambda: lin(C.RCat, "11224668 11224448")),
    "RCat113 RCat11224": (lambda: C.RCat("113") * C.RCat("11224"), lambda: lin(C.RCat, "11344557 11333557")),
    "gamma M21": (lambda: C.gamma_embed((2, 1)), lambda: lin(C.MM, "112 113")),
    "internal coproduct MM112": (lambda: C.delta_star_mm("112"), lambda: ten(C.MM, "111/112")),
    "PSC12|1 PSC2|11": (lambda: SC.PSC("12|1") * SC.PSC("2|11"), lambda: lin(SC.PSC, "12|12|11 12|1|2|11")),
    "QSC1 QSC2|1": (lambda: SC.QSC("1") * SC.QSC("2|1"), lambda: lin(SC.QSC, "3|1 12|1 2|2 2|1|1 2|11")),
    "QSC1 QSC11|1": (lambda: SC.QSC("1") * SC.QSC("11|1"), lambda: lin(
        SC.QSC, "111|1 21|1 1|11|1 1|2|1 11|11 11|2 11|1|1")),
    "QSC1|1 squared": (lambda: SC.QSC("1|1") * SC.QSC("1|1"), lambda: lin(
        SC.QSC, "2*1|11|1 1|1|11 11|11 11|1|1 1|1|1|1 2|11 2|1|1 2|2 2*1|2|1 1|1|2 11|2")),
    "coproduct QSC12|1": (lambda: coproduct(SC.QSC("12|1")), lambda: ten(SC.QSC, "/12|1 1/2|1 12/1 12|1/")),
    "FSC1 FSC11|1": (lambda: SC.FSC("1") * SC.FSC("11|1"), lambda: lin(SC.FSC, "21|1 1|2|1 11|2 11|1|1")),
    "FSC1 FSC2|1": (lambda: SC.FSC("1") * SC.FSC("2|1"), lambda: lin(SC.FSC, "3|1 1|2|1 2|2 2|1|1")),
    "PSC11|2 as PS": (lambda: SC.psc_to_ps(SC.PSC("11|2")), lambda: lin(S.PS, "12|33")),
    "PSC112 as PS": (lambda: SC.psc_to_ps(SC.PSC("112")), lambda: lin(S.PS, "1233")),
    "QSC12|1 as QS": (lambda: SC.qsc_to_qs(SC.QSC("12|1")), lambda: lin(S.QS, "122|3 122|4")),
    "g3": (lambda: N.lagrange_g(3), lambda: N.S(3) + N.S(2, 1).scale(2) + N.S(1, 2) + N.S(1, 1, 1)),
    "f3": (lambda: N.f_from_g(3), lambda: N.S(3) + N.S(2, 1)),
}


def test_golden_table_is_large_enough():
    assert len(GOLDENS) >= 30


@pytest.mark.parametrize("name", list(GOLDENS))
def test_criterion_03_golden_expansions(name):
    computed, expected = GOLDENS[name]
    assert computed() == expected()


# ---------------------------------------------------------------------------
# 4. internal products

def test_criterion_04_internal_products():
    assert P.internal(F("211"), F("211")) == F("311")
    assert P.internal(F("31143231"), F("23571713")) == F("61385451")
    assert C.internal(C.PCat("1123"), C.PCat("1224")) == lin(C.PCat, "2*1134 5*1234")
    matrices = set(C.integer_matrices(W.evaluation((1, 1, 2, 3)), W.evaluation((1, 2, 2, 4))))
    expected = {((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1)), ((1, 1, 0, 0), (0, 0, 0, 1), (0, 1, 0, 0)),
               ((1, 0, 0, 1), (0, 1, 0, 0), (0, 1, 0, 0)), ((0, 2, 0, 0), (1, 0, 0, 0), (0, 0, 0, 1)),
               ((0, 2, 0, 0), (0, 0, 0, 1), (1, 0, 0, 0)), ((0, 1, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0)),
               ((0, 1, 0, 1), (0, 1, 0, 0), (1, 0, 0, 0))}
    assert matrices == expected
    for checks in (run_suite("internal", 3),):
        by_name = {c.name: c for c in checks}
        assert by_name["F internal associativity n=3"].passed
        assert by_name["PCat internal associativity n=3"].passed


# ---------------------------------------------------------------------------
# 5. Hopf axioms and duality

def test_criterion_05_hopf_axioms_and_duality():
    checks = run_suite("hopf", 4)
    failing = [c.name for c in checks if not c.passed]
    assert not failing, failing
    primary = {"F", "G", "PS", "QS", "PCat", "MM", "PSC", "QSC"}
    assert primary <= set(ALGEBRAS)
    tested = {c.name.split()[0] for c in checks}
    assert primary <= tested
    pairs = set(dual_pairs())
    assert {("F", "G"), ("PS", "QS"), ("MM", "PCat"), ("PSC", "QSC")} <= pairs
    duality = run_suite("duality", 4)
    assert all(c.passed for c in duality), [c.name for c in duality if not c.passed]


# ---------------------------------------------------------------------------
# 6. bidendriform and tridendriform

def test_criterion_06_dendriform_structures():
    report = g_bidendriform_report(4)
    assert all(not v for v in report.values()), {k: v[:2] for k, v in report.items() if v}
    assert not g_tridendriform_report(4)
    assert not word_tridendriform_report(6, 4)


# ---------------------------------------------------------------------------
# 7. primitive dimensions

F_TOTALLY_PRIMITIVE = ["123 -122 -112 111", "311 -211", "113 -112", "131 -121", "132 -131", "231 -121",
                       "213 -212"]
G_TOTALLY_PRIMITIVE = ["122 -212", "131 -311", "312 -132", "111", "112", "121", "211"]


def test_criterion_07_primitive_dimensions():
    assert totally_primitive_dims("F", 3) == 7
    assert totally_primitive_dims("G", 3) == 7
    for ctor, basis in ((F, F_TOTALLY_PRIMITIVE), (G, G_TOTALLY_PRIMITIVE)):
        elements = [lin(ctor, terms) for terms in basis]
        for x in elements:
            left, right = half_coproducts(x)
            assert not left.as_dict() and not right.as_dict(), x
        assert rank(x.as_dict() for x in elements) == 7
    assert primitive_dims("QS", 3) == 6
    assert primitive_dims("PS", 3) == 7
    assert [primitive_dims("PCat", n) for n in range(1, 5)] == [1, 1, 3, 8]


# ---------------------------------------------------------------------------
# 8. realizations

def test_criterion_08_realizations():
    checks = run_suite("realization", 4)
    assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]
    names = {c.name for c in checks}
    assert {"G product on words, k=8", "G product on words, k=10", "F product and coproduct on matrices",
            "MM product on commutative polynomials"} <= names


# ---------------------------------------------------------------------------
# 9. series

def _ints(name, n):
    return [int(c) for c in SE.named_series(name, n + 1).coefficients[1:n + 1]]


def test_criterion_09_series():
    assert _ints("TP", 5) == [1, 1, 7, 66, 786]
    assert _ints("connected", 5) == [1, 2, 11, 92, 1014]
    assert _ints("trialgebra_generators", 5) == [1, 0, 5, 50, 634]
    assert _ints("cqsym_primitives", 5) == [1, 1, 3, 8, 25]
    little = [int(c) for c in SE.named_series("schroder", 10).coefficients]
    large = _ints("large_schroder", 9)
    assert large[1:] == [2 * s for s in little[1:9]]
    for n in range(1, 8):
        assert SE.narayana(n) == SE.narayana_closed(n)
        assert SE.narayana_value(n, 2) == little[n]
    for row in SE.series_report(5):
        assert all(row["checks"].values()), row


# ---------------------------------------------------------------------------
# 10. Lagrange inversion

def test_criterion_10_lagrange_inversion():
    for n in range(1, 7):
        g = N.lagrange_g(n)
        assert g == N.inverse_one_minus_f(n)
        assert g == N.g_by_enumeration(n)
    assert N.lagrange_g(3) == N.S(3) + N.S(2, 1).scale(2) + N.S(1, 2) + N.S(1, 1, 1)
    little = [int(c) for c in SE.named_series("schroder", 7).coefficients]
    for n in range(1, 7):
        assert N.sqsym_dim_via_ribbons(n) == little[n] == N.schroder_closed_form(n)


# ---------------------------------------------------------------------------
# 11. prime counts by partition

def test_criterion_11_prime_counts_by_partition():
    for n in range(2, 7):
        for lam in W.partitions(n):
            assert C.prime_count_by_partition(lam) == C.prime_count_formula(lam), lam
    assert C.prime_count_by_partition((3, 2, 2)) == 10
    assert C.prime_count_formula((3, 2, 2)) == 10


# ---------------------------------------------------------------------------
# 12. bijections

def test_criterion_12_bijections():
    for n in range(1, 8):
        ndpf = W.nondecreasing_parking_functions(n)
        images = [W.ndpf_to_noncrossing(pi) for pi in ndpf]
        assert all(W.is_noncrossing(b) for b in images)
        assert len(set(images)) == len(ndpf)
        assert [W.noncrossing_to_ndpf(b) for b in images] == list(ndpf)
    for n in range(2, 6):
        images = {}
        for q in S.class_list(n - 1):
            for branch in ("prime", "split"):
                p = S.schroder_bijection(q, branch)
                assert S.is_pqs(p) and len(p) == n
                assert S.schroder_inverse(p) == (branch, q)
                images[p] = (branch, q)
        assert set(images) == set(S.pqs_generators(n))
    for n in range(1, 6):
        for c in W.segmented_compositions(n):
            assert SC.psev(SC.detassmax(c)) == c
            assert SC.psev(SC.packed_ribbon(c)) == c
    assert SC.detassmax(W.seg("11|2")) == W.seg("12|33")


# ---------------------------------------------------------------------------
# 13. morphisms, J_n and the splitting formula

def test_criterion_13_morphisms_and_splitting():
    for name, check in _morphism_checks(4).items():
        assert not check(), name
    for n in range(1, 5):
        result = C.jn_tests(n)
        assert result["left_unit"] and result["right_formula"]
        if n >= 3:
            pi = result["right_unit_witness"]
            assert pi is not None and C.internal_pcat(pi, (1,) * n) != C.PCat(pi)
    assert C.internal_pcat((1, 1, 2), (1, 1, 1)) == C.PCat("113")
    assert C.internal(C.PCat("113"), C.J(3)) == C.J(2) * C.J(1)
    rng = random.Random(2024)
    tried = 0
    for i in range(60):
        n = 3 + i % 2
        parts = rng.randint(2, n)
        cut = sorted(rng.sample(range(1, n), parts - 1))
        sizes = [b - a for a, b in zip([0, *cut], [*cut, n])]
        factors = [rng.choice(W.nondecreasing_parking_functions(s)) for s in sizes]
        g = rng.choice(W.nondecreasing_parking_functions(n))
        lhs, rhs = C.splitting_check(factors, g)
        assert lhs == rhs, (factors, g)
        tried += 1
    assert tried >= 50


# ---------------------------------------------------------------------------
# 14. commutation witnesses, each asserted as an exact identity

def _bracket(x, y):
    return x * y - y * x


COMMUTATIONS = {
    "QS1 with QS11 + QS12": (lambda: S.QS("1"), lambda: lin(S.QS, "11 12")),
    "QSC1 with QSC2 + QSC11": (lambda: SC.QSC("1"), lambda: lin(SC.QSC, "2 11")),
    "QSC1 with QSC12 - QSC1|2 + QSC11": (lambda: SC.QSC("1"), lambda: lin(SC.QSC, "12 -1|2 11")),
}


@pytest.mark.parametrize("name", list(COMMUTATIONS))
def test_criterion_14_commutation_witnesses(name):
    x, y = COMMUTATIONS[name]
    assert not _bracket(x(), y()).as_dict()
