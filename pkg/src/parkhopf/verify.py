"""Verification suites: each runs a family of exact checks and reports every failure."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import coeffs, cqsym, dendriform, ncsf, pqsym, realize, scqsym, series, sqsym
from . import words as W
from .coeffs import LinComb, algebra


@dataclass
class Check:
    suite: str
    name: str
    degree: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def counterexample(self) -> str | None:
        return None if self.passed else repr(self.failures[0])

    def as_dict(self) -> dict:
        return {"suite": self.suite, "name": self.name, "degree": self.degree, "passed": self.passed,
                "failures": len(self.failures), "counterexample": self.counterexample,
                "elapsed": round(self.elapsed, 3)}


def _run(suite: str, name: str, degree: int, fn: Callable[[], list]) -> Check:
    start = time.perf_counter()
    failures = fn()
    return Check(suite, name, degree, list(failures), time.perf_counter() - start)


def _keys_upto(basis: str, d: int, start: int = 1):
    alg = algebra(basis)
    return [k for n in range(start, d + 1) for k in alg.basis_of_degree(n)]


def _pairs(basis: str, d: int):
    alg = algebra(basis)
    for d1, d2 in coeffs.degree_tuples(2, d):
        yield from itertools.product(alg.basis_of_degree(d1), alg.basis_of_degree(d2))


# ---------------------------------------------------------------------------
# hopf: axioms on every registered basis, plus the morphisms between algebras

def _morphism_checks(d: int) -> dict[str, Callable[[], list]]:
    def phi():
        perms = [p for n in range(1, d) for p in itertools.permutations(range(1, n + 1))]
        return [(s, t) for s in perms for t in perms if len(s) + len(t) <= d
                and pqsym.phi(pqsym.F(s) * pqsym.F(t)) != pqsym.phi(pqsym.F(s)) * pqsym.phi(pqsym.F(t))]

    def eta():
        return [(a, b) for a, b in _pairs("F", d)
                if pqsym.eta_qsym(pqsym.F(a) * pqsym.F(b)) != pqsym.eta_qsym(pqsym.F(a)) * pqsym.eta_qsym(pqsym.F(b))]

    def gamma():
        return [(a, b) for a, b in _pairs("M_qsym", d) if not cqsym.gamma_is_morphism(a, b)]

    def ch():
        return [(a, b) for a, b in _pairs("PCat", d)
                if cqsym.ch_map(cqsym.PCat(a) * cqsym.PCat(b)) != cqsym.ch_map(cqsym.PCat(a)) * cqsym.ch_map(cqsym.PCat(b))]

    return {"morphism phi: FQSym -> PQSym*": phi, "morphism eta: PQSym -> QSym": eta,
            "morphism gamma: QSym -> CQSym*": gamma, "morphism ch: CQSym -> NCSF": ch}


def suite_hopf(d: int, seed: int = 0) -> list[Check]:
    out = []
    for basis in sorted(coeffs.ALGEBRAS):
        for name, fn in coeffs.HOPF_CHECKS.items():
            out.append(_run("hopf", f"{basis} {name}", d, lambda fn=fn, basis=basis: fn(basis, d)))
    for name, fn in _morphism_checks(d).items():
        out.append(_run("hopf", name, d, fn))
    return out


def suite_duality(d: int, seed: int = 0) -> list[Check]:
    return [_run("duality", f"{b1} / {b2}", d, lambda b1=b1, b2=b2: coeffs.check_duality(b1, b2, d))
            for b1, b2 in coeffs.dual_pairs()]


def suite_bidendriform(d: int, seed: int = 0) -> list[Check]:
    out = []
    for label, report in (("G", dendriform.g_bidendriform_report), ("F", dendriform.f_bidendriform_report)):
        start = time.perf_counter()
        rep = report(d)
        elapsed = time.perf_counter() - start
        out.extend(Check("bidendriform", f"{label} {name}", d, fails, elapsed / len(rep)) for name, fails in rep.items())
    return out


def suite_tridendriform(d: int, seed: int = 0) -> list[Check]:
    length = d + 2
    return [
        _run("tridendriform", "G basis", d, lambda: dendriform.g_tridendriform_report(d)),
        _run("tridendriform", f"words of total length <= {length} over [1..4]", length,
             lambda: dendriform.word_tridendriform_report(length, 4)),
        _run("tridendriform", "G product split", d,
             lambda: dendriform.check_split([pqsym.g_left, pqsym.g_middle, pqsym.g_right], lambda x, y: x * y,
                                            dendriform.basis_tuples("G", 2, d))),
    ]


# ---------------------------------------------------------------------------
# internal products

def _internal_associativity(mul, keys) -> list:
    return [(a, b, c) for a, b, c in itertools.product(keys, repeat=3)
            if mul(mul(a, b), c) != mul(a, mul(b, c))]


def _delta_internal_is_dual(n: int) -> list:
    bad = []
    pfs = W.parking_functions(n)
    for a in pfs:
        expected = {}
        for a1, a2 in itertools.product(pfs, repeat=2):
            c = pqsym.internal_f(a1, a2).coeff(a)
            if c:
                expected[(a1, a2)] = c
        if pqsym.delta_internal_g(a).as_dict() != expected:
            bad.append(a)
    return bad


def suite_internal(d: int, seed: int = 0) -> list[Check]:
    n = min(d, 3)
    f_keys = [pqsym.F(a) for a in W.parking_functions(n)]
    p_keys = [cqsym.PCat(p) for p in W.nondecreasing_parking_functions(n)]
    m = min(d, 4)
    return [
        _run("internal", f"F internal associativity n={n}", n, lambda: _internal_associativity(pqsym.internal, f_keys)),
        _run("internal", f"PCat internal associativity n={n}", n, lambda: _internal_associativity(cqsym.internal, p_keys)),
        _run("internal", f"PCat internal agrees with the F route, n<={m}", m, lambda: [
            (p, q) for k in range(1, m + 1) for p in W.nondecreasing_parking_functions(k)
            for q in W.nondecreasing_parking_functions(k) if cqsym.internal_pcat(p, q) != cqsym.internal_via_f(p, q)]),
        _run("internal", f"J_n left unit, n<={m}", m, lambda: [
            k for k in range(1, m + 1) if not cqsym.jn_tests(k)["left_unit"]]),
        _run("internal", f"internal coproduct of G is dual to the F internal product, n<={n}", n,
             lambda: [a for k in range(1, n + 1) for a in _delta_internal_is_dual(k)]),
        _run("internal", "splitting formula on random tuples at n=3,4", 4, lambda: _random_splittings(seed, 60)),
    ]


def _random_splittings(seed: int, count: int) -> list:
    rng = random.Random(seed)
    bad = []
    for i in range(count):
        n = 3 if i % 2 else 4
        parts = rng.randint(1, min(3, n))
        cut = sorted(rng.sample(range(1, n), parts - 1))
        sizes = [b - a for a, b in zip([0, *cut], [*cut, n])]
        factors = [rng.choice(W.nondecreasing_parking_functions(s)) for s in sizes]
        g = rng.choice(W.nondecreasing_parking_functions(n))
        lhs, rhs = cqsym.splitting_check(factors, g)
        if lhs != rhs:
            bad.append((factors, g))
    return bad


# ---------------------------------------------------------------------------
# ribbon bases: change of basis transports the structure

RIBBON_PAIRS = (
    ("RS", "PS", sqsym.rs_to_ps, sqsym.ps_to_rs),
    ("RCat", "PCat", cqsym.rcat_to_pcat, cqsym.pcat_to_rcat),
    ("R_ncsf", "S", ncsf.r_to_s, ncsf.s_to_r),
    ("F_qsym", "M_qsym", ncsf.fq_to_m, ncsf.m_to_fq),
    ("FSC", "QSC", scqsym.fsc_to_qsc, scqsym.qsc_to_fsc),
    ("RSC", "PSC", scqsym.rsc_to_psc, scqsym.psc_to_rsc),
)


def _transport_checks(ribbon: str, base: str, down, up, d: int) -> dict[str, Callable[[], list]]:
    alg = algebra(ribbon)

    def round_trip():
        return [k for k in _keys_upto(ribbon, d) if up(down(alg.element(k))) != alg.element(k)]

    def product():
        return [(a, b) for a, b in _pairs(ribbon, d)
                if down(alg.element(a) * alg.element(b)) != down(alg.element(a)) * down(alg.element(b))]

    def coproduct():
        bad = []
        for k in _keys_upto(ribbon, d):
            x = alg.element(k)
            mapped = coeffs.coproduct(x).map_slots([lambda kk: down(alg.element(kk))] * 2, (base, base))
            if mapped != coeffs.coproduct(down(x)):
                bad.append(k)
        return bad

    return {f"{ribbon} <-> {base} round trip": round_trip,
            f"{ribbon} product matches {base}": product,
            f"{ribbon} coproduct matches {base}": coproduct}


def suite_ribbons(d: int, seed: int = 0) -> list[Check]:
    out = []
    for ribbon, base, down, up in RIBBON_PAIRS:
        for name, fn in _transport_checks(ribbon, base, down, up, d).items():
            out.append(_run("ribbons", name, d, fn))
    out.append(_run("ribbons", "SCQSym ribbons map onto SQSym ribbons", d, lambda: [
        k for k in _keys_upto("PSC", d) if scqsym.psc_to_ps(scqsym.rsc_to_psc(scqsym.RSC(k)))
        != sqsym.rs_to_ps(sqsym.RS(scqsym.detassmax(k)))]))
    return out


# ---------------------------------------------------------------------------
# realizations

def _g_product_realized(d: int, k: int) -> list:
    return [(a, b) for a, b in _pairs("G", d)
            if realize.g_realize(pqsym.G(a) * pqsym.G(b), k)
            != realize.g_realize(pqsym.G(a), k) * realize.g_realize(pqsym.G(b), k)]


def _g_coproduct_realized(d: int) -> list:
    return [a for a in _keys_upto("G", d)
            if realize.ordered_sum_split(a, len(a), len(a)) != coeffs.coproduct(pqsym.G(a))]


def _f_matrices(d: int) -> list:
    bad = []
    to_mat = realize.f_in_matrices
    for a, b in _pairs("F", d):
        x, y = pqsym.F(a), pqsym.F(b)
        if to_mat(x * y) != realize.matrix_product_of(to_mat(x), to_mat(y)):
            bad.append(("product", a, b))
    for a in _keys_upto("F", d):
        x = pqsym.F(a)
        mapped = coeffs.coproduct(x).map_slots([lambda k: to_mat(pqsym.F(k))] * 2, ("Mat", "Mat"))
        if mapped != realize.matrix_coproduct_of(to_mat(x)):
            bad.append(("coproduct", a))
    return bad


def _mm_realized(d: int, k: int) -> list:
    return [(a, b) for a, b in _pairs("MM", d)
            if cqsym.poly_realize(cqsym.MM(a) * cqsym.MM(b), k)
            != cqsym.poly_mul(cqsym.poly_realize(cqsym.MM(a), k), cqsym.poly_realize(cqsym.MM(b), k))]


def _trees(d: int, k: int) -> list:
    return [t for n in range(1, d + 1) for t in realize.plane_trees(n)
            if realize.mm_tree(t, k) != realize.mm_tree_by_grafting(t, k)]


def suite_realization(d: int, seed: int = 0) -> list[Check]:
    return [
        _run("realization", "G product on words, k=8", d, lambda: _g_product_realized(d, 8)),
        _run("realization", "G product on words, k=10", d, lambda: _g_product_realized(d, 10)),
        _run("realization", "G coproduct by ordered sum of alphabets", d, lambda: _g_coproduct_realized(d)),
        _run("realization", "F product and coproduct on matrices", d, lambda: _f_matrices(d)),
        _run("realization", "MM product on commutative polynomials", d, lambda: _mm_realized(d, d)),
        _run("realization", "plane-tree polynomials by words and by grafting", d, lambda: _trees(d, d)),
    ]


# ---------------------------------------------------------------------------
# series and counts

def suite_series(d: int, seed: int = 0) -> list[Check]:
    out = []
    for row in series.series_report(d):
        for name, ok in row["checks"].items():
            out.append(Check("series", f"{row['name']}: {name}", d, [] if ok else [row["coefficients"]]))
    return out


def count_table(d: int) -> list[dict]:
    s = series.schroder_series(d + 2)
    u = series.named_series("large_schroder", d + 2)
    rows = []
    for n in range(1, d + 1):
        rows.append({
            "n": n,
            "PF": (len(W.parking_functions(n)), (n + 1) ** (n - 1)),
            "PPF": (len(W.prime_parking_functions(n)), (n - 1) ** (n - 1)),
            "NDPF": (len(W.nondecreasing_parking_functions(n)), int(series.catalan_series(d + 2)[n])),
            "classes": (sqsym.class_count(n), int(s[n])),
            "PQS": (len(sqsym.pqs_generators(n)), int(u[n])),
            "SEGCOMP": (len(W.segmented_compositions(n)), 3 ** (n - 1)),
        })
    return rows


def suite_counts(d: int, seed: int = 0) -> list[Check]:
    out = []
    start = time.perf_counter()
    table = count_table(d)
    elapsed = time.perf_counter() - start
    for kind in ("PF", "PPF", "NDPF", "classes", "PQS", "SEGCOMP"):
        bad = [(row["n"],) + row[kind] for row in table if row[kind][0] != row[kind][1]]
        values = ", ".join(str(row[kind][0]) for row in table)
        out.append(Check("counts", f"{kind}: {values}", d, bad, elapsed / 6))
    return out


SUITES: dict[str, Callable[[int, int], list[Check]]] = {
    "hopf": suite_hopf,
    "bidendriform": suite_bidendriform,
    "tridendriform": suite_tridendriform,
    "duality": suite_duality,
    "internal": suite_internal,
    "ribbons": suite_ribbons,
    "realization": suite_realization,
    "series": suite_series,
    "counts": suite_counts,
}


def run_suite(name: str, max_degree: int, seed: int = 0) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(max_degree, seed)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join([*SUITES, 'all'])}") from None
    return suite(max_degree, seed)
