"""Noncommutative symmetric functions (S and ribbon bases) and quasi-symmetric functions (M and F bases).

Only what the parking-function algebras need: products, coproducts and the
change of basis S <-> R, the functional equation g = sum_k S_k g^k solved
degree by degree, and the character count of hypoplactic classes.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Sequence

from . import words as W
from .coeffs import Algebra, LinComb, TensorElem, register, register_dual
from .words import Composition


def S(*parts: int) -> LinComb:
    return LinComb.term("S", tuple(parts))


def R(*parts: int) -> LinComb:
    return LinComb.term("R_ncsf", tuple(parts))


def M(*parts: int) -> LinComb:
    return LinComb.term("M_qsym", tuple(parts))


def FQ(*parts: int) -> LinComb:
    return LinComb.term("F_qsym", tuple(parts))


def _split_pairs(c: Composition):
    """All ways to cut the ribbon of c into a left and right ribbon."""
    n = sum(c)
    ds = W.descent_set(c)
    for k in range(n + 1):
        left = W.composition_from_descents(k, (d for d in ds if d < k)) if k else ()
        right = W.composition_from_descents(n - k, (d - k for d in ds if d > k)) if k < n else ()
        yield left, right


# ---------------------------------------------------------------------------
# NCSF

def s_product(i: Composition, j: Composition) -> LinComb:
    return LinComb.term("S", tuple(i) + tuple(j))


@lru_cache(maxsize=None)
def s_coproduct(i: Composition) -> TensorElem:
    out = TensorElem(("S", "S"), {((), ()): 1})
    for part in i:
        piece = TensorElem(("S", "S"), (((((k,) if k else ()), ((part - k,) if part - k else ())), 1)
                                        for k in range(part + 1)))
        out = TensorElem(("S", "S"), _tensor_concat(out, piece))
    return out


def _tensor_concat(s: TensorElem, t: TensorElem) -> dict:
    out: dict = {}
    for (a1, b1), c1 in s.as_dict().items():
        for (a2, b2), c2 in t.as_dict().items():
            key = (a1 + a2, b1 + b2)
            out[key] = out.get(key, 0) + c1 * c2
    return out


def s_to_r(x: LinComb) -> LinComb:
    return x.linear_map(lambda i: LinComb.from_keys("R_ncsf", W.coarsenings(i)), "R_ncsf")


def r_to_s(x: LinComb) -> LinComb:
    return x.linear_map(lambda i: LinComb("S", ((j, (-1) ** (len(i) - len(j))) for j in W.coarsenings(i))), "S")


def r_product(i: Composition, j: Composition) -> LinComb:
    if not i or not j:
        return LinComb.term("R_ncsf", tuple(i) + tuple(j))
    glued = tuple(i[:-1]) + (i[-1] + j[0],) + tuple(j[1:])
    return LinComb.from_keys("R_ncsf", [tuple(i) + tuple(j), glued])


@lru_cache(maxsize=None)
def r_coproduct(i: Composition) -> TensorElem:
    t = s_coproduct_of(r_to_s(R(*i)))
    return t.map_slots([lambda k: s_to_r(S(*k))] * 2, ("R_ncsf", "R_ncsf"))


def s_coproduct_of(x: LinComb) -> TensorElem:
    out = TensorElem(("S", "S"))
    for k, c in x.as_dict().items():
        out = out + s_coproduct(k).scale(c)
    return out


def omega(x: LinComb) -> LinComb:
    """Add one to the first part of every S index; the unit goes to S^1."""
    return x.map_keys(lambda i: (i[0] + 1, *i[1:]) if i else (1,), "S")


def _components(series: dict[int, LinComb], n: int) -> LinComb:
    return series.get(n, LinComb("S"))


def _series_product(a: dict[int, LinComb], b: dict[int, LinComb], n: int) -> dict[int, LinComb]:
    return {m: sum((_components(a, j) * _components(b, m - j) for j in range(m + 1)), LinComb("S"))
            for m in range(n + 1)}


@lru_cache(maxsize=None)
def _lagrange(n: int) -> tuple[LinComb, ...]:
    """Components g_0..g_n of the solution of g = sum_k S_k g^k."""
    g: dict[int, LinComb] = {0: S()}
    for m in range(1, n + 1):
        total = LinComb("S")
        power = {0: S()}
        for k in range(1, m + 1):
            # power becomes g^k, truncated to the degree still needed
            power = _series_product(power, g, m - k)
            total = total + S(k) * _components(power, m - k)
        g[m] = total
    return tuple(g[m] for m in range(n + 1))


def lagrange_g(n: int) -> LinComb:
    return _lagrange(n)[n]


def f_from_g(n: int) -> LinComb:
    if n == 0:
        return LinComb("S")
    return omega(lagrange_g(n - 1))


def inverse_one_minus_f(n: int) -> LinComb:
    """Degree-n component of (1 - f)^(-1) with f_m = omega(g_{m-1})."""
    h = [S()]
    for m in range(1, n + 1):
        h.append(sum((f_from_g(j) * h[m - j] for j in range(1, m + 1)), LinComb("S")))
    return h[n]


def g_by_enumeration(n: int) -> LinComb:
    return LinComb.from_keys("S", (W.pack_evaluation(pi) for pi in W.nondecreasing_parking_functions(n)))


def gn_equals_parking_count(n: int) -> dict:
    g = lagrange_g(n)
    enum = g_by_enumeration(n)
    weighted = sum(c * W.multinomial(*i) for i, c in g.as_dict().items())
    return {
        "n": n,
        "recursion_equals_enumeration": g == enum,
        "fixed_point_equals_inverse": g == inverse_one_minus_f(n),
        "monomials": len(g),
        "coefficient_sum": int(sum(g.as_dict().values())),
        "weighted_total": int(weighted),
        "parking_count": (n + 1) ** (n - 1),
    }


def sqsym_dim_via_ribbons(n: int) -> int:
    return int(sum(s_to_r(lagrange_g(n)).as_dict().values()))


def schroder_closed_form(n: int) -> int:
    total = sum(comb(n + 1, k) * comb(2 * n - k, n - k) for k in range(n + 1))
    q, r = divmod(total, 2 * n + 2)
    assert r == 0
    return q


# ---------------------------------------------------------------------------
# QSym

def quasi_shuffle(i: Sequence[int], j: Sequence[int]) -> list[Composition]:
    """Quasi-shuffles with multiplicity: interleave parts, optionally adding two facing parts."""
    if not i:
        return [tuple(j)]
    if not j:
        return [tuple(i)]
    a, b = i[0], j[0]
    return ([(a, *w) for w in quasi_shuffle(i[1:], j)]
            + [(b, *w) for w in quasi_shuffle(i, j[1:])]
            + [(a + b, *w) for w in quasi_shuffle(i[1:], j[1:])])


@lru_cache(maxsize=None)
def m_product(i: Composition, j: Composition) -> LinComb:
    return LinComb.from_keys("M_qsym", quasi_shuffle(i, j))


def m_coproduct(i: Composition) -> TensorElem:
    return TensorElem(("M_qsym", "M_qsym"), (((i[:k], i[k:]), 1) for k in range(len(i) + 1)))


def permutation_of_descents(c: Composition) -> tuple[int, ...]:
    """Increasing runs of sizes c taking values from the top down, so descents fall exactly between runs."""
    out, top = [], sum(c)
    for part in c:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(out)


@lru_cache(maxsize=None)
def fq_product(i: Composition, j: Composition) -> LinComb:
    return LinComb.from_keys("F_qsym", (W.descent_composition(w) for w in
                                       W.shifted_shuffle(permutation_of_descents(i), permutation_of_descents(j))))


def fq_coproduct(i: Composition) -> TensorElem:
    return TensorElem(("F_qsym", "F_qsym"), ((pair, 1) for pair in _split_pairs(i)))


def m_to_fq(x: LinComb) -> LinComb:
    return x.linear_map(lambda i: LinComb("F_qsym", ((j, (-1) ** (len(j) - len(i))) for j in W.refinements(i))),
                        "F_qsym")


def fq_to_m(x: LinComb) -> LinComb:
    return x.linear_map(lambda i: LinComb.from_keys("M_qsym", W.refinements(i)), "M_qsym")


# ---------------------------------------------------------------------------
# registration

NCSF_S = register(Algebra(name="NCSF (S)", basis="S", product_rule=s_product,
                          coproduct_rule=s_coproduct, basis_of_degree=W.compositions, cocommutative=True))
NCSF_R = register(Algebra(name="NCSF (ribbons)", basis="R_ncsf", product_rule=r_product,
                          coproduct_rule=r_coproduct, basis_of_degree=W.compositions, cocommutative=True))
QSYM_M = register(Algebra(name="QSym (monomial)", basis="M_qsym", product_rule=m_product,
                          coproduct_rule=m_coproduct, basis_of_degree=W.compositions))
QSYM_F = register(Algebra(name="QSym (fundamental)", basis="F_qsym", product_rule=fq_product,
                          coproduct_rule=fq_coproduct, basis_of_degree=W.compositions))

register_dual("S", "M_qsym")
register_dual("R_ncsf", "F_qsym")
