"""The Catalan algebra: sums of F over rearrangement classes of parking functions, and its commutative dual.

PCat^pi is the sum of F_a over all rearrangements a of the nondecreasing
parking function pi.  MM_pi is the image of G_a in the quotient identifying
G_a and G_b whenever a and b have the same sorted word.
"""
from __future__ import annotations

import math
from collections import Counter
from itertools import combinations
from functools import lru_cache
from typing import Iterator, Sequence

from . import pqsym
from . import words as W
from .coeffs import (Algebra, LinComb, TensorElem, algebra, iterated_coproduct, register,
                     register_dual)
from .ncsf import m_product
from .words import Composition, Word


def _sorted_parking(pi: str | Sequence[int]) -> Word:
    pi = W.word(pi)
    if list(pi) != sorted(pi) or not W.is_parking(pi):
        raise ValueError(f"expected a nondecreasing parking function, got {W.word_str(pi)}")
    return pi


def PCat(pi: str | Sequence[int] = ()) -> LinComb:
    return LinComb.term("PCat", _sorted_parking(pi))


def MM(pi: str | Sequence[int] = ()) -> LinComb:
    return LinComb.term("MM", _sorted_parking(pi))


def RCat(pi: str | Sequence[int] = ()) -> LinComb:
    return LinComb.term("RCat", _sorted_parking(pi))


def J(n: int) -> LinComb:
    return PCat((1,) * n)


# ---------------------------------------------------------------------------
# PCat basis

def pcat_product(p1: Word, p2: Word) -> LinComb:
    return LinComb.term("PCat", W.shifted_concat(p1, p2))


def sub_multisets(pi: Sequence[int]) -> Iterator[tuple[Word, Word]]:
    """Each distinct sub-multiset of pi with its complement, both sorted."""
    counts = sorted(Counter(pi).items())

    def rec(i: int, left: list[int], right: list[int]):
        if i == len(counts):
            yield tuple(left), tuple(right)
            return
        value, m = counts[i]
        for k in range(m + 1):
            yield from rec(i + 1, left + [value] * k, right + [value] * (m - k))

    yield from rec(0, [], [])


@lru_cache(maxsize=None)
def pcat_coproduct(pi: Word) -> TensorElem:
    return TensorElem(("PCat", "PCat"), (((W.parkize(u), W.parkize(v)), 1) for u, v in sub_multisets(pi)))


def pcat_to_f(x: LinComb) -> LinComb:
    return x.linear_map(lambda pi: LinComb.from_keys("F", W.multiset_permutations(pi)), "F")


# ---------------------------------------------------------------------------
# MM basis and its commutative realization

@lru_cache(maxsize=None)
def mm_product(p1: Word, p2: Word) -> LinComb:
    return LinComb.from_keys("MM", (tuple(sorted(a)) for a in W.convolution(p1, p2)))


@lru_cache(maxsize=None)
def mm_coproduct(pi: Word) -> TensorElem:
    return TensorElem(("MM", "MM"), (((pi[:b], W.shift(pi[b:], -b)), 1) for b in sorted(W.breakpoints(pi))))


Poly = Counter  # exponent vector -> coefficient


def mm_realize(pi: Sequence[int], k: int) -> Poly:
    """Commutative polynomial in x_1..x_k: one monomial per increasing relabeling of pi parkizing back to pi."""
    pi = _sorted_parking(pi)
    out: Poly = Counter()
    for w in W.parking_fiber(pi, k):
        out[_exponents(w, k)] += 1
    return out


def _exponents(w: Sequence[int], k: int) -> tuple[int, ...]:
    counts = Counter(w)
    return tuple(counts.get(i, 0) for i in range(1, k + 1))


def poly_realize(x: LinComb, k: int) -> Poly:
    out: Poly = Counter()
    for pi, c in x.as_dict().items():
        for mono, m in mm_realize(pi, k).items():
            out[mono] += c * m
    return +out


def poly_mul(p: Poly, q: Poly) -> Poly:
    out: Poly = Counter()
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
    return +out


def poly_truncate(p: Poly, k: int) -> Poly:
    """Drop monomials using variables beyond x_k."""
    return +Counter({e[:k]: c for e, c in p.items() if not any(e[k:])})


def monomial_qsym(c: Composition, k: int) -> Poly:
    """Monomial quasi-symmetric polynomial M_c in x_1..x_k."""
    out: Poly = Counter()
    for support in combinations(range(1, k + 1), len(c)):
        e = [0] * k
        for i, part in zip(support, c):
            e[i - 1] = part
        out[tuple(e)] += 1
    return out


def gamma_embed(c: Composition) -> LinComb:
    c = tuple(c)
    return LinComb.from_keys("MM", (pi for pi in W.nondecreasing_parking_functions(sum(c))
                                    if W.pack_evaluation(pi) == c))


def gamma(x: LinComb) -> LinComb:
    return x.linear_map(gamma_embed, "MM")


# ---------------------------------------------------------------------------
# Catalan ribbons

def successors(pi: Word) -> list[Word]:
    """Merge two consecutive distinct letters, the larger taking the value of the smaller."""
    values = sorted(set(pi))
    return [tuple(x if v == y else v for v in pi) for x, y in zip(values, values[1:])]


@lru_cache(maxsize=None)
def upper_set(pi: Word) -> tuple[Word, ...]:
    seen = {pi}
    stack = [pi]
    while stack:
        for s in successors(stack.pop()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return tuple(sorted(seen, key=W.length_lex))


def rcat_expand(pi: Sequence[int]) -> LinComb:
    pi = _sorted_parking(pi)
    d = len(set(pi))
    return LinComb("PCat", ((p, (-1) ** (d - len(set(p)))) for p in upper_set(pi)))


def pcat_to_rcat(x: LinComb) -> LinComb:
    return x.linear_map(lambda pi: LinComb.from_keys("RCat", upper_set(pi)), "RCat")


def rcat_to_pcat(x: LinComb) -> LinComb:
    return x.linear_map(rcat_expand, "PCat")


def rcat_product(p1: Word, p2: Word) -> LinComb:
    if not p1 or not p2:
        return LinComb.term("RCat", p1 + p2)
    q = W.shift(p2, len(p1))
    low = q[0]
    glued = tuple(max(p1) if x == low else x for x in q)
    return LinComb.from_keys("RCat", [p1 + q, p1 + glued])


def rcat_coproduct(pi: Word) -> TensorElem:
    t = TensorElem(("PCat", "PCat"))
    for p, c in rcat_expand(pi).as_dict().items():
        t = t + pcat_coproduct(p).scale(c)
    return t.map_slots([lambda p: pcat_to_rcat(PCat(p))] * 2, ("RCat", "RCat"))


# ---------------------------------------------------------------------------
# internal product

def integer_matrices(rows: Sequence[int], cols: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Nonnegative integer matrices with the given row and column sums, depth first."""
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return

    def fill_row(total: int, caps: list[int], j: int) -> Iterator[tuple[int, ...]]:
        if j == len(caps) - 1:
            if total <= caps[j]:
                yield (total,)
            return
        rest = sum(caps[j + 1:])
        for x in range(max(0, total - rest), min(total, caps[j]) + 1):
            for tail in fill_row(total - x, caps, j + 1):
                yield (x, *tail)

    def rec(i: int, caps: list[int], acc: list[tuple[int, ...]]):
        if i == len(rows):
            if not any(caps):
                yield tuple(acc)
            return
        for row in fill_row(rows[i], caps, 0):
            yield from rec(i + 1, [c - x for c, x in zip(caps, row)], acc + [row])

    yield from rec(0, list(cols), [])


def matrix_word(m: Sequence[Sequence[int]]) -> Word:
    """Parkized lexicographic biword of a matrix."""
    top, bottom = [], []
    for i, row in enumerate(m, 1):
        for j, a in enumerate(row, 1):
            top.extend([i] * a)
            bottom.extend([j] * a)
    return pqsym.biword_parkize(top, bottom)


@lru_cache(maxsize=None)
def internal_pcat(p1: Word, p2: Word) -> LinComb:
    if len(p1) != len(p2):
        raise ValueError("internal product needs equal degrees")
    return LinComb.from_keys("PCat", (matrix_word(m) for m in
                                      integer_matrices(W.evaluation(p1), W.evaluation(p2))))


def internal(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb("PCat")
    for k1, c1 in x.as_dict().items():
        for k2, c2 in y.as_dict().items():
            if len(k1) == len(k2):
                out = out + internal_pcat(k1, k2).scale(c1 * c2)
    return out


def internal_via_f(p1: Word, p2: Word) -> LinComb:
    """The same product computed in the F basis and folded back onto rearrangement classes."""
    out = pqsym.internal(pcat_to_f(PCat(p1)), pcat_to_f(PCat(p2)))
    folded: dict[Word, object] = {}
    for a, c in out.as_dict().items():
        folded.setdefault(tuple(sorted(a)), c)
    result = LinComb("PCat", folded)
    if pcat_to_f(result) != out:
        raise AssertionError("internal product left the rearrangement-class span")
    return result


def internal_tensor(s: TensorElem, t: TensorElem) -> TensorElem:
    """Slotwise internal product of two tensors of equal arity."""
    out: dict = {}
    for ks, c1 in s.as_dict().items():
        for ls, c2 in t.as_dict().items():
            if any(len(a) != len(b) for a, b in zip(ks, ls)):
                continue
            factors = [internal_pcat(a, b) for a, b in zip(ks, ls)]
            for key, c in _tensor_terms(factors):
                out[key] = out.get(key, 0) + c * c1 * c2
    return TensorElem(s.bases, out)


def _tensor_terms(factors: list[LinComb]):
    if not factors:
        yield (), 1
        return
    for rest, c in _tensor_terms(factors[1:]):
        for k, ck in factors[0].as_dict().items():
            yield (k, *rest), ck * c


def multiply_all(t: TensorElem) -> LinComb:
    out = LinComb("PCat")
    for ks, c in t.as_dict().items():
        term = PCat()
        for k in ks:
            term = term * PCat(k)
        out = out + term.scale(c)
    return out


def splitting_check(factors: Sequence[Word], g: Word) -> tuple[LinComb, LinComb]:
    """Both sides of (f_1...f_r) * g = mu_r[(f_1 x ... x f_r) *_r Delta^r g]."""
    lhs_left = PCat()
    for f in factors:
        lhs_left = lhs_left * PCat(f)
    lhs = internal(lhs_left, PCat(g))
    r = len(factors)
    fs = TensorElem(("PCat",) * r, {tuple(factors): 1})
    rhs = multiply_all(internal_tensor(fs, iterated_coproduct(PCat(g), r)))
    return lhs, rhs


def j_power(pi: Sequence[int]) -> LinComb:
    """Product of J over the letter multiplicities of pi."""
    out = PCat()
    for m in W.pack_evaluation(pi):
        out = out * J(m)
    return out


def jn_tests(n: int) -> dict:
    basis = W.nondecreasing_parking_functions(n)
    jn = (1,) * n
    left_unit = all(internal_pcat(jn, pi) == PCat(pi) for pi in basis)
    right_formula = all(internal_pcat(pi, jn) == j_power(pi) for pi in basis)
    witness = next((pi for pi in basis if internal_pcat(pi, jn) != PCat(pi)), None)
    return {"n": n, "left_unit": left_unit, "right_formula": right_formula, "right_unit_witness": witness}


def rcat_star_jn(pi: Sequence[int]) -> LinComb:
    pi = _sorted_parking(pi)
    return pcat_to_rcat(internal(rcat_expand(pi), J(len(pi))))


def rcat_star_jn_expected(pi: Sequence[int]) -> LinComb:
    pi = _sorted_parking(pi)
    word: Word = ()
    for m in W.pack_evaluation(pi):
        word = W.shifted_concat(word, (1,) * m)
    return RCat(word)


@lru_cache(maxsize=None)
def _internal_table(n: int) -> dict[Word, dict[tuple[Word, Word], object]]:
    basis = W.nondecreasing_parking_functions(n)
    table: dict[Word, dict] = {}
    for p1 in basis:
        for p2 in basis:
            for pi, c in internal_pcat(p1, p2).as_dict().items():
                table.setdefault(pi, {})[(p1, p2)] = c
    return table


def delta_star_mm(pi: Sequence[int]) -> TensorElem:
    pi = _sorted_parking(pi)
    return TensorElem(("MM", "MM"), _internal_table(len(pi)).get(pi, {}))


# ---------------------------------------------------------------------------
# characteristic map and counting

def ch_map(x: LinComb) -> LinComb:
    return x.map_keys(W.pack_evaluation, "S")


def gamma_is_morphism(c1: Composition, c2: Composition) -> bool:
    return gamma(m_product(tuple(c1), tuple(c2))) == gamma_embed(c1) * gamma_embed(c2)


def prime_count_by_partition(lam: Sequence[int]) -> int:
    lam = tuple(sorted(lam, reverse=True))
    n = sum(lam)
    return sum(1 for pi in W.nondecreasing_parking_functions(n)
               if W.is_prime(pi) and tuple(sorted(W.pack_evaluation(pi), reverse=True)) == lam)


def prime_count_formula(lam: Sequence[int]) -> int:
    lam = tuple(lam)
    n, ell = sum(lam), len(lam)
    if n < 2:
        raise ValueError("the formula needs n >= 2")
    q, r = divmod(math.comb(n - 1, ell) * W.multinomial(*Counter(lam).values()), n - 1)
    if r:
        raise ArithmeticError(f"non-integral count for {lam}")
    return q


def connected_ndpf(n: int) -> list[Word]:
    return [pi for pi in W.nondecreasing_parking_functions(n) if W.is_connected(pi)]


# ---------------------------------------------------------------------------
# registration

CQSYM = register(Algebra(
    name="CQSym", basis="PCat",
    product_rule=pcat_product, coproduct_rule=pcat_coproduct,
    basis_of_degree=W.nondecreasing_parking_functions, cocommutative=True,
))

CQSYM_DUAL = register(Algebra(
    name="CQSym*", basis="MM",
    product_rule=mm_product, coproduct_rule=mm_coproduct,
    basis_of_degree=W.nondecreasing_parking_functions,
))

CQSYM_RIBBON = register(Algebra(
    name="CQSym (ribbons)", basis="RCat",
    product_rule=rcat_product, coproduct_rule=rcat_coproduct,
    basis_of_degree=W.nondecreasing_parking_functions, cocommutative=True,
))

register_dual("PCat", "MM")
