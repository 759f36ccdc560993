"""The Hopf algebra of parking functions and its graded dual.

Basis F (free parking functions) multiplies by shifted shuffle and
comultiplies by deconcatenation followed by parkization.  The dual basis G
multiplies by convolution and comultiplies through breakpoints.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

from . import words as W
from .coeffs import Algebra, LinComb, TensorElem, register, register_dual
from .words import Word


def F(a: str | Iterable[int] = ()) -> LinComb:
    a = W.word(a)
    if not W.is_parking(a):
        raise ValueError(f"F needs a parking function, got {W.word_str(a)}")
    return LinComb.term("F", a)


def G(a: str | Iterable[int] = ()) -> LinComb:
    a = W.word(a)
    if not W.is_parking(a):
        raise ValueError(f"G needs a parking function, got {W.word_str(a)}")
    return LinComb.term("G", a)


def _tensor(basis: str, pairs: Iterable[tuple[Word, Word]]) -> TensorElem:
    return TensorElem((basis, basis), ((p, 1) for p in pairs))


# ---------------------------------------------------------------------------
# F basis

@lru_cache(maxsize=None)
def f_product(a1: Word, a2: Word) -> LinComb:
    return LinComb.from_keys("F", W.shifted_shuffle(a1, a2))


@lru_cache(maxsize=None)
def f_coproduct(a: Word) -> TensorElem:
    return _tensor("F", ((W.parkize(a[:k]), W.parkize(a[k:])) for k in range(len(a) + 1)))


@lru_cache(maxsize=None)
def f_half_coproducts(a: Word) -> tuple[TensorElem, TensorElem]:
    """Reduced coproduct split by comparing the maxima of the two halves."""
    left, right = [], []
    for k in range(1, len(a)):
        u, v = a[:k], a[k:]
        (left if max(v) < max(u) else right).append((W.parkize(u), W.parkize(v)))
    return _tensor("F", left), _tensor("F", right)


def _last_from_left(a1: Word, a2: Word) -> tuple[list[Word], list[Word]]:
    left, right = [], []
    for w in W.shifted_shuffle(a1, a2):
        (left if w[-1] <= len(a1) else right).append(w)
    return left, right


@lru_cache(maxsize=None)
def f_dendriform(a1: Word, a2: Word) -> tuple[LinComb, LinComb]:
    """Split of the F product by the origin of the last letter."""
    if not a1 or not a2:
        raise ValueError("half products need nonempty operands")
    left, right = _last_from_left(a1, a2)
    return LinComb.from_keys("F", left), LinComb.from_keys("F", right)


def f_antipode(a: Word) -> LinComb:
    """Antipode by the alternating sum over all factorizations into nonempty pieces."""
    a = tuple(a)
    n = len(a)
    if n == 0:
        return F()
    out = LinComb("F")
    for r in range(1, n + 1):
        for cuts in itertools.combinations(range(1, n), r - 1):
            bounds = (0, *cuts, n)
            term = F()
            for lo, hi in zip(bounds, bounds[1:]):
                term = term * F(W.parkize(a[lo:hi]))
            out = out + term.scale((-1) ** r)
    return out


# ---------------------------------------------------------------------------
# G basis

@lru_cache(maxsize=None)
def g_product(a1: Word, a2: Word) -> LinComb:
    return LinComb.from_keys("G", W.convolution(a1, a2))


def restrict_low(a: Sequence[int], b: int) -> Word:
    return W.parkize([x for x in a if x <= b])


def restrict_high(a: Sequence[int], b: int) -> Word:
    return W.parkize([x for x in a if x > b])


@lru_cache(maxsize=None)
def g_coproduct(a: Word) -> TensorElem:
    return _tensor("G", ((restrict_low(a, b), restrict_high(a, b)) for b in sorted(W.breakpoints(a))))


@lru_cache(maxsize=None)
def g_half_coproducts(a: Word) -> tuple[TensorElem, TensorElem]:
    """Reduced coproduct split by whether the last letter of a lies in the low part."""
    left, right = [], []
    for b in sorted(W.breakpoints(a)):
        if b in (0, len(a)):
            continue
        pair = (restrict_low(a, b), restrict_high(a, b))
        (left if a[-1] <= b else right).append(pair)
    return _tensor("G", left), _tensor("G", right)


@lru_cache(maxsize=None)
def g_tridendriform(a1: Word, a2: Word) -> tuple[LinComb, LinComb, LinComb]:
    """Split of the G product into (max in left, tie, max in right)."""
    if not a1 or not a2:
        raise ValueError("half products need nonempty operands")
    p = len(a1)
    parts: tuple[list, list, list] = ([], [], [])
    for a in W.convolution(a1, a2):
        mu, mv = max(a[:p]), max(a[p:])
        parts[0 if mv < mu else 1 if mv == mu else 2].append(a)
    return tuple(LinComb.from_keys("G", part) for part in parts)


def g_dendriform(a1: Word, a2: Word) -> tuple[LinComb, LinComb]:
    lt, eq, gt = g_tridendriform(a1, a2)
    return lt, eq + gt


# operations on whole elements -------------------------------------------------

def _binary(op, index: int):
    def apply(x: LinComb, y: LinComb) -> LinComb:
        out = LinComb(x.basis)
        for k1, c1 in x.as_dict().items():
            for k2, c2 in y.as_dict().items():
                out = out + op(k1, k2)[index].scale(c1 * c2)
        return out
    return apply


g_left = _binary(g_tridendriform, 0)
g_middle = _binary(g_tridendriform, 1)
g_right = _binary(g_tridendriform, 2)
f_left = _binary(f_dendriform, 0)
f_right = _binary(f_dendriform, 1)


def g_succ(x: LinComb, y: LinComb) -> LinComb:
    """Dendriform right product: tie plus strict right."""
    return g_middle(x, y) + g_right(x, y)


# ---------------------------------------------------------------------------
# internal product and its dual coproduct

def biword_parkize(u: Sequence[int], v: Sequence[int], stride: int | None = None) -> Word:
    """Parkize the biword whose columns are the pairs (u_i, v_i) in lexicographic order."""
    if len(u) != len(v):
        raise ValueError("biword rows must have equal length")
    stride = 2 * len(u) if stride is None else stride
    return W.parkize([(x - 1) * stride + y for x, y in zip(u, v)])


def internal_f(a1: Sequence[int], a2: Sequence[int]) -> LinComb:
    if len(a1) != len(a2):
        raise ValueError("internal product needs equal degrees")
    return F(biword_parkize(a1, a2))


def internal(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb("F")
    for k1, c1 in x.as_dict().items():
        for k2, c2 in y.as_dict().items():
            if len(k1) == len(k2):
                out = out + internal_f(k1, k2).scale(c1 * c2)
    return out


INTERNAL_CAP = 5


@lru_cache(maxsize=None)
def _internal_table(n: int) -> dict[Word, list[tuple[Word, Word]]]:
    table: dict[Word, list[tuple[Word, Word]]] = {}
    pfs = W.parking_functions(n)
    for a1 in pfs:
        for a2 in pfs:
            table.setdefault(biword_parkize(a1, a2), []).append((a1, a2))
    return table


def delta_internal_g(a: str | Sequence[int], cap: int = INTERNAL_CAP) -> TensorElem:
    a = W.word(a)
    if len(a) > cap:
        raise ValueError(f"degree {len(a)} exceeds the internal-coproduct cap {cap}")
    return _tensor("G", _internal_table(len(a)).get(a, []))


# ---------------------------------------------------------------------------
# generators, multiplicative bases, morphisms

def free_generator_report(side: str, n: int) -> tuple[int, list[Word]]:
    test = {"F": W.is_connected, "G": W.is_anticonnected}[side]
    gens = [a for a in W.parking_functions(n) if test(a)]
    return len(gens), gens


def multiplicative_f(a: Sequence[int]) -> LinComb:
    out = F()
    for piece in W.connected_factorization(a):
        out = out * F(piece)
    return out


def multiplicative_g(d: Sequence[int]) -> LinComb:
    """Product of G over the anti-connected pieces of d, read right to left through the mirror."""
    pieces = W.connected_factorization(tuple(reversed(d)))
    out = G()
    for piece in reversed(pieces):
        out = out * G(tuple(reversed(piece)))
    return out


def phi_embed(sigma: Sequence[int]) -> LinComb:
    sigma = tuple(sigma)
    if not W.is_permutation(sigma):
        raise ValueError(f"not a permutation: {W.word_str(sigma)}")
    target = W.inverse(sigma)
    return LinComb.from_keys("G", (a for a in W.parking_functions(len(sigma))
                                   if W.standardize(a) == target))


def phi(x: LinComb) -> LinComb:
    return x.linear_map(phi_embed, "G")


def eta_qsym(x: LinComb) -> LinComb:
    return x.map_keys(W.descent_composition, "F_qsym")


def parking_functions_of_type(c: Sequence[int]) -> list[Word]:
    c = tuple(c)
    return [a for a in W.parking_functions(sum(c)) if W.type_composition(a) == c]


def v_basis(c: Sequence[int]) -> LinComb:
    return LinComb.from_keys("F", parking_functions_of_type(c))


def all_parking_sum(n: int) -> LinComb:
    return LinComb.from_keys("F", W.parking_functions(n))


def prime_sum(n: int) -> LinComb:
    return LinComb.from_keys("F", W.prime_parking_functions(n))


# ---------------------------------------------------------------------------
# registration

PQSYM = register(Algebra(
    name="PQSym", basis="F",
    product_rule=f_product, coproduct_rule=f_coproduct,
    basis_of_degree=W.parking_functions,
    half_coproduct_rule=f_half_coproducts,
))

PQSYM_DUAL = register(Algebra(
    name="PQSym*", basis="G",
    product_rule=g_product, coproduct_rule=g_coproduct,
    basis_of_degree=W.parking_functions,
    half_coproduct_rule=g_half_coproducts,
))

register_dual("F", "G")
