"""Concrete realizations: noncommutative polynomials, plane trees and 0/1 matrices."""
from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from . import words as W
from .coeffs import LinComb, TensorElem
from .words import Word


class WordPoly:
    """A noncommutative polynomial over the alphabet [1..k]."""

    __slots__ = ("k", "_terms")

    def __init__(self, k: int, terms: Mapping[Word, Fraction] | Iterable[tuple[Word, Fraction]] = ()):
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            w = tuple(w)
            if any(x < 1 or x > k for x in w):
                raise ValueError(f"word {W.word_str(w)} leaves the alphabet [1..{k}]")
            acc[w] = acc.get(w, 0) + Fraction(c)
        self.k = k
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def from_words(cls, k: int, ws: Iterable[Word]) -> "WordPoly":
        return cls(k, ((w, 1) for w in ws))

    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def _same_alphabet(self, other: "WordPoly") -> None:
        if self.k != other.k:
            raise ValueError("word polynomials over different alphabets")

    def __add__(self, other: "WordPoly") -> "WordPoly":
        if isinstance(other, int) and other == 0:
            return self
        self._same_alphabet(other)
        return WordPoly(self.k, itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __sub__(self, other: "WordPoly") -> "WordPoly":
        return self + other.scale(-1)

    def scale(self, c) -> "WordPoly":
        return WordPoly(self.k, {w: c * v for w, v in self._terms.items()})

    def __mul__(self, other: "WordPoly") -> "WordPoly":
        self._same_alphabet(other)
        return _combine(self, other, lambda u, v: True)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WordPoly):
            return NotImplemented
        return self.k == other.k and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{c}*{W.word_str(w)}" for w, c in sorted(self._terms.items()))
        return f"WordPoly(k={self.k}: {body or '0'})"


def _combine(p: WordPoly, q: WordPoly, keep) -> WordPoly:
    acc: dict[Word, Fraction] = {}
    for u, cu in p._terms.items():
        for v, cv in q._terms.items():
            if keep(u, v):
                acc[u + v] = acc.get(u + v, 0) + cu * cv
    return WordPoly(p.k, acc)


# ---------------------------------------------------------------------------
# G basis as polynomials

def g_polynomial(a: Sequence[int], k: int) -> WordPoly:
    return WordPoly.from_words(k, W.parking_fiber(tuple(a), k))


def g_realize(x: LinComb, k: int) -> WordPoly:
    out = WordPoly(k)
    for a, c in x.as_dict().items():
        out = out + g_polynomial(a, k).scale(c)
    return out


def ordered_sum_split(a: Sequence[int], k1: int, k2: int) -> TensorElem:
    """Evaluate G_a on an ordered sum of alphabets and read off the tensor.

    The lower alphabet is [1..k1]; the upper one is placed after a gap of
    len(a) letters, which models the ordered sum of two infinite alphabets
    (no letter of the upper block has a predecessor in the lower one).
    Raises if the word pairs do not assemble into products of G polynomials.
    """
    a = tuple(a)
    n = len(a)
    if k1 < n or k2 < n:
        raise ValueError("both alphabets must have at least len(a) letters")
    offset = k1 + n
    alphabet = list(range(1, k1 + 1)) + [offset + j for j in range(1, k2 + 1)]
    values = sorted(set(a))
    pairs: Counter = Counter()
    for image in itertools.combinations(alphabet, len(values)):
        relabel = dict(zip(values, image))
        w = tuple(relabel[x] for x in a)
        if W.parkize(w) != a:
            continue
        low = tuple(x for x in w if x <= k1)
        high = tuple(x - offset for x in w if x > k1)
        pairs[(low, high)] += 1
    grouped: dict[tuple[Word, Word], Counter] = {}
    for (low, high), c in pairs.items():
        grouped.setdefault((W.parkize(low), W.parkize(high)), Counter())[(low, high)] = c
    out = {}
    for (p1, p2), cell in grouped.items():
        expected = {(u, v) for u in W.parking_fiber(p1, k1) for v in W.parking_fiber(p2, k2)}
        coeffs = set(cell.values())
        if set(cell) != expected or len(coeffs) != 1:
            raise ArithmeticError(f"ordered-sum expansion of G_{W.word_str(a)} is not a tensor of G polynomials")
        out[(p1, p2)] = coeffs.pop()
    return TensorElem(("G", "G"), out)


# ---------------------------------------------------------------------------
# the three-way splitting of word concatenation

def word_trid(u: Sequence[int], v: Sequence[int], k: int | None = None) -> tuple[WordPoly, WordPoly, WordPoly]:
    if not u or not v:
        raise ValueError("tridendriform operations need nonempty words")
    u, v = tuple(u), tuple(v)
    k = k or max(max(u), max(v))
    slot = 0 if max(u) > max(v) else 1 if max(u) == max(v) else 2
    out = [WordPoly(k), WordPoly(k), WordPoly(k)]
    out[slot] = WordPoly(k, {u + v: 1})
    return tuple(out)


def trid_left(p: WordPoly, q: WordPoly) -> WordPoly:
    return _combine(p, q, lambda u, v: max(u) > max(v))


def trid_middle(p: WordPoly, q: WordPoly) -> WordPoly:
    return _combine(p, q, lambda u, v: max(u) == max(v))


def trid_right(p: WordPoly, q: WordPoly) -> WordPoly:
    return _combine(p, q, lambda u, v: max(u) < max(v))


# ---------------------------------------------------------------------------
# plane trees; a leaf is the empty tuple, a node the tuple of its children

PlaneTree = tuple
LEAF: PlaneTree = ()


def tree_of_word(w: Sequence[int]) -> PlaneTree:
    if not w:
        return LEAF
    m = max(w)
    pieces, current = [], []
    for x in w:
        if x == m:
            pieces.append(tuple(current))
            current = []
        else:
            current.append(x)
    pieces.append(tuple(current))
    return tuple(tree_of_word(p) for p in pieces)


def leaf_count(t: PlaneTree) -> int:
    return 1 if t == LEAF else sum(leaf_count(c) for c in t)


@lru_cache(maxsize=None)
def _trees_by_word(n: int, k: int) -> dict[PlaneTree, tuple[Word, ...]]:
    out: dict[PlaneTree, list[Word]] = {}
    for w in itertools.product(range(1, k + 1), repeat=n):
        out.setdefault(tree_of_word(w), []).append(w)
    return {t: tuple(ws) for t, ws in out.items()}


def mm_tree(t: PlaneTree, k: int) -> WordPoly:
    n = leaf_count(t) - 1
    return WordPoly.from_words(k, _trees_by_word(n, k).get(t, ()))


def mm_tree_by_grafting(t: PlaneTree, k: int) -> WordPoly:
    """Rebuild the tree polynomial from its subtrees with the three partial products."""
    if t == LEAF:
        raise ValueError("the leaf has no polynomial")
    generator = WordPoly.from_words(k, [(i,) for i in range(1, k + 1)])

    def block(sub: PlaneTree) -> WordPoly:
        return generator if sub == LEAF else trid_right(mm_tree_by_grafting(sub, k), generator)

    acc = block(t[0])
    for sub in t[1:-1]:
        acc = trid_middle(acc, block(sub))
    if t[-1] != LEAF:
        acc = trid_left(acc, mm_tree_by_grafting(t[-1], k))
    return acc


def plane_trees(n: int) -> list[PlaneTree]:
    """Trees with n+1 leaves and no unary node, reached as images of words over [1..n]."""
    return sorted(_trees_by_word(n, n), key=repr)


# ---------------------------------------------------------------------------
# 0/1 matrices realizing the F basis

Matrix = tuple[tuple[int, ...], ...]


def matrix_reading(m: Matrix) -> Word:
    return tuple(j + 1 for row in m for j, x in enumerate(row) if x)


def vertical_pack(m: Matrix) -> Matrix:
    return tuple(row for row in m if any(row))


def _from_rows_of_columns(rows: Sequence[Sequence[int]], width: int) -> Matrix:
    return tuple(tuple(1 if j + 1 in set(r) else 0 for j in range(width)) for r in rows)


def matrix_parkize(m: Matrix) -> Matrix:
    """Relabel the columns of the ones by the parkized reading word."""
    m = vertical_pack(m)
    reading = W.parkize(matrix_reading(m))
    rows, i = [], 0
    for row in m:
        ones = sum(row)
        rows.append(reading[i:i + ones])
        i += ones
    return _from_rows_of_columns(rows, len(reading))


def matrix_parkize_by_columns(m: Matrix) -> Matrix:
    """Delete the (always empty) defect column until the reading is parking."""
    m = [list(row) for row in vertical_pack(m)]
    ones = sum(map(sum, m))
    while (d := W._defect(matrix_reading(m))) <= ones:
        if any(row[d - 1] for row in m if d - 1 < len(row)):
            raise AssertionError("defect column is not empty")
        m = [row[:d - 1] + row[d:] for row in m]
    m = [(row + [0] * ones)[:ones] for row in m]
    return tuple(tuple(row) for row in m)


def matrices_with_reading(a: Sequence[int]) -> list[Matrix]:
    """Packed 0/1 matrices with len(a) columns whose reading word is a."""
    a = tuple(a)
    n = len(a)
    if n == 0:
        return [()]
    forced = [i for i in range(1, n) if a[i - 1] >= a[i]]
    optional = [i for i in range(1, n) if a[i - 1] < a[i]]
    out = []
    for r in range(len(optional) + 1):
        for extra in itertools.combinations(optional, r):
            cuts = [0, *sorted(forced + list(extra)), n]
            rows = [a[lo:hi] for lo, hi in zip(cuts, cuts[1:])]
            out.append(_from_rows_of_columns(rows, n))
    return sorted(out)


def f_in_matrices(x: LinComb) -> LinComb:
    return x.linear_map(lambda a: LinComb.from_keys("Mat", matrices_with_reading(a)), "Mat")


def _augmented_row_shuffles(p: int, q: int):
    """Sequences of steps: 0 = next row of the left, 1 = right, 2 = both merged."""
    def rec(i, j):
        if i == p and j == q:
            yield ()
            return
        if i < p:
            for rest in rec(i + 1, j):
                yield (0,) + rest
        if j < q:
            for rest in rec(i, j + 1):
                yield (1,) + rest
        if i < p and j < q:
            for rest in rec(i + 1, j + 1):
                yield (2,) + rest
    yield from rec(0, 0)


def matrix_product(m1: Matrix, m2: Matrix) -> LinComb:
    w1 = len(m1[0]) if m1 else 0
    w2 = len(m2[0]) if m2 else 0
    out = []
    for steps in _augmented_row_shuffles(len(m1), len(m2)):
        i = j = 0
        rows = []
        for s in steps:
            left = m1[i] if s in (0, 2) else (0,) * w1
            right = m2[j] if s in (1, 2) else (0,) * w2
            i += s in (0, 2)
            j += s in (1, 2)
            rows.append(tuple(left) + tuple(right))
        out.append(tuple(rows))
    return LinComb.from_keys("Mat", out)


def matrix_coproduct(m: Matrix) -> TensorElem:
    """Cut between consecutive rows and parkize both halves."""
    pairs = [(matrix_parkize(m[:k]), matrix_parkize(m[k:])) for k in range(len(m) + 1)]
    return TensorElem(("Mat", "Mat"), ((p, 1) for p in pairs))


def matrix_product_of(x: LinComb, y: LinComb) -> LinComb:
    out = LinComb("Mat")
    for p, c1 in x.as_dict().items():
        for q, c2 in y.as_dict().items():
            out = out + matrix_product(p, q).scale(c1 * c2)
    return out


def matrix_coproduct_of(x: LinComb) -> TensorElem:
    out = TensorElem(("Mat", "Mat"))
    for p, c in x.as_dict().items():
        out = out + matrix_coproduct(p).scale(c)
    return out
