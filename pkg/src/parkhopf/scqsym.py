"""The algebra of segmented compositions and its dual.

A segmented composition is a composition whose consecutive parts are
separated either by a comma or by a bar; it is stored as a `Segmented`
whose blocks are the bar-separated runs of parts.  PSC is the span of the
maximally unpacked Schröder class sums; QSC sums the dual classes sharing
a packed quasi-ribbon.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterator, Sequence

from . import sqsym
from . import words as W
from .coeffs import Algebra, LinComb, TensorElem, register, register_dual
from .ncsf import permutation_of_descents
from .words import Segmented

EMPTY = Segmented(())


def _segcomp(x: str | Segmented) -> Segmented:
    x = Segmented.parse(x) if isinstance(x, str) else x
    if any(p <= 0 for p in x.flat):
        raise ValueError(f"parts must be positive: {x}")
    return x


def PSC(x: str | Segmented) -> LinComb:
    return LinComb.term("PSC", _segcomp(x))


def QSC(x: str | Segmented) -> LinComb:
    return LinComb.term("QSC", _segcomp(x))


def FSC(x: str | Segmented) -> LinComb:
    return LinComb.term("FSC", _segcomp(x))


def RSC(x: str | Segmented) -> LinComb:
    return LinComb.term("RSC", _segcomp(x))


def weight(x: Segmented) -> int:
    return sum(x.flat)


def glue(x: Segmented, y: Segmented) -> Segmented:
    """Add the first part of y to the last part of x."""
    if not x.blocks or not y.blocks:
        return x.join(y, bar=False)
    head, tail = x.blocks[-1], y.blocks[0]
    middle = head[:-1] + (head[-1] + tail[0],) + tail[1:]
    return Segmented(x.blocks[:-1] + (middle,) + y.blocks[1:])


# ---------------------------------------------------------------------------
# packed quasi-ribbons

def psev(q: Segmented) -> Segmented:
    """Evaluation of a packed quasi-ribbon, barred where consecutive letters sit in different rows."""
    packed = W.pack(q.flat)
    row = {}
    for r, block in enumerate(Segmented.from_bars(packed, q.bars).blocks):
        for x in block:
            row[x] = r
    ev = W.pack_evaluation(packed)
    bars = [i for i in range(1, len(ev)) if row[i] != row[i + 1]]
    return Segmented.from_bars(ev, bars)


def packed_ribbon(c: Segmented) -> Segmented:
    """The packed quasi-ribbon with segmented evaluation c."""
    return _ribbon_with_values(c, lambda k, before: k + 1)


def detassmax(c: Segmented) -> Segmented:
    """The maximally unpacked parking quasi-ribbon whose packed form has segmented evaluation c."""
    return _ribbon_with_values(c, lambda k, before: before + 1)


def _ribbon_with_values(c: Segmented, value) -> Segmented:
    parts, barred = c.flat, set(c.bars)
    flat, bars, before = [], [], 0
    for k, m in enumerate(parts):
        if k in barred:
            bars.append(len(flat))
        flat.extend([value(k, before)] * m)
        before += m
    return Segmented.from_bars(tuple(flat), bars)


# ---------------------------------------------------------------------------
# segmented augmented shuffle

def _tagged_quasi_shuffles(n1: int, n2: int) -> list[tuple[tuple, ...]]:
    """Quasi-shuffles of part indices; each output part is (i or None, j or None)."""
    @lru_cache(maxsize=None)
    def rec(i: int, j: int) -> tuple[tuple, ...]:
        if i == n1:
            return (tuple((None, jj) for jj in range(j, n2)),)
        if j == n2:
            return (tuple((ii, None) for ii in range(i, n1)),)
        return (tuple(((i, None),) + w for w in rec(i + 1, j))
                + tuple(((None, j),) + w for w in rec(i, j + 1))
                + tuple(((i, j),) + w for w in rec(i + 1, j + 1)))
    return list(rec(0, 0))


def segmented_augshuffle(x: Segmented, y: Segmented) -> list[Segmented]:
    """Quasi-shuffles of the underlying compositions, with bars placed by source."""
    p, q = x.flat, y.flat
    xbars, ybars = set(x.bars), set(y.bars)
    out = []
    for shape in _tagged_quasi_shuffles(len(p), len(q)):
        parts = [(p[i] if i is not None else 0) + (q[j] if j is not None else 0) for i, j in shape]
        bars = []
        for k in range(1, len(shape)):
            (i0, j0), (i1, j1) = shape[k - 1], shape[k]
            if (i0 is not None and i1 is not None and i1 in xbars) \
                    or (j0 is not None and j1 is not None and j1 in ybars) \
                    or (j0 is not None and i1 is not None):
                bars.append(k)
        out.append(Segmented.from_bars(tuple(parts), bars))
    return out


# ---------------------------------------------------------------------------
# PSC and QSC

def psc_product(x: Segmented, y: Segmented) -> LinComb:
    return LinComb.from_keys("PSC", [x.join(y, bar=True), x.join(y, bar=False)])


@lru_cache(maxsize=None)
def _augshuffle_table(n: int) -> dict[Segmented, dict[tuple[Segmented, Segmented], int]]:
    table: dict[Segmented, dict] = {}
    for k in range(n + 1):
        for x in W.segmented_compositions(k):
            for y in W.segmented_compositions(n - k):
                for z in segmented_augshuffle(x, y):
                    row = table.setdefault(z, {})
                    row[(x, y)] = row.get((x, y), 0) + 1
    return table


def psc_coproduct(c: Segmented) -> TensorElem:
    return TensorElem(("PSC", "PSC"), _augshuffle_table(weight(c)).get(c, {}))


def qsc_product(x: Segmented, y: Segmented) -> LinComb:
    return LinComb.from_keys("QSC", segmented_augshuffle(x, y))


def qsc_coproduct(c: Segmented) -> TensorElem:
    """Cuts between consecutive parts, at commas and at bars alike."""
    parts, bars = c.flat, set(c.bars)
    pairs = []
    for k in range(len(parts) + 1):
        left = Segmented.from_bars(parts[:k], [b for b in bars if b < k])
        right = Segmented.from_bars(parts[k:], [b - k for b in bars if b > k])
        pairs.append(((left, right), 1))
    return TensorElem(("QSC", "QSC"), pairs)


def psc_to_ps(x: LinComb) -> LinComb:
    return x.map_keys(detassmax, "PS")


def qsc_to_qs(x: LinComb) -> LinComb:
    def expand(c: Segmented) -> LinComb:
        n = weight(c)
        return LinComb.from_keys("QS", (q for q in sqsym.class_list(n) if psev(q) == c))
    return x.linear_map(expand, "QS")


def ps_to_psc(x: LinComb) -> LinComb:
    """Inverse of `psc_to_ps` on its image; raises on other keys."""
    inverse = {}
    for q in x.keys():
        c = psev(q)
        if detassmax(c) != q:
            raise ValueError(f"{q} is not maximally unpacked")
        inverse[q] = c
    return x.map_keys(inverse.__getitem__, "PSC")


def generators(n: int) -> list[Segmented]:
    """Segmented compositions with a bar between every pair of parts."""
    return [c for c in W.segmented_compositions(n) if len(c.blocks) == len(c.flat)]


# ---------------------------------------------------------------------------
# segmented permutations and the quasi-ribbon basis

def segmented_descent_composition(alpha: Segmented) -> Segmented:
    return Segmented(tuple(W.descent_composition(b) for b in alpha.blocks)) if alpha.blocks else EMPTY


def repr_segperm(c: Segmented) -> Segmented:
    """Increasing runs of the part sizes, filled from the top value down so every separator is a descent."""
    sigma = permutation_of_descents(c.flat)
    cuts = list(itertools.accumulate(c.flat))
    return Segmented.from_bars(sigma, [cuts[b - 1] for b in c.bars])


def segperm_shuffle(alpha: Segmented, beta: Segmented) -> list[Segmented]:
    """Shifted shuffle keeping original barred descents and barring descents between the two sources."""
    u, v = alpha.flat, W.shift(beta.flat, len(alpha.flat))
    ubars, vbars = set(alpha.bars), set(beta.bars)
    out = []
    for w, tags in W.shuffle_with_sources(u, v):
        index = [0, 0]
        origin = []
        for t in tags:
            index[t] += 1
            origin.append(index[t])
        bars = []
        for k in range(1, len(w)):
            if w[k - 1] < w[k]:
                continue
            if tags[k - 1] != tags[k]:
                bars.append(k)
            elif origin[k - 1] in (ubars if tags[k] == 0 else vbars):
                bars.append(k)
        out.append(Segmented.from_bars(w, bars))
    return out


def blockwise_refinements(c: Segmented) -> Iterator[Segmented]:
    for choice in itertools.product(*(W.refinements(b) for b in c.blocks)):
        yield Segmented(choice)


def blockwise_coarsenings(c: Segmented) -> Iterator[Segmented]:
    for choice in itertools.product(*(W.coarsenings(b) for b in c.blocks)):
        yield Segmented(choice)


def fsc_expand(c: Segmented) -> LinComb:
    return LinComb.from_keys("QSC", blockwise_refinements(c))


def fsc_to_qsc(x: LinComb) -> LinComb:
    return x.linear_map(fsc_expand, "QSC")


def qsc_to_fsc(x: LinComb) -> LinComb:
    def expand(c: Segmented) -> LinComb:
        return LinComb("FSC", ((d, (-1) ** (len(d.flat) - len(c.flat))) for d in blockwise_refinements(c)))
    return x.linear_map(expand, "FSC")


@lru_cache(maxsize=None)
def fsc_product(x: Segmented, y: Segmented) -> LinComb:
    return fsc_product_via(repr_segperm(x), repr_segperm(y))


def fsc_product_via(alpha: Segmented, beta: Segmented) -> LinComb:
    return LinComb.from_keys("FSC", (segmented_descent_composition(g) for g in segperm_shuffle(alpha, beta)))


def fsc_coproduct(c: Segmented) -> TensorElem:
    """Cuts at every position of the flat weight: at a comma, at a bar, or inside a part."""
    return TensorElem(("FSC", "FSC"), ((pair, 1) for pair in _weight_cuts(c)))


def _weight_cuts(c: Segmented) -> Iterator[tuple[Segmented, Segmented]]:
    parts, bars = c.flat, set(c.bars)
    yield EMPTY, c
    for k, part in enumerate(parts):
        for inner in range(1, part):
            left = Segmented.from_bars(parts[:k] + (inner,), [b for b in bars if b <= k])
            right = Segmented.from_bars((part - inner,) + parts[k + 1:], [b - k for b in bars if b > k])
            yield left, right
        if k < len(parts) - 1:
            left = Segmented.from_bars(parts[:k + 1], [b for b in bars if b <= k])
            right = Segmented.from_bars(parts[k + 1:], [b - k - 1 for b in bars if b > k + 1])
            yield left, right
    yield c, EMPTY


# ---------------------------------------------------------------------------
# ribbon basis

def rsc_expand(c: Segmented) -> LinComb:
    return LinComb("PSC", ((d, (-1) ** (len(c.flat) - len(d.flat))) for d in blockwise_coarsenings(c)))


def psc_to_rsc(x: LinComb) -> LinComb:
    return x.linear_map(lambda c: LinComb.from_keys("RSC", blockwise_coarsenings(c)), "RSC")


def rsc_to_psc(x: LinComb) -> LinComb:
    return x.linear_map(rsc_expand, "PSC")


def rsc_product(x: Segmented, y: Segmented) -> LinComb:
    if not x.blocks or not y.blocks:
        return LinComb.term("RSC", x.join(y, bar=False))
    return LinComb.from_keys("RSC", [x.join(y, bar=False), x.join(y, bar=True), glue(x, y)])


@lru_cache(maxsize=None)
def rsc_coproduct(c: Segmented) -> TensorElem:
    out = TensorElem(("PSC", "PSC"))
    for d, coeff in rsc_expand(c).as_dict().items():
        out = out + psc_coproduct(d).scale(coeff)
    return out.map_slots([lambda d: psc_to_rsc(PSC(d))] * 2, ("RSC", "RSC"))


# ---------------------------------------------------------------------------
# registration

SCQSYM = register(Algebra(
    name="SCQSym", basis="PSC", unit=EMPTY,
    product_rule=psc_product, coproduct_rule=psc_coproduct,
    basis_of_degree=W.segmented_compositions,
))

SCQSYM_DUAL = register(Algebra(
    name="SCQSym*", basis="QSC", unit=EMPTY,
    product_rule=qsc_product, coproduct_rule=qsc_coproduct,
    basis_of_degree=W.segmented_compositions,
))

SCQSYM_QUASI_RIBBON = register(Algebra(
    name="SCQSym* (quasi-ribbons)", basis="FSC", unit=EMPTY,
    product_rule=fsc_product, coproduct_rule=fsc_coproduct,
    basis_of_degree=W.segmented_compositions,
))

SCQSYM_RIBBON = register(Algebra(
    name="SCQSym (ribbons)", basis="RSC", unit=EMPTY,
    product_rule=rsc_product, coproduct_rule=rsc_coproduct,
    basis_of_degree=W.segmented_compositions,
))

register_dual("PSC", "QSC")
register_dual("RSC", "FSC")
