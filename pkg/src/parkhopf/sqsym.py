"""Hypoplactic classes of parking functions: the Schröder algebra and its dual.

A class is encoded by its parking quasi-ribbon, a nondecreasing parking
function cut by bars that may only sit between distinct letters.  PS_q is
the sum of F_a over the class of q; QS_q is the image of G_a in the
quotient of the dual.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from . import pqsym
from . import words as W
from .coeffs import Algebra, LinComb, TensorElem, register, register_dual
from .words import Segmented, Word

EMPTY = Segmented(())


def PS(q: str | Segmented) -> LinComb:
    return LinComb.term("PS", _ribbon(q))


def QS(q: str | Segmented) -> LinComb:
    return LinComb.term("QS", _ribbon(q))


def RS(q: str | Segmented) -> LinComb:
    return LinComb.term("RS", _ribbon(q))


def _ribbon(q: str | Segmented) -> Segmented:
    q = Segmented.parse(q) if isinstance(q, str) else q
    if not is_quasi_ribbon(q):
        raise ValueError(f"not a parking quasi-ribbon: {q}")
    return q


def is_quasi_ribbon(q: Segmented) -> bool:
    flat = q.flat
    if list(flat) != sorted(flat) or not W.is_parking(flat):
        return False
    return all(left[-1] < right[0] for left, right in zip(q.blocks, q.blocks[1:]))


def psymbol(a: Sequence[int]) -> Segmented:
    """Sorted letters cut after each descent of the inverse standardization."""
    a = tuple(a)
    bars = W.descent_set(W.recoil_composition(a)) if a else ()
    return Segmented.from_bars(tuple(sorted(a)), bars)


def representative(q: Segmented) -> Word:
    """A member of the class: the blocks written from last to first."""
    return tuple(x for block in reversed(q.blocks) for x in block)


@lru_cache(maxsize=None)
def class_list(n: int) -> tuple[Segmented, ...]:
    out = []
    for pi in W.nondecreasing_parking_functions(n):
        ascents = [i for i in range(1, n) if pi[i - 1] < pi[i]]
        for r in range(len(ascents) + 1):
            for bars in combinations(ascents, r):
                out.append(Segmented.from_bars(pi, bars))
    return tuple(sorted(out, key=Segmented.sort_key))


def class_count(n: int) -> int:
    return len(class_list(n))


@lru_cache(maxsize=None)
def _classes(n: int) -> dict[Segmented, tuple[Word, ...]]:
    out: dict[Segmented, list[Word]] = {}
    for a in W.parking_functions(n):
        out.setdefault(psymbol(a), []).append(a)
    return {q: tuple(v) for q, v in out.items()}


def class_members(q: Segmented) -> tuple[Word, ...]:
    return _classes(len(q)).get(q, ())


def shift_ribbon(q: Segmented, k: int) -> Segmented:
    return q.map_flat(lambda x: x + k)


# ---------------------------------------------------------------------------
# PS basis

@lru_cache(maxsize=None)
def ps_product(q1: Segmented, q2: Segmented) -> LinComb:
    q2s = shift_ribbon(q2, len(q1))
    return LinComb.from_keys("PS", [q1.join(q2s, bar=True), q1.join(q2s, bar=False)])


def _lifted_coproduct_tally(q: Segmented) -> Counter:
    tally: Counter = Counter()
    for a in class_members(q):
        for k in range(len(a) + 1):
            tally[(W.parkize(a[:k]), W.parkize(a[k:]))] += 1
    return tally


@lru_cache(maxsize=None)
def ps_coproduct(q: Segmented) -> TensorElem:
    """Coproduct of a class sum, read off at class representatives."""
    out = {}
    for (u, v), c in _lifted_coproduct_tally(q).items():
        pu, pv = psymbol(u), psymbol(v)
        if u == representative(pu) and v == representative(pv):
            out[(pu, pv)] = c
    return TensorElem(("PS", "PS"), out)


def ps_coproduct_is_class_constant(q: Segmented) -> bool:
    """Every pair of members of the same two classes receives the same coefficient."""
    tally = _lifted_coproduct_tally(q)
    by_class: dict[tuple, set] = {}
    for (u, v), c in tally.items():
        by_class.setdefault((psymbol(u), psymbol(v)), set()).add(c)
    for (pu, pv), cs in by_class.items():
        full = len(class_members(pu)) * len(class_members(pv))
        seen = sum(1 for (u, v) in tally if psymbol(u) == pu and psymbol(v) == pv)
        if len(cs) != 1 or seen != full:
            return False
    return True


def ps_to_f(x: LinComb) -> LinComb:
    return x.linear_map(lambda q: LinComb.from_keys("F", class_members(q)), "F")


def f_to_ps(x: LinComb) -> LinComb:
    """Inverse of `ps_to_f` on class sums; raises on elements outside the image."""
    out = {}
    for a, c in x.as_dict().items():
        q = psymbol(a)
        if out.setdefault(q, c) != c:
            raise ValueError("element is not constant on hypoplactic classes")
    result = LinComb("PS", out)
    if ps_to_f(result) != x:
        raise ValueError("element is not a combination of class sums")
    return result


# ---------------------------------------------------------------------------
# QS basis

@lru_cache(maxsize=None)
def qs_product(q1: Segmented, q2: Segmented) -> LinComb:
    return LinComb.from_keys("QS", (psymbol(a) for a in W.convolution(representative(q1), representative(q2))))


def qs_product_via(a1: Word, a2: Word) -> LinComb:
    """QS product computed from arbitrary class members."""
    return LinComb.from_keys("QS", (psymbol(a) for a in W.convolution(a1, a2)))


@lru_cache(maxsize=None)
def qs_coproduct(q: Segmented) -> TensorElem:
    pairs = []
    for b in sorted(W.breakpoints(q.flat)):
        left, right = q.split_at(b)
        pairs.append((left, shift_ribbon(right, -b)))
    return TensorElem(("QS", "QS"), ((p, 1) for p in pairs))


def g_to_qs(x: LinComb) -> LinComb:
    return x.map_keys(psymbol, "QS")


# ---------------------------------------------------------------------------
# Schröder ribbons

def successors(q: Segmented) -> list[Segmented]:
    """Merge two consecutive distinct letters of one block, the larger taking the smaller value."""
    out = []
    for bi, block in enumerate(q.blocks):
        values = sorted(set(block))
        for x, y in zip(values, values[1:]):
            merged = tuple(x if v == y else v for v in block)
            out.append(Segmented(q.blocks[:bi] + (merged,) + q.blocks[bi + 1:]))
    return out


@lru_cache(maxsize=None)
def upper_set(q: Segmented) -> tuple[Segmented, ...]:
    seen = {q}
    stack = [q]
    while stack:
        for s in successors(stack.pop()):
            if s not in seen:
                seen.add(s)
                stack.append(s)
    return tuple(sorted(seen, key=Segmented.sort_key))


def _distinct(q: Segmented) -> int:
    return len(set(q.flat))


def rs_expand(q: Segmented) -> LinComb:
    return LinComb("PS", ((p, (-1) ** (_distinct(q) - _distinct(p))) for p in upper_set(q)))


def ps_to_rs(x: LinComb) -> LinComb:
    return x.linear_map(lambda q: LinComb.from_keys("RS", upper_set(q)), "RS")


def rs_to_ps(x: LinComb) -> LinComb:
    return x.linear_map(rs_expand, "PS")


def lower_to(q: Segmented, value: int) -> Segmented:
    """Replace the smallest letter of q by value."""
    low = min(q.flat)
    return q.map_flat(lambda x: value if x == low else x)


@lru_cache(maxsize=None)
def rs_product(q1: Segmented, q2: Segmented) -> LinComb:
    if not q1.blocks or not q2.blocks:
        return LinComb.term("RS", q1.join(q2, bar=False))
    q2s = shift_ribbon(q2, len(q1))
    return LinComb.from_keys("RS", [
        q1.join(q2s, bar=True),
        q1.join(q2s, bar=False),
        q1.join(lower_to(q2s, max(q1.flat)), bar=False),
    ])


def rs_coproduct(q: Segmented) -> TensorElem:
    t = ps_coproduct_of(rs_expand(q))
    return t.map_slots([lambda p: ps_to_rs(PS(p))] * 2, ("RS", "RS"))


def ps_coproduct_of(x: LinComb) -> TensorElem:
    out = TensorElem(("PS", "PS"))
    for q, c in x.as_dict().items():
        out = out + ps_coproduct(q).scale(c)
    return out


# ---------------------------------------------------------------------------
# generators and the large/little Schröder bijection

def internal_breakpoints(q: Segmented) -> list[int]:
    n = len(q)
    return sorted(b for b in W.breakpoints(q.flat) if 0 < b < n)


def is_pqs(q: Segmented) -> bool:
    return set(internal_breakpoints(q)) <= set(q.bars)


def pqs_generators(n: int) -> list[Segmented]:
    return [q for q in class_list(n) if is_pqs(q)]


def pqs_factorization(q: Segmented) -> list[Segmented]:
    """Cut q at its unbarred breakpoints; every piece has bars at all its breakpoints."""
    cuts = [b for b in internal_breakpoints(q) if b not in set(q.bars)]
    pieces, rest, offset = [], q, 0
    for b in cuts:
        left, rest = rest.split_at(b - offset)
        pieces.append(shift_ribbon(left, -offset))
        offset = b
    pieces.append(shift_ribbon(rest, -offset))
    return pieces


def multiplicative_ps(q: Segmented) -> LinComb:
    out = PS(EMPTY)
    for piece in pqs_factorization(q):
        out = out * PS(piece)
    return out


def schroder_bijection(q: Segmented, branch: str) -> Segmented:
    """Map a quasi-ribbon of length n-1 into the generators of length n.

    branch "prime" prepends a 1 (image has a prime underlying word);
    branch "split" appends |n to a generator, and otherwise inserts |i in
    front of the first i for the smallest unbarred breakpoint i-1.
    """
    if not is_quasi_ribbon(q):
        raise ValueError(f"not a parking quasi-ribbon: {q}")
    n = len(q) + 1
    if branch == "prime":
        if not q.blocks:
            return Segmented(((1,),))
        return Segmented(((1,) + q.blocks[0],) + q.blocks[1:])
    if branch != "split":
        raise ValueError("branch must be 'prime' or 'split'")
    if n < 2:
        raise ValueError("the split branch needs n >= 2")
    if is_pqs(q):
        return q.join(Segmented(((n,),)), bar=True)
    bars = set(q.bars)
    flat = q.flat
    for b in internal_breakpoints(q):
        i = b + 1
        first = flat.index(i)
        if first not in bars:
            return Segmented.from_bars(flat[:first] + (i,) + flat[first:],
                                       {x for x in bars if x < first} | {first}
                                       | {x + 1 for x in bars if x > first})
    raise AssertionError("unreachable: a non-generator has an unbarred breakpoint")


def schroder_inverse(p: Segmented) -> tuple[str, Segmented]:
    if not is_pqs(p) or not p.blocks:
        raise ValueError(f"not a generator: {p}")
    if W.is_prime(p.flat):
        first = p.blocks[0][1:]
        blocks = ((first,) if first else ()) + p.blocks[1:]
        return "prime", Segmented(blocks)
    i = internal_breakpoints(p)[-1]
    flat, bars = p.flat, set(p.bars)
    # position i holds the letter i+1, preceded by a bar
    rest = flat[:i] + flat[i + 1:]
    new_bars = {x for x in bars if x < i} | {x - 1 for x in bars if x > i + 1}
    if i + 1 in bars and i + 1 < len(flat) and flat[i + 1] != flat[i]:
        new_bars.add(i)
    return "split", Segmented.from_bars(rest, new_bars)


# ---------------------------------------------------------------------------
# registration

def _ps_basis(n: int) -> tuple[Segmented, ...]:
    return class_list(n)


SQSYM = register(Algebra(
    name="SQSym", basis="PS", unit=EMPTY,
    product_rule=ps_product, coproduct_rule=ps_coproduct,
    basis_of_degree=_ps_basis,
))

SQSYM_DUAL = register(Algebra(
    name="SQSym*", basis="QS", unit=EMPTY,
    product_rule=qs_product, coproduct_rule=qs_coproduct,
    basis_of_degree=_ps_basis,
))

SQSYM_RIBBON = register(Algebra(
    name="SQSym (ribbons)", basis="RS", unit=EMPTY,
    product_rule=rs_product, coproduct_rule=rs_coproduct,
    basis_of_degree=_ps_basis,
))

register_dual("PS", "QS")
