"""Relation checks for dendriform, codendriform, bidendriform and tridendriform structures.

Each check takes the operations as callables and returns the list of
failing inputs, so the same code serves basis elements and word
polynomials alike.
"""
from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from . import pqsym
from .coeffs import (LinComb, TensorElem, algebra, half_coproducts, reduced_coproduct, tensor)

Op = Callable


def _sum(xs: Iterable):
    xs = list(xs)
    out = xs[0]
    for x in xs[1:]:
        out = out + x
    return out


# ---------------------------------------------------------------------------
# products

def dendriform_relations(lt: Op, gt: Op, prod: Op) -> dict[str, tuple[Op, Op]]:
    return {
        "dend1": (lambda x, y, z: lt(lt(x, y), z), lambda x, y, z: lt(x, prod(y, z))),
        "dend2": (lambda x, y, z: lt(gt(x, y), z), lambda x, y, z: gt(x, lt(y, z))),
        "dend3": (lambda x, y, z: gt(prod(x, y), z), lambda x, y, z: gt(x, gt(y, z))),
    }


def tridendriform_relations(lt: Op, mid: Op, gt: Op, prod: Op) -> dict[str, tuple[Op, Op]]:
    return {
        "trid1": (lambda x, y, z: lt(lt(x, y), z), lambda x, y, z: lt(x, prod(y, z))),
        "trid2": (lambda x, y, z: lt(gt(x, y), z), lambda x, y, z: gt(x, lt(y, z))),
        "trid3": (lambda x, y, z: gt(prod(x, y), z), lambda x, y, z: gt(x, gt(y, z))),
        "trid4": (lambda x, y, z: mid(gt(x, y), z), lambda x, y, z: gt(x, mid(y, z))),
        "trid5": (lambda x, y, z: mid(lt(x, y), z), lambda x, y, z: mid(x, gt(y, z))),
        "trid6": (lambda x, y, z: lt(mid(x, y), z), lambda x, y, z: mid(x, lt(y, z))),
        "trid7": (lambda x, y, z: mid(mid(x, y), z), lambda x, y, z: mid(x, mid(y, z))),
    }


def check_relations(relations: dict[str, tuple[Op, Op]], triples: Iterable[tuple]) -> list:
    failures = []
    for triple in triples:
        for name, (lhs, rhs) in relations.items():
            if lhs(*triple) != rhs(*triple):
                failures.append((name, triple))
    return failures


def check_split(parts: Sequence[Op], prod: Op, pairs: Iterable[tuple]) -> list:
    """The partial products add up to the full product."""
    return [(x, y) for x, y in pairs if _sum(p(x, y) for p in parts) != prod(x, y)]


# ---------------------------------------------------------------------------
# coproducts

def _apply_slot(t: TensorElem, slot: int, fn: Callable[[LinComb], TensorElem]) -> TensorElem:
    """Replace the tensor factor in `slot` by the two-fold tensor fn(factor)."""
    bases = t.bases[:slot] + (t.bases[slot],) * 2 + t.bases[slot + 1:]
    out: dict = {}
    for ks, c in t.as_dict().items():
        inner = fn(LinComb.term(t.bases[slot], ks[slot]))
        for (a, b), cc in inner.as_dict().items():
            key = ks[:slot] + (a, b) + ks[slot + 1:]
            out[key] = out.get(key, 0) + c * cc
    return TensorElem(bases, out)


def _left(x: LinComb) -> TensorElem:
    return half_coproducts(x)[0]


def _right(x: LinComb) -> TensorElem:
    return half_coproducts(x)[1]


def codendriform_relations() -> dict[str, tuple[Op, Op]]:
    return {
        "codend1": (lambda a: _apply_slot(_left(a), 0, _left), lambda a: _apply_slot(_left(a), 1, reduced_coproduct)),
        "codend2": (lambda a: _apply_slot(_left(a), 0, _right), lambda a: _apply_slot(_right(a), 1, _left)),
        "codend3": (lambda a: _apply_slot(_right(a), 0, reduced_coproduct), lambda a: _apply_slot(_right(a), 1, _right)),
    }


def check_codendriform(elements: Iterable[LinComb]) -> list:
    failures = []
    for a in elements:
        for name, (lhs, rhs) in codendriform_relations().items():
            if lhs(a) != rhs(a):
                failures.append((name, a))
    return failures


def check_half_coproduct_split(elements: Iterable[LinComb]) -> list:
    return [a for a in elements if _left(a) + _right(a) != reduced_coproduct(a)]


# ---------------------------------------------------------------------------
# compatibility of the two splittings (Sweedler sums written out)

def _terms(t: TensorElem):
    basis = t.bases[0]
    for (k1, k2), c in t.as_dict().items():
        yield LinComb.term(basis, k1), LinComb.term(t.bases[1], k2), c


def _tsum(bases: tuple[str, str], pieces: Iterable[TensorElem]) -> TensorElem:
    out = TensorElem(bases)
    for p in pieces:
        out = out + p
    return out


def bidendriform_relations(lt: Op, gt: Op) -> dict[str, tuple[Op, Op]]:
    def rel1(a, b):
        bases = (a.basis, a.basis)
        d, dr = list(_terms(reduced_coproduct(a))), list(_terms(_right(b)))
        return _tsum(bases, itertools.chain(
            (tensor(a1 * b1, gt(a2, b2)).scale(c * e) for a1, a2, c in d for b1, b2, e in dr),
            (tensor(a1, gt(a2, b)).scale(c) for a1, a2, c in d),
            (tensor(b1, gt(a, b2)).scale(e) for b1, b2, e in dr),
            (tensor(a * b1, b2).scale(e) for b1, b2, e in dr),
            [tensor(a, b)],
        ))

    def rel2(a, b):
        bases = (a.basis, a.basis)
        d, dr = list(_terms(reduced_coproduct(a))), list(_terms(_right(b)))
        return _tsum(bases, itertools.chain(
            (tensor(a1 * b1, lt(a2, b2)).scale(c * e) for a1, a2, c in d for b1, b2, e in dr),
            (tensor(a1, lt(a2, b)).scale(c) for a1, a2, c in d),
            (tensor(b1, lt(a, b2)).scale(e) for b1, b2, e in dr),
        ))

    def rel3(a, b):
        bases = (a.basis, a.basis)
        d, dl = list(_terms(reduced_coproduct(a))), list(_terms(_left(b)))
        return _tsum(bases, itertools.chain(
            (tensor(a1 * b1, gt(a2, b2)).scale(c * e) for a1, a2, c in d for b1, b2, e in dl),
            (tensor(a * b1, b2).scale(e) for b1, b2, e in dl),
            (tensor(b1, gt(a, b2)).scale(e) for b1, b2, e in dl),
        ))

    def rel4(a, b):
        bases = (a.basis, a.basis)
        d, dl = list(_terms(reduced_coproduct(a))), list(_terms(_left(b)))
        return _tsum(bases, itertools.chain(
            (tensor(a1 * b1, lt(a2, b2)).scale(c * e) for a1, a2, c in d for b1, b2, e in dl),
            (tensor(a1 * b, a2).scale(c) for a1, a2, c in d),
            (tensor(b1, lt(a, b2)).scale(e) for b1, b2, e in dl),
            [tensor(b, a)],
        ))

    return {
        "bidend1": (lambda a, b: _right(gt(a, b)), rel1),
        "bidend2": (lambda a, b: _right(lt(a, b)), rel2),
        "bidend3": (lambda a, b: _left(gt(a, b)), rel3),
        "bidend4": (lambda a, b: _left(lt(a, b)), rel4),
    }


def check_bidendriform(lt: Op, gt: Op, pairs: Iterable[tuple[LinComb, LinComb]]) -> list:
    failures = []
    rels = bidendriform_relations(lt, gt)
    for a, b in pairs:
        for name, (lhs, rhs) in rels.items():
            if lhs(a, b) != rhs(a, b):
                failures.append((name, a, b))
    return failures


# ---------------------------------------------------------------------------
# ready-made suites

def basis_tuples(basis: str, arity: int, max_total: int) -> list[tuple[LinComb, ...]]:
    alg = algebra(basis)
    by_degree = {d: [alg.element(k) for k in alg.basis_of_degree(d)] for d in range(1, max_total + 1)}
    out = []
    for degrees in itertools.product(range(1, max_total + 1), repeat=arity):
        if sum(degrees) <= max_total:
            out.extend(itertools.product(*(by_degree[d] for d in degrees)))
    return out


def g_operations():
    lt, mid, gt = pqsym.g_left, pqsym.g_middle, pqsym.g_right
    return lt, mid, gt, pqsym.g_succ


def g_bidendriform_report(max_total: int = 4) -> dict[str, list]:
    lt, mid, gt, succ = g_operations()
    prod = lambda x, y: x * y
    triples = basis_tuples("G", 3, max_total)
    pairs = basis_tuples("G", 2, max_total)
    singles = [t[0] for t in basis_tuples("G", 1, max_total)]
    return {
        "dendriform": check_relations(dendriform_relations(lt, succ, prod), triples),
        "codendriform": check_codendriform(singles),
        "bidendriform": check_bidendriform(lt, succ, pairs),
        "half_coproduct_split": check_half_coproduct_split(singles),
        "product_split": check_split([lt, mid, gt], prod, pairs),
    }


def g_tridendriform_report(max_total: int = 4) -> list:
    lt, mid, gt, _ = g_operations()
    return check_relations(tridendriform_relations(lt, mid, gt, lambda x, y: x * y),
                           basis_tuples("G", 3, max_total))


def f_bidendriform_report(max_total: int = 4) -> dict[str, list]:
    lt, gt = pqsym.f_left, pqsym.f_right
    prod = lambda x, y: x * y
    triples = basis_tuples("F", 3, max_total)
    pairs = basis_tuples("F", 2, max_total)
    singles = [t[0] for t in basis_tuples("F", 1, max_total)]
    return {
        "dendriform": check_relations(dendriform_relations(lt, gt, prod), triples),
        "codendriform": check_codendriform(singles),
        "bidendriform": check_bidendriform(lt, gt, pairs),
        "half_coproduct_split": check_half_coproduct_split(singles),
        "product_split": check_split([lt, gt], prod, pairs),
    }


def word_triples(max_total: int, k: int) -> Iterable[tuple]:
    for lengths in itertools.product(range(1, max_total + 1), repeat=3):
        if sum(lengths) <= max_total:
            yield from itertools.product(*(itertools.product(range(1, k + 1), repeat=n) for n in lengths))


def word_tridendriform_report(max_total: int = 6, k: int = 4) -> list:
    """Relations on single words, where each operation yields the concatenation or nothing."""
    def op(test):
        def apply(u, v):
            return u + v if u is not None and v is not None and test(max(u), max(v)) else None
        return apply

    lt = op(lambda p, q: p > q)
    mid = op(lambda p, q: p == q)
    gt = op(lambda p, q: p < q)
    prod = op(lambda p, q: True)
    return check_relations(tridendriform_relations(lt, mid, gt, prod), word_triples(max_total, k))
