"""Sparse exact linear combinations, tensors and a registry of graded bialgebras.

Every algebra in the package registers its product and coproduct on basis
keys; the generic machinery here (bilinear extension, antipode, Eulerian
idempotent, primitive dimensions, axiom checks) is written once against
that registry.
"""
from __future__ import annotations

import itertools
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType
from typing import Callable, Hashable, Iterable, Sequence

from .words import Segmented, word_str

Key = Hashable
Scalar = int | Fraction

# bases whose indices are compositions, graded by weight rather than length
COMPOSITION_BASES = frozenset({"S", "R_ncsf", "M_qsym", "F_qsym", "PSC", "QSC", "FSC", "RSC"})


class BasisMismatch(ValueError):
    pass


def key_degree(basis: str, key: Key) -> int:
    flat = key.flat if isinstance(key, Segmented) else key
    return sum(flat) if basis in COMPOSITION_BASES else len(flat)


def key_order(basis: str, key: Key) -> tuple:
    if isinstance(key, Segmented):
        return (key_degree(basis, key),) + key.sort_key()[1:]
    return (key_degree(basis, key), tuple(key))


def key_str(key: Key) -> str:
    if isinstance(key, Segmented):
        return str(key)
    return word_str(key)


def _scalar(c) -> Fraction:
    if isinstance(c, (int, Fraction)):
        return Fraction(c)
    raise TypeError(f"coefficients must be int or Fraction, got {type(c).__name__}")


class LinComb:
    """An immutable finite linear combination of basis keys with rational coefficients."""

    __slots__ = ("basis", "_terms")

    def __init__(self, basis: str, terms: Mapping | Iterable[tuple[Key, Scalar]] = ()):
        acc: dict[Key, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] = acc.get(k, 0) + _scalar(c)
        self.basis = basis
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def term(cls, basis: str, key: Key, coeff: Scalar = 1) -> "LinComb":
        return cls(basis, {key: coeff})

    @classmethod
    def from_keys(cls, basis: str, keys: Iterable[Key]) -> "LinComb":
        """Sum of keys, repeated keys accumulating."""
        return cls(basis, ((k, 1) for k in keys))

    # -- mapping-like access ------------------------------------------------
    def coeff(self, key: Key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __getitem__(self, key: Key) -> Fraction:
        return self.coeff(key)

    def __contains__(self, key: Key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def keys(self) -> list[Key]:
        return sorted(self._terms, key=lambda k: key_order(self.basis, k))

    def items(self) -> list[tuple[Key, Fraction]]:
        return [(k, self._terms[k]) for k in self.keys()]

    def __iter__(self):
        return iter(self.keys())

    def as_dict(self) -> dict[Key, Fraction]:
        return dict(self._terms)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "LinComb") -> str:
        if self.basis != other.basis and self._terms and other._terms:
            raise BasisMismatch(f"cannot combine {self.basis} with {other.basis}")
        return self.basis if self._terms else other.basis

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        basis = self._check(other)
        return LinComb(basis, itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self) -> "LinComb":
        return LinComb(self.basis, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def scale(self, c: Scalar) -> "LinComb":
        c = _scalar(c)
        return LinComb(self.basis, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, LinComb):
            return product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, LinComb):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.basis == other.basis and self._terms == other._terms

    __hash__ = None

    def map_keys(self, fn: Callable[[Key], Key], basis: str | None = None) -> "LinComb":
        return LinComb(basis or self.basis, ((fn(k), c) for k, c in self._terms.items()))

    def linear_map(self, fn: Callable[[Key], "LinComb"], basis: str) -> "LinComb":
        return linear_extend(fn, self, basis)

    def support_degrees(self) -> set[int]:
        return {key_degree(self.basis, k) for k in self._terms}

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"LinComb({render(self)})"


class TensorElem:
    """An immutable combination of r-tuples of basis keys (r = arity)."""

    __slots__ = ("bases", "_terms")

    def __init__(self, bases: Sequence[str], terms: Mapping | Iterable = ()):
        acc: dict[tuple, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            k = tuple(k)
            if len(k) != len(bases):
                raise ValueError("tensor key arity does not match its bases")
            acc[k] = acc.get(k, 0) + _scalar(c)
        self.bases = tuple(bases)
        self._terms = {k: c for k, c in acc.items() if c}

    @property
    def arity(self) -> int:
        return len(self.bases)

    def coeff(self, key: tuple) -> Fraction:
        return self._terms.get(tuple(key), Fraction(0))

    def __getitem__(self, key):
        return self.coeff(key)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def keys(self) -> list[tuple]:
        return sorted(self._terms, key=lambda ks: tuple(key_order(b, k) for b, k in zip(self.bases, ks)))

    def items(self) -> list[tuple[tuple, Fraction]]:
        return [(k, self._terms[k]) for k in self.keys()]

    def __iter__(self):
        return iter(self.keys())

    def as_dict(self) -> dict[tuple, Fraction]:
        return dict(self._terms)

    def _check(self, other: "TensorElem") -> tuple[str, ...]:
        if self.bases != other.bases and self._terms and other._terms:
            raise BasisMismatch(f"cannot combine tensors over {self.bases} and {other.bases}")
        return self.bases if self._terms else other.bases

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, TensorElem):
            return NotImplemented
        return TensorElem(self._check(other), itertools.chain(self._terms.items(), other._terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return TensorElem(self.bases, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def scale(self, c: Scalar) -> "TensorElem":
        c = _scalar(c)
        return TensorElem(self.bases, {k: c * v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, TensorElem):
            return tensor_algebra_product(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, TensorElem):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        return self.bases == other.bases and self._terms == other._terms

    __hash__ = None

    def swap(self) -> "TensorElem":
        if self.arity != 2:
            raise ValueError("swap needs a 2-tensor")
        return TensorElem(self.bases[::-1], {(b, a): c for (a, b), c in self._terms.items()})

    def map_slots(self, fns: Sequence[Callable[[Key], LinComb]], bases: Sequence[str]) -> "TensorElem":
        """Apply one linear map per slot."""
        out = []
        for ks, c in self._terms.items():
            images = [fn(k) for fn, k in zip(fns, ks)]
            for combo in itertools.product(*(im.items() for im in images)):
                coeff = c
                for _, cc in combo:
                    coeff *= cc
                out.append((tuple(k for k, _ in combo), coeff))
        return TensorElem(bases, out)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"TensorElem({render(self)})"


# ---------------------------------------------------------------------------
# rendering

def _coeff_prefix(c: Fraction, first: bool) -> str:
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    body = "" if mag == 1 else f"{mag}*"
    if first:
        return ("-" if c < 0 else "") + body
    return f" {sign} {body}"


def render_key(basis: str, key: Key) -> str:
    if len(key) == 0:
        return "1"
    if isinstance(key, Segmented):
        inner = "|".join(",".join(map(str, b)) for b in key.blocks)
    else:
        inner = ",".join(map(str, key))
    return f"{basis}[{inner}]"


def render(x: LinComb | TensorElem) -> str:
    if not x:
        return "0"
    parts = []
    for i, (k, c) in enumerate(x.items()):
        if isinstance(x, LinComb):
            body = render_key(x.basis, k)
        else:
            body = " ⊗ ".join(render_key(b, kk) for b, kk in zip(x.bases, k))
        if body == "1" and abs(c) != 1:
            # a bare scalar multiple of the unit prints as the scalar
            prefix = _coeff_prefix(c, i == 0)
            parts.append(prefix[:-1])
        else:
            parts.append(_coeff_prefix(c, i == 0) + body)
    return "".join(parts)


# ---------------------------------------------------------------------------
# extension of rules from keys to combinations

def linear_extend(rule: Callable[[Key], LinComb], x: LinComb, basis: str) -> LinComb:
    acc: dict[Key, Fraction] = {}
    for k, c in x.as_dict().items():
        for kk, cc in rule(k).as_dict().items():
            acc[kk] = acc.get(kk, 0) + c * cc
    return LinComb(basis, acc)


def bilinear_extend(rule: Callable[[Key, Key], LinComb], x: LinComb, y: LinComb,
                    basis: str | None = None) -> LinComb:
    acc: dict[Key, Fraction] = {}
    out_basis = basis
    for k1, c1 in x.as_dict().items():
        for k2, c2 in y.as_dict().items():
            r = rule(k1, k2)
            out_basis = out_basis or r.basis
            for k, c in r.as_dict().items():
                acc[k] = acc.get(k, 0) + c1 * c2 * c
    return LinComb(out_basis or x.basis, acc)


def colinear_extend(rule: Callable[[Key], TensorElem], x: LinComb,
                    bases: Sequence[str] | None = None) -> TensorElem:
    acc: dict[tuple, Fraction] = {}
    out_bases = tuple(bases) if bases else None
    for k, c in x.as_dict().items():
        t = rule(k)
        out_bases = out_bases or t.bases
        for kk, cc in t.as_dict().items():
            acc[kk] = acc.get(kk, 0) + c * cc
    return TensorElem(out_bases or (x.basis, x.basis), acc)


def tensor(*factors: LinComb) -> TensorElem:
    out = []
    for combo in itertools.product(*(f.items() for f in factors)):
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        out.append((tuple(k for k, _ in combo), coeff))
    return TensorElem(tuple(f.basis for f in factors), out)


# ---------------------------------------------------------------------------
# registry

@dataclass(eq=False)
class Algebra:
    """A graded connected bialgebra presented on a basis.

    `product_rule` and `coproduct_rule` act on basis keys; the unit key is
    the unique degree-0 index.  Optional half coproducts return the pair
    (left, right) of tensors splitting the reduced coproduct.
    """
    name: str
    basis: str
    product_rule: Callable[[Key, Key], LinComb]
    coproduct_rule: Callable[[Key], TensorElem] | None
    basis_of_degree: Callable[[int], Sequence[Key]]
    unit: Key = ()
    half_coproduct_rule: Callable[[Key], tuple[TensorElem, TensorElem]] | None = None
    cocommutative: bool = False
    _antipode_cache: dict = field(default_factory=dict, repr=False)

    def degree(self, key: Key) -> int:
        return key_degree(self.basis, key)

    def element(self, key: Key, coeff: Scalar = 1) -> LinComb:
        return LinComb.term(self.basis, key, coeff)

    def one(self) -> LinComb:
        return self.element(self.unit)

    def mul_keys(self, k1: Key, k2: Key) -> LinComb:
        if k1 == self.unit:
            return self.element(k2)
        if k2 == self.unit:
            return self.element(k1)
        return self.product_rule(k1, k2)

    def comul_keys(self, k: Key) -> TensorElem:
        if self.coproduct_rule is None:
            raise NotImplementedError(f"{self.basis} has no registered coproduct")
        if k == self.unit:
            return TensorElem((self.basis, self.basis), {(self.unit, self.unit): 1})
        return self.coproduct_rule(k)

    def counit(self, x: LinComb) -> Fraction:
        return x.coeff(self.unit)


_ALGEBRAS: dict[str, Algebra] = {}
_DUALS: set[frozenset] = set()
_frozen = False
ALGEBRAS = MappingProxyType(_ALGEBRAS)


def register(alg: Algebra) -> Algebra:
    if _frozen:
        raise RuntimeError("the algebra registry is frozen")
    if alg.basis in _ALGEBRAS:
        raise ValueError(f"basis {alg.basis} already registered")
    _ALGEBRAS[alg.basis] = alg
    return alg


def register_dual(b1: str, b2: str) -> None:
    if _frozen:
        raise RuntimeError("the algebra registry is frozen")
    _DUALS.add(frozenset((b1, b2)))


def freeze_registry() -> None:
    global _frozen
    _frozen = True


def algebra(basis: str) -> Algebra:
    try:
        return _ALGEBRAS[basis]
    except KeyError:
        raise KeyError(f"no algebra registered for basis {basis!r}") from None


def dual_pairs() -> list[tuple[str, str]]:
    return sorted(tuple(sorted(p)) for p in _DUALS)


# ---------------------------------------------------------------------------
# structure maps on elements

def product(x: LinComb, y: LinComb) -> LinComb:
    if x.basis != y.basis and x and y:
        raise BasisMismatch(f"cannot multiply {x.basis} by {y.basis}")
    basis = x.basis if x else y.basis
    alg = algebra(basis)
    return bilinear_extend(alg.mul_keys, x, y, basis)


def coproduct(x: LinComb) -> TensorElem:
    alg = algebra(x.basis)
    return colinear_extend(alg.comul_keys, x, (x.basis, x.basis))


def reduced_coproduct(x: LinComb) -> TensorElem:
    unit = algebra(x.basis).unit
    t = coproduct(x)
    return TensorElem(t.bases, {k: c for k, c in t.as_dict().items() if unit not in k})


def iterated_coproduct(x: LinComb, r: int) -> TensorElem:
    """The r-fold coproduct, landing in the r-th tensor power (r >= 1)."""
    if r == 1:
        return TensorElem((x.basis,), {(k,): c for k, c in x.as_dict().items()})
    alg = algebra(x.basis)
    t = iterated_coproduct(x, r - 1)
    acc: dict[tuple, Fraction] = {}
    for ks, c in t.as_dict().items():
        for (a, b), cc in alg.comul_keys(ks[-1]).as_dict().items():
            k = ks[:-1] + (a, b)
            acc[k] = acc.get(k, 0) + c * cc
    return TensorElem((x.basis,) * r, acc)


def half_coproducts(x: LinComb) -> tuple[TensorElem, TensorElem]:
    alg = algebra(x.basis)
    if alg.half_coproduct_rule is None:
        raise NotImplementedError(f"{x.basis} has no half coproducts")
    left = right = TensorElem((x.basis, x.basis))
    for k, c in x.as_dict().items():
        lo, hi = alg.half_coproduct_rule(k)
        left = left + lo.scale(c)
        right = right + hi.scale(c)
    return left, right


def multiply_tensor(t: TensorElem) -> LinComb:
    """Multiply out the slots of a tensor (all slots share one algebra)."""
    basis = t.bases[0]
    alg = algebra(basis)
    acc = LinComb(basis)
    for ks, c in t.as_dict().items():
        term = alg.element(ks[0])
        for k in ks[1:]:
            term = bilinear_extend(alg.mul_keys, term, alg.element(k), basis)
        acc = acc + term.scale(c)
    return acc


def tensor_algebra_product(s: TensorElem, t: TensorElem) -> TensorElem:
    if s.bases != t.bases and s and t:
        raise BasisMismatch("tensor factors over different bases")
    bases = s.bases if s else t.bases
    algs = [algebra(b) for b in bases]
    acc: dict[tuple, Fraction] = {}
    for ks, c1 in s.as_dict().items():
        for ls, c2 in t.as_dict().items():
            slots = [alg.mul_keys(k, l).items() for alg, k, l in zip(algs, ks, ls)]
            for combo in itertools.product(*slots):
                coeff = c1 * c2
                for _, cc in combo:
                    coeff *= cc
                key = tuple(k for k, _ in combo)
                acc[key] = acc.get(key, 0) + coeff
    return TensorElem(bases, acc)


def pairing(x: LinComb, y: LinComb) -> Fraction:
    if x and y and frozenset((x.basis, y.basis)) not in _DUALS:
        raise BasisMismatch(f"{x.basis} and {y.basis} are not a registered dual pair")
    return sum((c * y.coeff(k) for k, c in x.as_dict().items()), Fraction(0))


def tensor_pairing(s: TensorElem, t: TensorElem) -> Fraction:
    for b1, b2 in zip(s.bases, t.bases):
        if s and t and frozenset((b1, b2)) not in _DUALS:
            raise BasisMismatch(f"{b1} and {b2} are not a registered dual pair")
    return sum((c * t.coeff(k) for k, c in s.as_dict().items()), Fraction(0))


def antipode(x: LinComb) -> LinComb:
    """Antipode as the convolution inverse of the identity, degree by degree."""
    alg = algebra(x.basis)
    return linear_extend(lambda k: _antipode_key(alg, k), x, x.basis)


def _antipode_key(alg: Algebra, k: Key) -> LinComb:
    cache = alg._antipode_cache
    if k in cache:
        return cache[k]
    if k == alg.unit:
        out = alg.one()
    else:
        out = -alg.element(k)
        for (k1, k2), c in alg.comul_keys(k).as_dict().items():
            if k1 == alg.unit or k2 == alg.unit:
                continue
            out = out - bilinear_extend(alg.mul_keys, _antipode_key(alg, k1), alg.element(k2), alg.basis).scale(c)
    cache[k] = out
    return out


def augmentation_power(x: LinComb, k: int) -> LinComb:
    """(Id - unit∘counit) convolved with itself k times, applied to x."""
    alg = algebra(x.basis)

    @lru_cache(maxsize=None)
    def power_key(key: Key, j: int) -> LinComb:
        if key == alg.unit:
            return LinComb(alg.basis)
        if j == 1:
            return alg.element(key)
        out = LinComb(alg.basis)
        for (k1, k2), c in alg.comul_keys(key).as_dict().items():
            if k1 == alg.unit or k2 == alg.unit:
                continue
            out = out + bilinear_extend(alg.mul_keys, power_key(k1, j - 1), alg.element(k2), alg.basis).scale(c)
        return out

    return linear_extend(lambda key: power_key(key, k), x, x.basis)


def eulerian_idempotent(x: LinComb) -> LinComb:
    degrees = x.support_degrees()
    top = max(degrees, default=0)
    out = LinComb(x.basis)
    for k in range(1, top + 1):
        out = out + augmentation_power(x, k).scale(Fraction((-1) ** (k + 1), k))
    return out


# ---------------------------------------------------------------------------
# exact rank and primitive dimensions

def rank(vectors: Iterable[Mapping[Hashable, Fraction]]) -> int:
    """Rank over the rationals of sparse vectors, by incremental elimination."""
    rows: list[tuple[Hashable, dict]] = []
    for v in vectors:
        v = {k: Fraction(c) for k, c in v.items() if c}
        for pivot, row in rows:
            c = v.get(pivot)
            if c:
                for k, rc in row.items():
                    nv = v.get(k, 0) - c * rc
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        if v:
            pivot = next(iter(v))
            inv = 1 / v[pivot]
            rows.append((pivot, {k: c * inv for k, c in v.items()}))
    return len(rows)


def primitive_dims(basis: str, n: int) -> int:
    alg = algebra(basis)
    keys = list(alg.basis_of_degree(n))
    vectors = (reduced_coproduct(alg.element(k)).as_dict() for k in keys)
    return len(keys) - rank(vectors)


def totally_primitive_dims(basis: str, n: int) -> int:
    alg = algebra(basis)
    keys = list(alg.basis_of_degree(n))

    def stacked(k):
        lo, hi = half_coproducts(alg.element(k))
        v = {("<",) + kk: c for kk, c in lo.as_dict().items()}
        v.update({(">",) + kk: c for kk, c in hi.as_dict().items()})
        return v

    return len(keys) - rank(stacked(k) for k in keys)


# ---------------------------------------------------------------------------
# axiom checks; each returns the list of failing inputs

def degree_tuples(parts: int, max_total: int, min_part: int = 1) -> list[tuple[int, ...]]:
    return [t for t in itertools.product(range(min_part, max_total + 1), repeat=parts)
            if sum(t) <= max_total]


def _basis_upto(alg: Algebra, max_degree: int) -> list[Key]:
    return [k for d in range(1, max_degree + 1) for k in alg.basis_of_degree(d)]


def check_associativity(basis: str, max_degree: int) -> list:
    alg = algebra(basis)
    bad = []
    for degs in degree_tuples(3, max_degree):
        for ks in itertools.product(*(alg.basis_of_degree(d) for d in degs)):
            x, y, z = (alg.element(k) for k in ks)
            if (x * y) * z != x * (y * z):
                bad.append(ks)
    return bad


def check_coassociativity(basis: str, max_degree: int) -> list:
    alg = algebra(basis)
    bad = []
    for k in _basis_upto(alg, max_degree):
        d = alg.comul_keys(k)
        left: dict[tuple, Fraction] = {}
        right: dict[tuple, Fraction] = {}
        for (a, b), c in d.as_dict().items():
            for (a1, a2), c1 in alg.comul_keys(a).as_dict().items():
                left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c1
            for (b1, b2), c2 in alg.comul_keys(b).as_dict().items():
                right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
        if TensorElem((basis,) * 3, left) != TensorElem((basis,) * 3, right):
            bad.append(k)
    return bad


def check_compatibility(basis: str, max_degree: int) -> list:
    alg = algebra(basis)
    bad = []
    for degs in degree_tuples(2, max_degree):
        for k1, k2 in itertools.product(*(alg.basis_of_degree(d) for d in degs)):
            x, y = alg.element(k1), alg.element(k2)
            if coproduct(x * y) != coproduct(x) * coproduct(y):
                bad.append((k1, k2))
    return bad


def check_counit(basis: str, max_degree: int) -> list:
    alg = algebra(basis)
    bad = []
    for k in _basis_upto(alg, max_degree):
        d = alg.comul_keys(k)
        left = LinComb(basis, ((b, c) for (a, b), c in d.as_dict().items() if a == alg.unit))
        right = LinComb(basis, ((a, c) for (a, b), c in d.as_dict().items() if b == alg.unit))
        if left != alg.element(k) or right != alg.element(k):
            bad.append(k)
    return bad


def check_antipode(basis: str, max_degree: int) -> list:
    alg = algebra(basis)
    bad = []
    for k in _basis_upto(alg, max_degree):
        d = alg.comul_keys(k)
        left = LinComb(basis)
        right = LinComb(basis)
        for (a, b), c in d.as_dict().items():
            left = left + (antipode(alg.element(a)) * alg.element(b)).scale(c)
            right = right + (alg.element(a) * antipode(alg.element(b))).scale(c)
        if left or right:
            bad.append(k)
    return bad


def check_duality(basis: str, dual_basis: str, max_degree: int) -> list:
    """Product of one side is adjoint to the coproduct of the other, both ways."""
    bad = []
    for b1, b2 in ((basis, dual_basis), (dual_basis, basis)):
        alg, dual = algebra(b1), algebra(b2)
        for n in range(2, max_degree + 1):
            table: dict[tuple, dict] = {}
            for z in dual.basis_of_degree(n):
                for ks, c in dual.comul_keys(z).as_dict().items():
                    table.setdefault(ks, {})[z] = c
            for p in range(1, n):
                for k1 in alg.basis_of_degree(p):
                    for k2 in alg.basis_of_degree(n - p):
                        prod = alg.mul_keys(k1, k2).as_dict()
                        if prod != table.get((k1, k2), {}):
                            bad.append((b1, k1, k2))
    return bad


HOPF_CHECKS = {
    "associativity": check_associativity,
    "coassociativity": check_coassociativity,
    "compatibility": check_compatibility,
    "counit": check_counit,
    "antipode": check_antipode,
}


def hopf_report(basis: str, max_degree: int) -> dict[str, list]:
    return {name: fn(basis, max_degree) for name, fn in HOPF_CHECKS.items()}
