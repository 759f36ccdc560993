"""Combinatorics on words over the positive integers.

Words are plain tuples of ints.  The empty tuple is the empty word and
indexes the unit of every algebra in the package.
"""
from __future__ import annotations

import itertools
import os
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, Sequence

Word = tuple[int, ...]
Composition = tuple[int, ...]

DEFAULT_CAP = 8


def enumeration_cap() -> int:
    return int(os.environ.get("PARKHOPF_CAP", DEFAULT_CAP))


def word(letters: str | Iterable[int]) -> Word:
    """Build a word from a digit string ("1213") or an iterable of ints."""
    if isinstance(letters, str):
        w = tuple(int(ch) for ch in letters if not ch.isspace())
    else:
        w = tuple(int(x) for x in letters)
    if any(x < 1 for x in w):
        raise ValueError(f"letters must be positive: {w}")
    return w


def word_str(w: Sequence[int]) -> str:
    if all(x < 10 for x in w):
        return "".join(map(str, w))
    return ",".join(map(str, w))


def length_lex(w: Sequence[int]) -> tuple:
    return (len(w), tuple(w))


# ---------------------------------------------------------------------------
# standardization and parkization

def standardize(w: Sequence[int]) -> Word:
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for label, i in enumerate(order, 1):
        out[i] = label
    return tuple(out)


def inverse(sigma: Sequence[int]) -> Word:
    out = [0] * len(sigma)
    for i, s in enumerate(sigma, 1):
        out[s - 1] = i
    return tuple(out)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def _defect(w: Sequence[int]) -> int:
    counts = Counter(w)
    below = 0
    for i in range(1, len(w) + 1):
        below += counts.get(i, 0)
        if below < i:
            return i
    return len(w) + 1


def parkize_by_decrement(w: Sequence[int]) -> Word:
    """Literal parkization: decrement every letter above the defect until none."""
    w = list(w)
    n = len(w)
    while (d := _defect(w)) <= n:
        w = [x - 1 if x > d else x for x in w]
    return tuple(w)


def parkize(w: Sequence[int]) -> Word:
    """Parkization computed in one pass over the distinct letters.

    The j-th smallest distinct letter lands on the smaller of (previous value
    plus the original gap) and (number of strictly smaller letters plus one).
    This is what repeated decrementing converges to; `parkize_by_decrement`
    is kept as the reference implementation.
    """
    if not w:
        return ()
    counts = Counter(w)
    image = {}
    below = 0
    prev_old = prev_new = None
    for v in sorted(counts):
        if prev_old is None:
            new = 1
        else:
            new = min(prev_new + (v - prev_old), below + 1)
        image[v] = new
        below += counts[v]
        prev_old, prev_new = v, new
    return tuple(image[x] for x in w)


def is_parking(w: Sequence[int]) -> bool:
    return all(1 <= x <= i for i, x in enumerate(sorted(w), 1))


def _require_parking(a: Sequence[int]) -> None:
    if not is_parking(a):
        raise ValueError(f"not a parking function: {word_str(a)}")


def breakpoints(a: Sequence[int]) -> frozenset[int]:
    _require_parking(a)
    counts = Counter(a)
    out = {0}
    below = 0
    for b in range(1, len(a) + 1):
        below += counts.get(b, 0)
        if below == b:
            out.add(b)
    return frozenset(out)


def is_prime(a: Sequence[int]) -> bool:
    return breakpoints(a) == {0, len(a)}


# ---------------------------------------------------------------------------
# evaluations and compositions

def evaluation(w: Sequence[int]) -> tuple[int, ...]:
    if not w:
        return ()
    counts = Counter(w)
    return tuple(counts.get(i, 0) for i in range(1, max(w) + 1))


def pack_evaluation(w: Sequence[int]) -> Composition:
    return tuple(c for c in evaluation(w) if c)


def pack(w: Sequence[int]) -> Word:
    rank = {v: i for i, v in enumerate(sorted(set(w)), 1)}
    return tuple(rank[x] for x in w)


def max_letter(w: Sequence[int]) -> int:
    return max(w, default=0)


def descent_composition(w: Sequence[int]) -> Composition:
    if not w:
        return ()
    parts, run = [], 1
    for x, y in zip(w, w[1:]):
        if x > y:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def recoil_composition(w: Sequence[int]) -> Composition:
    return descent_composition(inverse(standardize(w)))


def composition_from_descents(n: int, descents: Iterable[int]) -> Composition:
    cuts = [0, *sorted(descents), n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def descent_set(c: Composition) -> frozenset[int]:
    return frozenset(itertools.accumulate(c[:-1]))


def compositions(n: int) -> list[Composition]:
    """Compositions of n in lexicographic order."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        out.extend((first, *rest) for rest in compositions(n - first))
    return out


def partitions(n: int, largest: int | None = None) -> list[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first, *rest) for rest in partitions(n - first, first))
    return out


def is_finer(fine: Composition, coarse: Composition) -> bool:
    return sum(fine) == sum(coarse) and descent_set(coarse) <= descent_set(fine)


def coarsenings(c: Composition) -> list[Composition]:
    """All compositions coarser than c (c included)."""
    if not c:
        return [()]
    ds = sorted(descent_set(c))
    n = sum(c)
    return [composition_from_descents(n, sub)
            for r in range(len(ds) + 1) for sub in itertools.combinations(ds, r)]


def refinements(c: Composition) -> list[Composition]:
    if not c:
        return [()]
    n = sum(c)
    fixed = descent_set(c)
    free = [i for i in range(1, n) if i not in fixed]
    return [composition_from_descents(n, fixed | set(sub))
            for r in range(len(free) + 1) for sub in itertools.combinations(free, r)]


# ---------------------------------------------------------------------------
# shuffles and concatenations

def shift(w: Sequence[int], k: int) -> Word:
    return tuple(x + k for x in w)


def shifted_concat(u: Sequence[int], v: Sequence[int]) -> Word:
    return tuple(u) + shift(v, len(u))


def shuffle(u: Sequence[int], v: Sequence[int]) -> Iterator[Word]:
    """All interleavings of u and v, with multiplicity."""
    for w, _ in shuffle_with_sources(u, v):
        yield w


def shuffle_with_sources(u: Sequence, v: Sequence) -> Iterator[tuple[tuple, tuple[int, ...]]]:
    """Interleavings paired with the source tag (0 for u, 1 for v) of each slot."""
    n = len(u) + len(v)
    for pos in itertools.combinations(range(n), len(u)):
        chosen = set(pos)
        out, tags = [], []
        iu = iv = 0
        for i in range(n):
            if i in chosen:
                out.append(u[iu])
                tags.append(0)
                iu += 1
            else:
                out.append(v[iv])
                tags.append(1)
                iv += 1
        yield tuple(out), tuple(tags)


def shifted_shuffle(u: Sequence[int], v: Sequence[int]) -> list[Word]:
    return sorted(shuffle(u, shift(v, len(u))), key=length_lex)


@lru_cache(maxsize=None)
def parking_fiber(a: Word, n: int) -> tuple[Word, ...]:
    """Words over [1..n] whose parkization is a.

    Parkization preserves the order pattern of a word, so every such word is
    a strictly increasing relabeling of the distinct letters of a.
    """
    values = sorted(set(a))
    out = []
    for image in itertools.combinations(range(1, n + 1), len(values)):
        relabel = dict(zip(values, image))
        u = tuple(relabel[x] for x in a)
        if parkize(u) == a:
            out.append(u)
    return tuple(out)


def convolution(a1: Sequence[int], a2: Sequence[int]) -> list[Word]:
    """Parking functions u.v with parkize(u) = a1 and parkize(v) = a2."""
    a1, a2 = tuple(a1), tuple(a2)
    _require_parking(a1)
    _require_parking(a2)
    n = len(a1) + len(a2)
    out = [u + v for u in parking_fiber(a1, n) for v in parking_fiber(a2, n)
           if is_parking(u + v)]
    return sorted(out, key=length_lex)


def convolution_by_scan(a1: Sequence[int], a2: Sequence[int]) -> list[Word]:
    """Same as `convolution`, by splitting every parking function of the total length."""
    a1, a2 = tuple(a1), tuple(a2)
    p = len(a1)
    return [a for a in parking_functions(p + len(a2))
            if parkize(a[:p]) == a1 and parkize(a[p:]) == a2]


# ---------------------------------------------------------------------------
# factorizations and types

def connected_cuts(a: Sequence[int]) -> list[int]:
    """Positions k (0 < k < n) where a splits as a shifted concatenation."""
    _require_parking(a)
    cuts = []
    prefix_max = 0
    for k in range(1, len(a)):
        prefix_max = max(prefix_max, a[k - 1])
        if prefix_max <= k and min(a[k:]) > k:
            cuts.append(k)
    return cuts


def connected_factorization(a: Sequence[int]) -> list[Word]:
    bounds = [0, *connected_cuts(a), len(a)]
    return [tuple(x - lo for x in a[lo:hi]) for lo, hi in zip(bounds, bounds[1:])]


def is_connected(a: Sequence[int]) -> bool:
    return len(a) > 0 and not connected_cuts(a)


def is_anticonnected(a: Sequence[int]) -> bool:
    return is_connected(tuple(reversed(a)))


def type_composition(a: Sequence[int]) -> Composition:
    bps = sorted(breakpoints(a))
    return tuple(b - c for c, b in zip(bps, bps[1:]))


# ---------------------------------------------------------------------------
# noncrossing partitions

def ndpf_to_noncrossing(pi: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    pi = tuple(pi)
    if list(pi) != sorted(pi) or not is_parking(pi):
        raise ValueError(f"expected a nondecreasing parking function: {word_str(pi)}")
    sizes = Counter(pi)
    blocks: dict[int, list[int]] = {}
    open_stack: list[int] = []
    for i in range(1, len(pi) + 1):
        if i in sizes:
            blocks[i] = [i]
            open_stack.append(i)
        else:
            while open_stack and len(blocks[open_stack[-1]]) == sizes[open_stack[-1]]:
                open_stack.pop()
            blocks[open_stack[-1]].append(i)
        while open_stack and len(blocks[open_stack[-1]]) == sizes[open_stack[-1]]:
            open_stack.pop()
    return tuple(tuple(blocks[m]) for m in sorted(blocks))


def is_noncrossing(blocks: Iterable[Iterable[int]]) -> bool:
    owner = {}
    for idx, block in enumerate(blocks):
        for x in block:
            owner[x] = idx
    seq = [owner[x] for x in sorted(owner)]
    for a, b, c, d in itertools.combinations(range(len(seq)), 4):
        if seq[a] == seq[c] and seq[b] == seq[d] and seq[a] != seq[b]:
            return False
    return True


def noncrossing_to_ndpf(blocks: Iterable[Iterable[int]]) -> Word:
    blocks = [tuple(sorted(b)) for b in blocks]
    elems = sorted(x for b in blocks for x in b)
    if elems != list(range(1, len(elems) + 1)):
        raise ValueError("blocks must partition [1..n]")
    if not is_noncrossing(blocks):
        raise ValueError("partition is crossing")
    return tuple(sorted(min(b) for b in blocks for _ in b))


# ---------------------------------------------------------------------------
# segmented sequences

@dataclass(frozen=True)
class Segmented:
    """A sequence cut into nonempty blocks by bars.

    Indexes both parking quasi-ribbons (blocks of letters) and segmented
    compositions (blocks of parts).
    """
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in self.blocks))
        if any(len(b) == 0 for b in self.blocks):
            raise ValueError("segmented blocks must be nonempty")

    @classmethod
    def parse(cls, text: str) -> "Segmented":
        """'11|335|6' or, for multi-digit entries, '1,1|3,10'."""
        text = text.strip()
        if not text:
            return cls(())
        pieces = text.split("|")
        if "," in text:
            return cls(tuple(tuple(int(x) for x in p.split(",")) for p in pieces))
        return cls(tuple(tuple(int(ch) for ch in p) for p in pieces))

    @classmethod
    def from_bars(cls, flat: Sequence[int], bars: Iterable[int]) -> "Segmented":
        if not flat:
            return cls(())
        cuts = [0, *sorted(set(bars)), len(flat)]
        return cls(tuple(tuple(flat[a:b]) for a, b in zip(cuts, cuts[1:])))

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    @property
    def bars(self) -> tuple[int, ...]:
        return tuple(itertools.accumulate(len(b) for b in self.blocks[:-1]))

    def __len__(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __str__(self) -> str:
        sep = "" if all(x < 10 for x in self.flat) else ","
        return "|".join(sep.join(map(str, b)) for b in self.blocks)

    def __repr__(self) -> str:
        return f"Segmented({str(self)!r})"

    def sort_key(self) -> tuple:
        mask = tuple(1 if i in set(self.bars) else 0 for i in range(1, len(self)))
        return (len(self), self.flat, mask)

    def join(self, other: "Segmented", bar: bool) -> "Segmented":
        """Concatenate, with a bar or by fusing the boundary blocks."""
        if not self.blocks:
            return other
        if not other.blocks:
            return self
        if bar:
            return Segmented(self.blocks + other.blocks)
        return Segmented(self.blocks[:-1] + (self.blocks[-1] + other.blocks[0],) + other.blocks[1:])

    def map_flat(self, fn) -> "Segmented":
        return Segmented(tuple(tuple(fn(x) for x in b) for b in self.blocks))

    def split_at(self, k: int) -> tuple["Segmented", "Segmented"]:
        """Cut the flat sequence after k entries, keeping the bar layout on both sides."""
        flat, bars = self.flat, set(self.bars)
        left = Segmented.from_bars(flat[:k], [b for b in bars if b < k])
        right = Segmented.from_bars(flat[k:], [b - k for b in bars if b > k])
        return left, right


def seg(text: str) -> Segmented:
    return Segmented.parse(text)


# ---------------------------------------------------------------------------
# enumeration

def nondecreasing_parking_functions(n: int) -> list[Word]:
    out = []

    def grow(prefix: list[int]):
        i = len(prefix)
        if i == n:
            out.append(tuple(prefix))
            return
        lo = prefix[-1] if prefix else 1
        for x in range(lo, i + 2):
            prefix.append(x)
            grow(prefix)
            prefix.pop()

    grow([])
    return out


def multiset_permutations(items: Sequence[int]) -> Iterator[Word]:
    """Distinct permutations in lexicographic order."""
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield tuple(out)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                out.append(k)
                yield from rec()
                out.pop()
                counts[k] += 1

    yield from rec()


@lru_cache(maxsize=None)
def _parking_functions(n: int) -> tuple[Word, ...]:
    return tuple(sorted(a for pi in nondecreasing_parking_functions(n)
                        for a in multiset_permutations(pi)))


def parking_functions(n: int) -> tuple[Word, ...]:
    return _parking_functions(n)


def prime_parking_functions(n: int) -> list[Word]:
    return [a for a in parking_functions(n) if is_prime(a)]


def segmented_compositions(n: int) -> list[Segmented]:
    if n == 0:
        return [Segmented(())]
    out = []
    for c in compositions(n):
        for mask in itertools.product((0, 1), repeat=len(c) - 1):
            bars = [i + 1 for i, m in enumerate(mask) if m]
            out.append(Segmented.from_bars(c, bars))
    return sorted(out, key=lambda s: s.sort_key())


KINDS = ("PF", "PPF", "NDPF", "NDPPF", "PERM", "COMP", "SEGCOMP")


def enumerate_kind(kind: str, n: int, cap: int | None = None) -> list:
    cap = enumeration_cap() if cap is None else cap
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    kind = kind.upper()
    if kind == "PF":
        return list(parking_functions(n))
    if kind == "PPF":
        return prime_parking_functions(n) if n else []
    if kind == "NDPF":
        return nondecreasing_parking_functions(n)
    if kind == "NDPPF":
        return [a for a in nondecreasing_parking_functions(n) if n and is_prime(a)]
    if kind == "PERM":
        return list(itertools.permutations(range(1, n + 1)))
    if kind == "COMP":
        return compositions(n)
    if kind == "SEGCOMP":
        return segmented_compositions(n)
    raise ValueError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")


def multinomial(*ks: int) -> int:
    total, out = 0, 1
    for k in ks:
        total += k
        out *= comb(total, k)
    return out
