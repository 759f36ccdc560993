"""Truncated power series with exact rational coefficients, and the named
generating functions of the package, each paired with an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, isqrt
from typing import Callable, Iterable, Sequence

from . import words as W

DEFAULT_ORDER = 12


def _exact_sqrt(x: Fraction) -> Fraction:
    x = Fraction(x)
    p, q = isqrt(x.numerator), isqrt(x.denominator)
    if x < 0 or p * p != x.numerator or q * q != x.denominator:
        raise ValueError(f"constant term {x} has no rational square root")
    return Fraction(p, q)


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients c_0..c_{order-1}; everything from t^order on is discarded."""
    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable = (), order: int = DEFAULT_ORDER):
        cs = [Fraction(c) for c in coefficients][:order]
        cs += [Fraction(0)] * (order - len(cs))
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls((fn(n) for n in range(order)), order)

    @classmethod
    def t(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls((0, 1), order)

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "PowerSeries":
        return cls((1,), order)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, n: int) -> Fraction:
        return self.coefficients[n]

    def ints(self, start: int = 0, stop: int | None = None) -> list[int]:
        out = []
        for c in self.coefficients[start:stop]:
            if c.denominator != 1:
                raise ValueError(f"non-integer coefficient {c}")
            out.append(int(c))
        return out

    def _coerce(self, other) -> "PowerSeries":
        if isinstance(other, PowerSeries):
            if other.order != self.order:
                raise ValueError(f"truncation orders differ: {self.order} vs {other.order}")
            return other
        return PowerSeries((other,), self.order)

    def __add__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        return PowerSeries((a + b for a, b in zip(self.coefficients, other.coefficients)), self.order)

    __radd__ = __add__

    def __neg__(self) -> "PowerSeries":
        return PowerSeries((-a for a in self.coefficients), self.order)

    def __sub__(self, other) -> "PowerSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PowerSeries":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PowerSeries":
        other = self._coerce(other)
        a, b, n = self.coefficients, other.coefficients, self.order
        return PowerSeries((sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)), n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PowerSeries":
        if k < 0:
            return self.inverse() ** (-k)
        out = PowerSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other) -> "PowerSeries":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "PowerSeries":
        return self._coerce(other) * self.inverse()

    def inverse(self) -> "PowerSeries":
        a = self.coefficients
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        b = [1 / a[0]]
        for n in range(1, self.order):
            b.append(-sum(a[k] * b[n - k] for k in range(1, n + 1)) / a[0])
        return PowerSeries(b, self.order)

    def sqrt(self) -> "PowerSeries":
        """The square root with positive constant term, by the recurrence for b*b = a."""
        a = self.coefficients
        b = [_exact_sqrt(a[0])]
        if b[0] == 0:
            raise ValueError("square root needs a nonzero constant term")
        for n in range(1, self.order):
            b.append((a[n] - sum(b[k] * b[n - k] for k in range(1, n))) / (2 * b[0]))
        return PowerSeries(b, self.order)

    def div_t(self) -> "PowerSeries":
        if self.coefficients[0] != 0:
            raise ValueError("cannot divide by t: nonzero constant term")
        # the top coefficient is unknown after the shift, so the order drops by one
        return PowerSeries(self.coefficients[1:], self.order - 1)

    def mul_t(self) -> "PowerSeries":
        return PowerSeries((0,) + self.coefficients, self.order)

    def with_order(self, order: int) -> "PowerSeries":
        """Truncate, or pad with zeros (only sound when the padded terms are known to vanish)."""
        return PowerSeries(self.coefficients, order)

    def compose(self, g: "PowerSeries") -> "PowerSeries":
        """self(g(t)) for g without constant term, by Horner's rule."""
        g = self._coerce(g)
        if g[0] != 0:
            raise ValueError("inner series must have zero constant term")
        out = PowerSeries((), self.order)
        for c in reversed(self.coefficients):
            out = out * g + c
        return out


# ---------------------------------------------------------------------------
# building blocks

def binomial_power(e: int, n: int, order: int) -> PowerSeries:
    """(1 - t^n)^e for any integer e."""
    cs = [Fraction(0)] * order
    k = 0
    while n * k < order:
        gen_binom = Fraction(1)
        for i in range(k):
            gen_binom = gen_binom * (e - i) / (i + 1)
        cs[n * k] = gen_binom * (-1) ** k
        k += 1
    return PowerSeries(cs, order)


def euler_product(exponents: Sequence[int], order: int) -> PowerSeries:
    """prod_{n>=1} (1 - t^n)^{exponents[n]} (exponents[0] is ignored)."""
    out = PowerSeries.one(order)
    for n in range(1, min(order, len(exponents))):
        if exponents[n]:
            out = out * binomial_power(exponents[n], n, order)
    return out


def inverse_euler_transform(a: PowerSeries) -> list[int]:
    """Exponents e_n with prod (1 - t^n)^{-e_n} = a (a_0 = 1); e_0 is set to 0."""
    if a[0] != 1:
        raise ValueError("constant term must be 1")
    e = [0]
    for n in range(1, a.order):
        partial = euler_product([-x for x in e] + [0], n + 1)
        e.append(int(a[n] - partial[n]))
    return e


def fixed_point(step: Callable[[PowerSeries], PowerSeries], order: int, start: int = 1) -> PowerSeries:
    """Iterate F -> step(F); each pass fixes one more coefficient when step raises the t-adic order."""
    f = PowerSeries((start,), order)
    for _ in range(order):
        f = step(f)
    return f


# ---------------------------------------------------------------------------
# named series

def parking_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    return PowerSeries.from_function(lambda n: (n + 1) ** (n - 1) if n else 1, order)


def radical(order: int) -> PowerSeries:
    """sqrt(1 - 6t + t^2)."""
    return PowerSeries((1, -6, 1), order).sqrt()


def schroder_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    numer = PowerSeries((1, 1), order + 1) - radical(order + 1)
    return numer.div_t() * Fraction(1, 4)


def schroder_by_fixed_point(order: int = DEFAULT_ORDER) -> PowerSeries:
    """The one-generator free trialgebra series: F - 1 = t(2F^2 - F)."""
    t = PowerSeries.t(order)
    return fixed_point(lambda f: 1 + t * (2 * f * f - f), order)


def catalan_series(order: int = DEFAULT_ORDER) -> PowerSeries:
    root = PowerSeries((1, -4), order + 1).sqrt()
    return (1 - root).div_t() * Fraction(1, 2)


def _tp(order: int) -> PowerSeries:
    pf = parking_series(order)
    return (pf - 1) / (pf * pf)


def _connected(order: int) -> PowerSeries:
    return 1 - parking_series(order).inverse()


def _lie_generators(order: int) -> PowerSeries:
    c = _connected(order).ints()
    return 1 - euler_product(c, order)


def _large_schroder(order: int) -> PowerSeries:
    return 1 - schroder_series(order).inverse()


def _large_schroder_closed(order: int) -> PowerSeries:
    return (PowerSeries((1, -1), order) - radical(order)) * Fraction(1, 2)


def _cqsym_generators(order: int) -> PowerSeries:
    return 1 - catalan_series(order).inverse()


def _trialgebra_generators(order: int) -> PowerSeries:
    pf = parking_series(order)
    return (pf - 1) / (2 * pf * pf - pf)


def _cqsym_primitives(order: int) -> PowerSeries:
    return PowerSeries(inverse_euler_transform(catalan_series(order)), order)


def _segmented(order: int) -> PowerSeries:
    return PowerSeries.from_function(lambda n: 3 ** (n - 1) if n else 1, order)


def _mobius(n: int) -> int:
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def balanced_lyndon_count(n: int) -> int:
    """Lyndon words of length 2n with n letters a and n letters b."""
    if n == 0:
        return 0
    total = sum(_mobius(d) * comb(2 * n // d, n // d) for d in range(1, n + 1) if n % d == 0)
    return total // (2 * n)


NAMED: dict[str, Callable[[int], PowerSeries]] = {
    "PF": parking_series,
    "TP": _tp,
    "connected": _connected,
    "lie_generators": _lie_generators,
    "schroder": schroder_series,
    "large_schroder": _large_schroder,
    "catalan": catalan_series,
    "cqsym_generators": _cqsym_generators,
    "trialgebra_generators": _trialgebra_generators,
    "cqsym_primitives": _cqsym_primitives,
    "segmented": _segmented,
}


def named_series(name: str, order: int = DEFAULT_ORDER) -> PowerSeries:
    try:
        return NAMED[name](order)
    except KeyError:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(NAMED)}") from None


# ---------------------------------------------------------------------------
# Narayana polynomials

def narayana(n: int) -> tuple[int, ...]:
    """Coefficients of c_n(q): nondecreasing parking functions of length n by (distinct letters - 1)."""
    if not 1 <= n <= 10:
        raise ValueError("narayana(n) needs 1 <= n <= 10")
    counts = [0] * n
    for pi in W.nondecreasing_parking_functions(n):
        counts[len(set(pi)) - 1] += 1
    return tuple(counts)


def narayana_closed(n: int) -> tuple[int, ...]:
    return tuple(comb(n, k) * comb(n, k - 1) // n for k in range(1, n + 1))


def narayana_value(n: int, q) -> Fraction:
    return sum(Fraction(c) * Fraction(q) ** k for k, c in enumerate(narayana(n)))


# ---------------------------------------------------------------------------
# independent routes

@lru_cache(maxsize=None)
def _enumerated(name: str, n: int) -> int:
    # imported here: these modules register algebras and pull in much more than series needs
    from . import cqsym, sqsym
    from .coeffs import primitive_dims, totally_primitive_dims
    if name == "PF":
        return len(W.parking_functions(n))
    if name == "connected":
        return len([a for a in W.parking_functions(n) if W.is_connected(a)])
    if name == "TP":
        return totally_primitive_dims("F", n)
    if name == "schroder":
        return sqsym.class_count(n)
    if name == "large_schroder":
        return len(sqsym.pqs_generators(n))
    if name == "catalan":
        return len(W.nondecreasing_parking_functions(n))
    if name == "cqsym_generators":
        return len(cqsym.connected_ndpf(n))
    if name == "cqsym_primitives":
        return primitive_dims("PCat", n)
    if name == "segmented":
        return len(W.segmented_compositions(n))
    raise KeyError(name)


# largest degree at which each enumeration stays fast
ENUMERATION_LIMITS = {
    "PF": 6, "connected": 6, "TP": 3, "schroder": 6, "large_schroder": 6, "catalan": 8,
    "cqsym_generators": 8, "cqsym_primitives": 4, "segmented": 8,
}


def _alternate(name: str, order: int) -> PowerSeries | None:
    """A second closed route for each series, sharing no formula with the first."""
    t = PowerSeries.t(order)
    if name == "schroder":
        return schroder_by_fixed_point(order)
    if name == "large_schroder":
        return _large_schroder_closed(order)
    if name == "cqsym_generators":
        return t * catalan_series(order)
    if name == "cqsym_primitives":
        return PowerSeries([balanced_lyndon_count(n) for n in range(order)], order)
    if name == "catalan":
        return fixed_point(lambda c: 1 + t * c * c, order)
    return None


def composition_checks(order: int = DEFAULT_ORDER) -> dict[str, bool]:
    """Freeness identities: each generator series, substituted into the one-generator free series, gives PF."""
    pf = parking_series(order)
    dend = catalan_series(order) - 1
    trid = schroder_series(order)
    return {
        "TP: PF - 1 = (C - 1)(TP)": dend.compose(_tp(order)) == pf - 1,
        "trialgebra: PF = S(g)": trid.compose(_trialgebra_generators(order)) == pf,
        "connected: PF = 1/(1 - connected)": (1 - _connected(order)).inverse() == pf,
        "lie: free Lie algebra on the generators has the connected dimensions": inverse_euler_transform(
            (1 - _lie_generators(order)).inverse())[1:] == _connected(order).ints(1),
        "large schroder: U_n = 2 s_(n-1), n >= 2": all(
            _large_schroder(order)[n] == 2 * trid[n - 1] for n in range(2, order)),
        "narayana: c_n(2) = s_n, n <= 7": all(
            narayana_value(n, 2) == trid[n] for n in range(1, min(8, order))),
    }


def primitive_dimension_check(max_degree: int = 3) -> bool:
    """Primitives of PQSym are counted by connected parking functions."""
    from .coeffs import primitive_dims
    return all(primitive_dims("F", n) == _enumerated("connected", n) for n in range(1, max_degree + 1))


def series_report(max_degree: int = 8) -> list[dict]:
    """One row per named series: coefficients 1..max_degree and every route that agrees or disagrees."""
    order = max(max_degree + 1, 2)
    rows = []
    for name in NAMED:
        main = named_series(name, order)
        row = {"name": name, "coefficients": main.ints(1), "checks": {}}
        alt = _alternate(name, order)
        if alt is not None:
            row["checks"]["closed forms agree"] = alt == main
        limit = min(ENUMERATION_LIMITS.get(name, 0), max_degree)
        if limit:
            enum = [_enumerated(name, n) for n in range(1, limit + 1)]
            row["checks"][f"enumeration to degree {limit}"] = enum == main.ints(1, limit + 1)
        rows.append(row)
    comp = composition_checks(order)
    comp["primitives of PQSym = connected, degree <= 3"] = primitive_dimension_check(min(3, max_degree))
    rows.append({"name": "identities", "coefficients": [], "checks": comp})
    return rows
