"""Builders for expected expansions written as compact strings."""
from __future__ import annotations

from fractions import Fraction

from parkhopf.coeffs import LinComb, TensorElem, tensor


def _coeff_and_key(token: str) -> tuple[Fraction, str]:
    if "*" in token:
        c, key = token.split("*")
        return Fraction(c), key
    if token.startswith("-"):
        return Fraction(-1), token[1:]
    return Fraction(1), token


def lin(ctor, terms: str) -> LinComb:
    """Sum of ctor(key) over space-separated keys, each optionally written c*key or -key."""
    out = ctor("").scale(0)
    for token in terms.split():
        c, key = _coeff_and_key(token)
        out = out + ctor(key).scale(c)
    return out


def ten(ctor, terms: str) -> TensorElem:
    """Sum of ctor(u) x ctor(v) over space-separated u/v pairs; an empty side is the unit."""
    out = None
    for token in terms.split():
        c, pair = _coeff_and_key(token)
        left, right = pair.split("/")
        t = tensor(ctor(left), ctor(right)).scale(c)
        out = t if out is None else out + t
    return out
