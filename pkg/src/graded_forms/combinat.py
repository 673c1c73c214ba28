"""Exact factorial ratios, generalized binomials and weight normalization."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import PreconditionError
from .qseries import as_rat


def norm_weight(w):
    """Return an int for integral weights and a Fraction for half-integral ones."""
    w = as_rat(w)
    if w.denominator == 1:
        return int(w)
    if w.denominator != 2:
        raise PreconditionError(f"weight {w} is neither integral nor half-integral", "bad_weight")
    return w


@lru_cache(maxsize=4096)
def rising(x, n: int) -> Fraction:
    """x (x+1) ... (x+n-1), i.e. Gamma(x+n)/Gamma(x)."""
    out = Fraction(1)
    x = as_rat(x)
    for i in range(n):
        out *= x + i
    return out


@lru_cache(maxsize=4096)
def falling(x, n: int) -> Fraction:
    out = Fraction(1)
    x = as_rat(x)
    for i in range(n):
        out *= x - i
    return out


def binom(r, k: int) -> Fraction:
    """Generalized binomial coefficient for rational r and integer k >= 0."""
    if k < 0:
        return Fraction(0)
    return falling(as_rat(r), k) / factorial(k)


def fact(n: int) -> int:
    if n < 0:
        raise PreconditionError(f"factorial of negative integer {n}")
    return factorial(n)
