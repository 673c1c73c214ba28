"""Exact truncated q-expansions.

A ``QSeries`` is a power series in q with rational coefficients, known modulo
q**prec.  Values are immutable; every operation returns a new series and never
reads an index at or beyond the precision of an operand.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Iterable, Sequence

from .errors import PreconditionError

__all__ = [
    "QSeries",
    "Rat",
    "as_rat",
    "qs_add",
    "qs_mul",
    "qs_derive",
    "qs_U",
    "qs_V",
]

Rat = Fraction

_ZERO = Fraction(0)


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(x, (int, Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact coefficient")


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Rational)) and not isinstance(x, bool)


class QSeries:
    """Truncated q-expansion sum_{n < prec} a(n) q^n over Q."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = (), prec: int | None = None):
        c = tuple(as_rat(a) for a in coeffs)
        if prec is not None:
            if prec < 0:
                raise PreconditionError("precision must be nonnegative")
            if len(c) > prec:
                c = c[:prec]
            elif len(c) < prec:
                c = c + (_ZERO,) * (prec - len(c))
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> "QSeries":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_c", coeffs)
        return obj

    @classmethod
    def constant(cls, c, prec: int) -> "QSeries":
        if prec == 0:
            return cls._raw(())
        return cls._raw((as_rat(c),) + (_ZERO,) * (prec - 1))

    @classmethod
    def zero(cls, prec: int) -> "QSeries":
        return cls._raw((_ZERO,) * prec)

    # basic access

    @property
    def prec(self) -> int:
        return len(self._c)

    @property
    def coeffs(self) -> tuple:
        return self._c

    def __len__(self):
        return len(self._c)

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self._c[n]
        if n < 0 or n >= len(self._c):
            raise IndexError(f"coefficient q^{n} is beyond precision {len(self._c)}")
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def truncate(self, prec: int) -> "QSeries":
        if prec >= len(self._c):
            return self
        return QSeries._raw(self._c[:prec])

    def is_zero(self) -> bool:
        return not any(self._c)

    def valuation(self) -> int | None:
        for n, a in enumerate(self._c):
            if a:
                return n
        return None

    # comparison

    def __eq__(self, other):
        if _is_scalar(other):
            other = QSeries.constant(other, len(self._c))
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(len(self._c), len(other._c))
        return self._c[:n] == other._c[:n]

    __hash__ = None

    def identical(self, other: "QSeries") -> bool:
        """Equality including precision."""
        return isinstance(other, QSeries) and self._c == other._c

    # ring operations

    def __add__(self, other):
        if _is_scalar(other):
            if not self._c:
                return self
            return QSeries._raw((self._c[0] + other,) + self._c[1:])
        if not isinstance(other, QSeries):
            return NotImplemented
        return QSeries._raw(tuple(a + b for a, b in zip(self._c, other._c)))

    __radd__ = __add__

    def __neg__(self):
        return QSeries._raw(tuple(-a for a in self._c))

    def __sub__(self, other):
        if _is_scalar(other):
            return self + (-other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return QSeries._raw(tuple(a - b for a, b in zip(self._c, other._c)))

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "QSeries":
        c = as_rat(c)
        if c == 1:
            return self
        return QSeries._raw(tuple(c * a for a in self._c))

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return _cauchy(self._c, other._c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self.scale(1 / as_rat(other))
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise PreconditionError("only nonnegative integer powers are supported")
        result = QSeries.constant(1, len(self._c))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # operators on q-expansions

    def derive(self, times: int = 1) -> "QSeries":
        """Apply D = q d/dq ``times`` times."""
        if times == 0:
            return self
        return QSeries._raw(tuple(a * n**times if a else a for n, a in enumerate(self._c)))

    def U(self, d: int) -> "QSeries":
        if d < 1:
            raise PreconditionError("U_d needs d >= 1")
        if d == 1:
            return self
        n = len(self._c) // d
        return QSeries._raw(self._c[: n * d : d])

    def V(self, d: int) -> "QSeries":
        # output precision stays self.prec: indices up to prec*d - d are
        # determined, but the common contract keeps the operand precision
        if d < 1:
            raise PreconditionError("V_d needs d >= 1")
        if d == 1:
            return self
        prec = len(self._c)
        out = [_ZERO] * prec
        for n in range(0, (prec - 1) // d + 1):
            out[n * d] = self._c[n]
        return QSeries._raw(tuple(out))

    # display and serialization

    def __repr__(self):
        terms = []
        for n, a in enumerate(self._c[:8]):
            if a:
                terms.append(f"{a}" if n == 0 else f"{a}*q^{n}")
        body = " + ".join(terms) if terms else "0"
        return f"QSeries({body} + O(q^{len(self._c)}))"

    def to_json(self) -> dict:
        return {
            "prec": len(self._c),
            "coeffs": [[str(a.numerator), str(a.denominator)] for a in self._c],
        }

    @classmethod
    def from_json(cls, obj) -> "QSeries":
        if not isinstance(obj, dict) or "prec" not in obj or "coeffs" not in obj:
            raise ValueError("QSeries JSON needs 'prec' and 'coeffs'")
        prec = obj["prec"]
        coeffs = obj["coeffs"]
        if not isinstance(prec, int) or prec < 0 or len(coeffs) != prec:
            raise ValueError("QSeries JSON: coeffs length must equal prec")
        out = []
        for pair in coeffs:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ValueError("QSeries JSON: coefficient must be [num, den]")
            num, den = int(pair[0]), int(pair[1])
            if den <= 0:
                raise ValueError("QSeries JSON: denominator must be positive")
            out.append(Fraction(num, den))
        return cls._raw(tuple(out))


def _cauchy(a: Sequence[Fraction], b: Sequence[Fraction]) -> QSeries:
    # clear denominators and convolve integers, which is much cheaper than
    # multiplying Fractions term by term
    n = min(len(a), len(b))
    if n == 0:
        return QSeries._raw(())
    a = a[:n]
    b = b[:n]
    da = lcm(*(x.denominator for x in a))
    db = lcm(*(x.denominator for x in b))
    ia = [x.numerator * (da // x.denominator) for x in a]
    ib = [x.numerator * (db // x.denominator) for x in b]
    nza = [(i, x) for i, x in enumerate(ia) if x]
    out = [0] * n
    for i, x in nza:
        for j in range(n - i):
            y = ib[j]
            if y:
                out[i + j] += x * y
    den = da * db
    if den == 1:
        return QSeries._raw(tuple(Fraction(v) for v in out))
    return QSeries._raw(tuple(Fraction(v, den) for v in out))


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_derive(a: QSeries) -> QSeries:
    return a.derive()


def qs_U(a: QSeries, d: int) -> QSeries:
    return a.U(d)


def qs_V(a: QSeries, d: int) -> QSeries:
    return a.V(d)
