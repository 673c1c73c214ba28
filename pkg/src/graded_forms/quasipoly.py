"""Quasimodular polynomials F(z, X) = sum_r f_r X^r.

Construction from modular forms (the Xi lift and derivative polynomials),
certification through the E2-decomposition, depth reduction and the Hecke
action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinat import norm_weight, rising
from .errors import InsufficientPrecision, PreconditionError
from .modforms import Certificate, ModularForm, eisenstein, hecke_T, is_modular, sturm_bound
from .qseries import QSeries

__all__ = [
    "QuasiPolynomial",
    "s_r",
    "e2_polynomial",
    "depth_zero",
    "xi_lift",
    "xi_lift_series",
    "derivative_polynomial",
    "qp_mul",
    "certify_quasimodular",
    "depth_reduce",
    "hecke_TP",
    "xi_hat_coefficients",
]


@dataclass(frozen=True, eq=False)
class QuasiPolynomial:
    """Weight-tagged polynomial in X whose coefficients are q-series.

    ``coeffs[r]`` is the coefficient of X^r; the depth bound is len(coeffs)-1
    and trailing zero coefficients are allowed.
    """

    weight: object
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "weight", norm_weight(self.weight))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not self.coeffs:
            raise PreconditionError("a quasimodular polynomial needs at least one coefficient")

    @property
    def depth(self) -> int:
        return len(self.coeffs) - 1

    @property
    def prec(self) -> int:
        return min(c.prec for c in self.coeffs)

    def s(self, r: int) -> QSeries:
        return s_r(self, r)

    def trim(self) -> "QuasiPolynomial":
        c = list(self.coeffs)
        while len(c) > 1 and c[-1].is_zero():
            c.pop()
        return QuasiPolynomial(self.weight, c)

    def pad(self, depth: int) -> "QuasiPolynomial":
        if depth <= self.depth:
            return self
        z = QSeries.zero(self.prec)
        return QuasiPolynomial(self.weight, self.coeffs + (z,) * (depth - self.depth))

    def _check_weight(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        if other.weight != self.weight:
            raise PreconditionError(
                f"cannot add weights {self.weight} and {other.weight}", "weight_mismatch")
        return None

    def __add__(self, other):
        bad = self._check_weight(other)
        if bad is NotImplemented:
            return bad
        d = max(self.depth, other.depth)
        a, b = self.pad(d), other.pad(d)
        return QuasiPolynomial(self.weight, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    def __sub__(self, other):
        bad = self._check_weight(other)
        if bad is NotImplemented:
            return bad
        return self + other.scale(-1)

    def scale(self, c) -> "QuasiPolynomial":
        return QuasiPolynomial(self.weight, [x.scale(c) for x in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, QuasiPolynomial):
            return NotImplemented
        if self.weight != other.weight:
            return False
        d = max(self.depth, other.depth)
        return all(x == y for x, y in zip(self.pad(d).coeffs, other.pad(d).coeffs))

    __hash__ = None

    def to_json(self) -> dict:
        return {"weight": _weight_to_json(self.weight),
                "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "QuasiPolynomial":
        if not isinstance(obj, dict) or "weight" not in obj or "coeffs" not in obj:
            raise ValueError("QuasiPolynomial JSON needs 'weight' and 'coeffs'")
        if not isinstance(obj["coeffs"], list) or not obj["coeffs"]:
            raise ValueError("QuasiPolynomial JSON needs a nonempty coefficient list")
        return cls(_weight_from_json(obj["weight"]),
                   [QSeries.from_json(c) for c in obj["coeffs"]])


def _weight_to_json(w):
    if isinstance(w, Fraction):
        return f"{w.numerator}/{w.denominator}"
    return w


def _weight_from_json(w):
    if isinstance(w, bool) or not isinstance(w, (int, str)):
        raise ValueError("weight must be an integer or a 'p/q' string")
    return norm_weight(Fraction(w))


def s_r(F: QuasiPolynomial, r: int) -> QSeries:
    """The coefficient of X^r."""
    if r < 0 or r > F.depth:
        raise PreconditionError(f"index {r} outside 0..{F.depth}", "index_range")
    return F.coeffs[r]


def e2_polynomial(prec: int) -> QuasiPolynomial:
    return QuasiPolynomial(2, [eisenstein(2, prec), QSeries.constant(12, prec)])


def depth_zero(f, weight=None) -> QuasiPolynomial:
    """A modular form (or bare series with a weight) as a depth-0 polynomial."""
    if isinstance(f, ModularForm):
        return QuasiPolynomial(f.weight, [f.series])
    return QuasiPolynomial(weight, [f])


def xi_lift_series(h: QSeries, w, m: int) -> QuasiPolynomial:
    """Xi lift of a series of weight w; the X^r coefficient is
    C(m, r) D^(m-r) h / ((w)_(m-r)) with a rising factorial in the denominator."""
    w = norm_weight(w)
    if w <= 0:
        raise PreconditionError(f"Xi lift needs positive weight, got {w}", "weight_too_small")
    if m < 0:
        raise PreconditionError("depth must be nonnegative")
    coeffs = [h.derive(m - r).scale(Fraction(comb(m, r)) / rising(w, m - r))
              for r in range(m + 1)]
    return QuasiPolynomial(w + 2 * m, coeffs)


def xi_lift(h: ModularForm, m: int) -> QuasiPolynomial:
    if h.weight < 2:
        raise PreconditionError(f"Xi lift needs weight >= 2, got {h.weight}", "weight_too_small")
    return xi_lift_series(h.series, h.weight, m)


def derivative_polynomial(f: ModularForm, m: int) -> QuasiPolynomial:
    """sum_k k! C(m,k) C(w+m-1,k) D^(m-k) f X^k, the polynomial of D^m f."""
    w = f.weight
    if w <= 0 or m < 1:
        raise PreconditionError("derivative polynomial needs w > 0 and m >= 1")
    coeffs = [f.series.derive(m - k).scale(factorial(k) * comb(m, k) * comb(w + m - 1, k))
              for k in range(m + 1)]
    return QuasiPolynomial(w + 2 * m, coeffs)


def qp_mul(F: QuasiPolynomial, G: QuasiPolynomial) -> QuasiPolynomial:
    prec = min(F.prec, G.prec)
    out = [QSeries.zero(prec) for _ in range(F.depth + G.depth + 1)]
    for i, a in enumerate(F.coeffs):
        if a.is_zero():
            continue
        for j, b in enumerate(G.coeffs):
            out[i + j] = out[i + j] + a * b
    return QuasiPolynomial(F.weight + G.weight, out)


def certify_quasimodular(F: QuasiPolynomial) -> Certificate:
    """Check f_r = 12^r sum_{s>=r} C(s,r) h_s E2^(s-r) with h_s modular of weight xi-2s."""
    xi = F.weight
    if isinstance(xi, Fraction):
        raise PreconditionError("certification is only available at integral weight",
                                "unsupported_weight")
    m = F.depth
    sb = sturm_bound(xi)
    prec = F.prec
    if prec < sb:
        raise InsufficientPrecision(f"weight {xi} needs {sb} coefficients, have {prec}")
    e2 = eisenstein(2, prec)
    e2pow = [QSeries.constant(1, prec)]
    for _ in range(m):
        e2pow.append(e2pow[-1] * e2)
    h = [None] * (m + 1)
    for r in range(m, -1, -1):
        acc = F.coeffs[r].truncate(prec) / Fraction(12) ** r
        for s in range(r + 1, m + 1):
            acc = acc - h[s].scale(comb(s, r)) * e2pow[s - r]
        h[r] = acc
    parts = []
    for r in range(m, -1, -1):
        cert = is_modular(h[r], xi - 2 * r)
        parts.append(cert)
        if not cert.ok:
            return Certificate(False, "quasimodular", xi, sb,
                               tuple(p.decomposition for p in reversed(parts)),
                               components=tuple(h), failed_at=r,
                               detail=f"component h_{r} is not modular of weight {xi - 2 * r}"
                                      f" ({cert.detail})",
                               parts=tuple(reversed(parts)))
    parts.reverse()
    return Certificate(True, "quasimodular", xi, sb, tuple(p.decomposition for p in parts),
                       components=tuple(h), parts=tuple(parts))


def xi_hat_coefficients(h: QSeries, w, K: int) -> list:
    """D^l h / (l! (w)_l) for l < K: the X-coefficients of the Xi-hat lift."""
    w = norm_weight(w)
    if w <= 0:
        raise PreconditionError(f"Xi-hat lift needs positive weight, got {w}", "weight_too_small")
    return [h.derive(l).scale(Fraction(1, factorial(l)) / rising(w, l)) for l in range(K)]


def depth_reduce(F: QuasiPolynomial, delta: int = 0) -> QuasiPolynomial:
    """F - m! Pi_m(Xi-hat(S_m F)); the result has depth bound m-1.

    The Xi-hat coefficients do not depend on the offset, so ``delta`` only
    has to be a legal offset.
    """
    m = F.depth
    if m < 1:
        raise PreconditionError("depth reduction needs depth >= 1", "depth_too_small")
    if delta < 0:
        raise PreconditionError("offset must be nonnegative")
    w = F.weight - 2 * m
    if w <= 0:
        raise PreconditionError(f"weight {F.weight} too small for depth {m}", "weight_too_small")
    phi = xi_hat_coefficients(F.coeffs[m], w, m + 1)
    out = []
    for r in range(m):
        out.append(F.coeffs[r] - phi[m - r].scale(Fraction(factorial(m), factorial(r))))
    return QuasiPolynomial(F.weight, out)


def hecke_TP(p: int, F: QuasiPolynomial) -> QuasiPolynomial:
    """Hecke operator rescaled by p^(xi/2-1): f_r -> p^r T_p f_r at weight xi-2r."""
    xi = F.weight
    if isinstance(xi, Fraction):
        raise PreconditionError("Hecke action implemented at integral weight only",
                                "unsupported_weight")
    out = [hecke_T(p, xi - 2 * r, f).scale(Fraction(p) ** r) for r, f in enumerate(F.coeffs)]
    return QuasiPolynomial(xi, out)
