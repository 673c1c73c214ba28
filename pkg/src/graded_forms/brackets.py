"""Brackets on X-series, quasimodular polynomials and Jacobi-like forms.

* the Lie bracket of X-series transported from operator commutators,
* its quasimodular counterpart on polynomials of a fixed depth,
* the heat operator L_mu = D - mu d/dX - X d^2/dX^2 and its closed iterates,
* Rankin-Cohen brackets on Jacobi-like forms and quasimodular polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combinat import binom, rising
from .errors import PreconditionError
from .jacobilike import JacobiLikeForm, canonical_lift, pi_map
from .qseries import QSeries, as_rat
from .quasipoly import QuasiPolynomial

__all__ = [
    "BracketParams",
    "xi_coeff",
    "series_lie_bracket",
    "lie_bracket_Q",
    "heat_apply",
    "heat_coeffs",
    "rc_bracket_J",
    "rc_bracket_QP",
    "rc_bracket_QP_m",
    "rc_bracket_QP_m_closed",
    "gg_coeff",
]


_HALF = Fraction(1, 2)


def _half(x) -> Fraction:
    x = as_rat(x)
    if (2 * x).denominator != 1:
        raise PreconditionError(f"{x} is not a half-integer", "half_integer")
    return x


@dataclass(frozen=True)
class BracketParams:
    """Rankin-Cohen order and heat parameters; mu values are half-integers."""

    n: int = 0
    mu1: Fraction = Fraction(1, 2)
    mu2: Fraction = Fraction(1, 2)
    delta1: int = 0
    delta2: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise PreconditionError("bracket order must be nonnegative")
        object.__setattr__(self, "mu1", _half(self.mu1))
        object.__setattr__(self, "mu2", _half(self.mu2))
        if self.delta1 < 0 or self.delta2 < 0:
            raise PreconditionError("offsets must be nonnegative", "offset")

    @classmethod
    def from_twice(cls, n, twice_mu1, twice_mu2, delta1=0, delta2=0):
        return cls(n, Fraction(twice_mu1, 2), Fraction(twice_mu2, 2), delta1, delta2)


def xi_coeff(r: int, p: int, q: int, a: int, b: int) -> Fraction:
    """(r-p+a)! (r-p+q+a-1)! (p-q+b)! (p-q+b-1)! / (q! (r+a+b)! (r+a+b-1)!)."""
    if not (r >= p >= q >= 0) or a < 1 or b < 1:
        raise PreconditionError(f"need r >= p >= q >= 0 and a, b >= 1 (got {r},{p},{q},{a},{b})",
                                "index_range")
    f = factorial
    num = f(r - p + a) * f(r - p + q + a - 1) * f(p - q + b) * f(p - q + b - 1)
    den = f(q) * f(r + a + b) * f(r + a + b - 1)
    return Fraction(num, den)


class _Derivs:
    def __init__(self, coeffs):
        self._c = coeffs
        self._cache = {}

    def __call__(self, j, q):
        key = (j, q)
        if key not in self._cache:
            self._cache[key] = self._c[j].derive(q)
        return self._cache[key]


def _xbracket_coeff(f, g, df, dg, R, a, b, prec):
    # sum_{p<=R} sum_{q<=p} Xi^{R,p,q}_{a,b} f_(R-p) D^q g_(p-q) - (f <-> g, a <-> b)
    acc = QSeries.zero(prec)
    for p in range(R + 1):
        for q in range(p + 1):
            t1 = (f[R - p] * dg(p - q, q)).scale(xi_coeff(R, p, q, a, b))
            t2 = (g[R - p] * df(p - q, q)).scale(xi_coeff(R, p, q, b, a))
            acc = acc + t1 - t2
    return acc


def series_lie_bracket(F: JacobiLikeForm, G: JacobiLikeForm, xi1: int, xi2: int) -> JacobiLikeForm:
    """[F, G]^X with parameters xi1, xi2; offset d1+d2, weight tag 2(xi1+xi2)."""
    a, b = F.offset + xi1, G.offset + xi2
    if a < 1 or b < 1 or xi1 < 0 or xi2 < 0:
        raise PreconditionError("need xi_i >= 0 and offset_i + xi_i >= 1", "offset")
    K = min(F.xtrunc, G.xtrunc)
    prec = min(F.prec, G.prec)
    df, dg = _Derivs(F.coeffs), _Derivs(G.coeffs)
    out = [_xbracket_coeff(F.coeffs, G.coeffs, df, dg, R, a, b, prec) for R in range(K)]
    return JacobiLikeForm(2 * (xi1 + xi2), F.offset + G.offset, out)


def lie_bracket_Q(F1: QuasiPolynomial, F2: QuasiPolynomial, delta1: int = 0,
                  delta2: int = 0) -> QuasiPolynomial:
    """Quasimodular Lie bracket of two depth-m polynomials of weights 2 xi_1, 2 xi_2.

    Equals Pi_m of the X-bracket of the canonical lifts (offsets delta_i), whose
    bracket parameters are xi_i - m - delta_i; hence the Xi subscripts are
    xi_i - m and the result does not depend on the offsets.
    """
    m = max(F1.depth, F2.depth)
    F1, F2 = F1.pad(m), F2.pad(m)
    if isinstance(F1.weight, Fraction) or isinstance(F2.weight, Fraction) \
            or F1.weight % 2 or F2.weight % 2:
        raise PreconditionError("Lie bracket needs even weights", "weight_parity")
    xi1, xi2 = F1.weight // 2, F2.weight // 2
    if delta1 < 0 or delta2 < 0 or xi1 - m - delta1 < 0 or xi2 - m - delta2 < 0:
        raise PreconditionError("need 0 <= delta_i <= xi_i - m", "offset")
    a, b = xi1 - m, xi2 - m
    if a < 1 or b < 1:
        raise PreconditionError("need weights greater than 2m", "weight_too_small")
    # the lifts agree with (m-k)! f_(m-k) on their first m+1 coefficients
    phi1 = [F1.coeffs[m - k].scale(factorial(m - k)) for k in range(m + 1)]
    phi2 = [F2.coeffs[m - k].scale(factorial(m - k)) for k in range(m + 1)]
    prec = min(F1.prec, F2.prec)
    d1, d2 = _Derivs(phi1), _Derivs(phi2)
    out = []
    for r in range(m + 1):
        c = _xbracket_coeff(phi1, phi2, d1, d2, m - r, a, b, prec)
        out.append(c.scale(Fraction(1, factorial(r))))
    return QuasiPolynomial(F1.weight + F2.weight - 2 * m, out)


def heat_apply(phi: JacobiLikeForm, mu) -> JacobiLikeForm:
    """One application of L_mu, keeping the powers X^(k+offset), k >= 0:
    phi_k -> D phi_k - (k+offset+1)(k+offset+mu) phi_(k+1)."""
    mu = _half(mu)
    d = phi.offset
    c = phi.coeffs
    out = [c[k].derive() - c[k + 1].scale((k + d + 1) * (k + d + mu)) for k in range(len(c) - 1)]
    return JacobiLikeForm(phi.weight + 2, d, out)


def _heat_closed(c, d: int, mu: Fraction, l: int, k: int, derivs) -> QSeries:
    acc = None
    for j in range(l + 1):
        s = l - j
        coef = (-1) ** s * comb(l, j) * rising(k + d + 1, s) * rising(k + d + mu, s)
        if coef == 0:
            continue
        term = derivs(k + s, j).scale(coef)
        acc = term if acc is None else acc + term
    if acc is None:
        acc = QSeries.zero(c[0].prec)
    return acc


def heat_coeffs(phi: JacobiLikeForm, mu, l: int) -> JacobiLikeForm:
    """Closed form of L_mu^l: coefficient k is
    sum_{j=0}^{l} (-1)^(l-j) C(l,j) (k+d+1)_(l-j) (k+d+mu)_(l-j) D^j phi_(k+l-j)."""
    mu = _half(mu)
    if l < 0:
        raise PreconditionError("iterate count must be nonnegative")
    derivs = _Derivs(phi.coeffs)
    K = phi.xtrunc - l
    out = [_heat_closed(phi.coeffs, phi.offset, mu, l, k, derivs) for k in range(max(K, 0))]
    return JacobiLikeForm(phi.weight + 2 * l, phi.offset, out)


def _rc_weights(n, lam1, lam2, mu1, mu2):
    return [(-1) ** l * binom(n + lam1 - mu1 - 1, n - l) * binom(n + lam2 - mu2 - 1, l)
            for l in range(n + 1)]


def rc_bracket_J(phi1: JacobiLikeForm, phi2: JacobiLikeForm, params: BracketParams) -> JacobiLikeForm:
    """n-th Rankin-Cohen bracket of Jacobi-like forms (weights add plus 2n).

    The heat-iterate combination is evaluated at X/2: a product of two
    Jacobi-like forms picks up the factor exp(-2KX) under the slash action,
    and halving X brings it back to exp(-KX).  So the coefficient of
    X^(u+d1+d2) carries 2^-(u+d1+d2); for n = 0 this is Phi1(z,X/2) Phi2(z,X/2).
    """
    n, mu1, mu2 = params.n, params.mu1, params.mu2
    lam1, lam2 = phi1.weight, phi2.weight
    w = _rc_weights(n, lam1, lam2, mu1, mu2)
    K = min(phi1.xtrunc, phi2.xtrunc) - n
    if K <= 0:
        raise PreconditionError(f"order {n} bracket needs more than {n} X-coefficients",
                                "insufficient_truncation")
    h1 = [heat_coeffs(phi1, mu1, l).coeffs for l in range(n + 1)]
    h2 = [heat_coeffs(phi2, mu2, l).coeffs for l in range(n + 1)]
    prec = min(phi1.prec, phi2.prec)
    d = phi1.offset + phi2.offset
    out = []
    for u in range(K):
        acc = QSeries.zero(prec)
        for l in range(n + 1):
            if w[l] == 0:
                continue
            inner = QSeries.zero(prec)
            for t in range(u + 1):
                inner = inner + h1[l][t] * h2[n - l][u - t]
            acc = acc + inner.scale(w[l])
        out.append(acc.scale(_HALF ** (u + d)))
    return JacobiLikeForm(lam1 + lam2 + 2 * n, d, out)


def _lam(F: QuasiPolynomial, delta: int):
    return F.weight - 2 * (F.depth + delta)


def rc_bracket_QP(F1: QuasiPolynomial, F2: QuasiPolynomial, params: BracketParams) -> QuasiPolynomial:
    """Pi_(m1+m2) of the Rankin-Cohen bracket of the canonical lifts."""
    m1, m2, n = F1.depth, F2.depth, params.n
    K = m1 + m2 + n + 1
    L1 = canonical_lift(F1, params.delta1, K)
    L2 = canonical_lift(F2, params.delta2, K)
    return pi_map(rc_bracket_J(L1, L2, params), m1 + m2)


def rc_bracket_QP_m(F1: QuasiPolynomial, F2: QuasiPolynomial, m: int,
                    params: BracketParams) -> QuasiPolynomial:
    """Pi_m of the Rankin-Cohen bracket of the canonical lifts."""
    if m < 0:
        raise PreconditionError("target depth must be nonnegative")
    K = max(F1.depth, F2.depth, m) + params.n + 1
    L1 = canonical_lift(F1, params.delta1, K)
    L2 = canonical_lift(F2, params.delta2, K)
    return pi_map(rc_bracket_J(L1, L2, params), m)


def gg_coeff(G: QuasiPolynomial, l: int, k: int, mu, delta: int) -> QSeries:
    """Heat iterate of the canonical lift read off G directly.

    Uses phi_i = (q-i)! g_(q-i) for i <= q, so needs k + l <= q = depth of G.
    """
    mu = _half(mu)
    q = G.depth
    if k < 0 or l < 0 or k + l > q:
        raise PreconditionError(f"need 0 <= k and k + l <= depth {q}", "index_range")
    acc = QSeries.zero(G.prec)
    for j in range(l + 1):
        s = l - j
        idx = q - k - s
        coef = (-1) ** s * comb(l, j) * rising(k + delta + 1, s) * rising(k + delta + mu, s) \
            * factorial(idx)
        if coef:
            acc = acc + G.coeffs[idx].derive(j).scale(coef)
    return acc


def rc_bracket_QP_m_closed(F1: QuasiPolynomial, F2: QuasiPolynomial, m: int,
                           params: BracketParams) -> QuasiPolynomial:
    """Closed form of rc_bracket_QP_m, valid when m + 2n <= min(m1, m2)."""
    n, mu1, mu2 = params.n, params.mu1, params.mu2
    d1, d2 = params.delta1, params.delta2
    m1, m2 = F1.depth, F2.depth
    if m < 0 or m + 2 * n > min(m1, m2):
        raise PreconditionError(f"closed form needs m + 2n <= min(m1, m2) (m={m}, n={n}, "
                                f"m1={m1}, m2={m2})", "hypothesis")
    lam1, lam2 = _lam(F1, d1), _lam(F2, d2)
    w = _rc_weights(n, lam1, lam2, mu1, mu2)
    prec = min(F1.prec, F2.prec)
    out = []
    for r in range(m + 1):
        acc = QSeries.zero(prec)
        for l in range(n + 1):
            if w[l] == 0:
                continue
            for t in range(m - r + 1):
                acc = acc + (gg_coeff(F1, l, t, mu1, d1) *
                             gg_coeff(F2, n - l, m - r - t, mu2, d2)).scale(w[l])
        out.append(acc.scale(_HALF ** (m - r + d1 + d2) / factorial(r)))
    return QuasiPolynomial(lam1 + lam2 + 2 * (m + n + d1 + d2), out)
