"""Jacobi-like forms Phi(z, X) = sum_k phi_k X^(k + offset), truncated in X.

Liftings of modular forms (Cohen-Kuznetsov and Xi-hat), the projections
Pi_m to quasimodular polynomials, the canonical lifting that splits Pi_m,
transfer maps, the weight-2 family built from E2 and the Hecke action.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinat import norm_weight
from .errors import InsufficientPrecision, PreconditionError
from .modforms import Certificate, ModularForm, eisenstein, hecke_T
from .qseries import QSeries
from .quasipoly import (
    QuasiPolynomial,
    _weight_from_json,
    _weight_to_json,
    certify_quasimodular,
    xi_hat_coefficients,
)

__all__ = [
    "JacobiLikeForm",
    "pi_map",
    "s_hat",
    "reoffset",
    "ck_lift",
    "xi_hat",
    "xi_hat_series",
    "canonical_lift",
    "transfer",
    "jl_check",
    "phi_e2",
    "hecke_TJ",
]


@dataclass(frozen=True, eq=False)
class JacobiLikeForm:
    """Weight/offset-tagged X-series; ``coeffs[k]`` multiplies X^(k + offset)."""

    weight: object
    offset: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "weight", norm_weight(self.weight))
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not isinstance(self.offset, int):
            raise PreconditionError("offset must be an integer")

    @property
    def xtrunc(self) -> int:
        return len(self.coeffs)

    @property
    def prec(self) -> int:
        return min((c.prec for c in self.coeffs), default=0)

    def _compatible(self, other):
        if not isinstance(other, JacobiLikeForm):
            return False
        if (self.weight, self.offset) != (other.weight, other.offset):
            raise PreconditionError("weight/offset mismatch", "weight_mismatch")
        return True

    def __add__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return JacobiLikeForm(self.weight, self.offset,
                              [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not self._compatible(other):
            return NotImplemented
        return JacobiLikeForm(self.weight, self.offset,
                              [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "JacobiLikeForm":
        return JacobiLikeForm(self.weight, self.offset, [a.scale(c) for a in self.coeffs])

    def truncate(self, K: int) -> "JacobiLikeForm":
        return JacobiLikeForm(self.weight, self.offset, self.coeffs[:K])

    def __eq__(self, other):
        if not isinstance(other, JacobiLikeForm):
            return NotImplemented
        if (self.weight, self.offset) != (other.weight, other.offset):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def to_json(self) -> dict:
        return {"weight": _weight_to_json(self.weight), "offset": self.offset,
                "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "JacobiLikeForm":
        if not isinstance(obj, dict) or not {"weight", "offset", "coeffs"} <= obj.keys():
            raise ValueError("JacobiLikeForm JSON needs 'weight', 'offset' and 'coeffs'")
        if not isinstance(obj["offset"], int) or not isinstance(obj["coeffs"], list):
            raise ValueError("JacobiLikeForm JSON: bad offset or coefficient list")
        return cls(_weight_from_json(obj["weight"]), obj["offset"],
                   [QSeries.from_json(c) for c in obj["coeffs"]])


def pi_map(phi: JacobiLikeForm, m: int) -> QuasiPolynomial:
    """sum_r phi_(m-r)/r! X^r, of weight lambda + 2m + 2 offset."""
    if m < 0:
        raise PreconditionError("depth must be nonnegative")
    if m >= phi.xtrunc:
        raise InsufficientPrecision(f"Pi_{m} needs {m + 1} X-coefficients, have {phi.xtrunc}")
    coeffs = [phi.coeffs[m - r].scale(Fraction(1, factorial(r))) for r in range(m + 1)]
    return QuasiPolynomial(phi.weight + 2 * m + 2 * phi.offset, coeffs)


def s_hat(phi: JacobiLikeForm) -> QSeries:
    """The coefficient of X^offset."""
    if not phi.coeffs:
        raise InsufficientPrecision("empty X-truncation")
    return phi.coeffs[0]


def reoffset(phi: JacobiLikeForm, eps: int) -> JacobiLikeForm:
    """Read a form with offset delta as one with offset eps <= delta."""
    shift = phi.offset - eps
    if shift < 0:
        raise PreconditionError("can only lower the offset", "offset")
    z = QSeries.zero(phi.prec)
    return JacobiLikeForm(phi.weight, eps, (z,) * shift + phi.coeffs)


def ck_lift(f: ModularForm, w: int, lam: int, delta: int, K: int) -> JacobiLikeForm:
    """Cohen-Kuznetsov lifting with coefficients
    D^(l+delta-w) f / ((l-w+delta)! (l+w+delta+lam-1)!); negative factorials drop the term."""
    if f.weight != 2 * w + lam:
        raise PreconditionError(f"weight {f.weight} != 2w + lambda = {2 * w + lam}",
                                "weight_bookkeeping")
    if delta > w:
        # the head would be D^(delta-w) f, which is not modular
        raise PreconditionError(f"offset {delta} exceeds w = {w}; the truncation is not Jacobi-like",
                                "offset")
    prec = f.series.prec
    coeffs = []
    for l in range(K):
        a = l - w + delta
        if a < 0:
            coeffs.append(QSeries.zero(prec))
            continue
        b = l + w + delta + lam - 1
        if b < 0:
            raise PreconditionError(f"factorial argument {b} < 0 on a surviving term",
                                    "weight_bookkeeping")
        coeffs.append(f.series.derive(a).scale(Fraction(1, factorial(a) * factorial(b))))
    return JacobiLikeForm(lam, delta, coeffs)


def xi_hat_series(h: QSeries, w, delta: int, K: int) -> JacobiLikeForm:
    return JacobiLikeForm(norm_weight(w) - 2 * delta, delta, xi_hat_coefficients(h, w, K))


def xi_hat(f: ModularForm, delta: int, K: int) -> JacobiLikeForm:
    """(lambda+2 delta-1)! times the Cohen-Kuznetsov lift; coefficient of X^delta is f."""
    if f.weight < 2:
        raise PreconditionError(f"Xi-hat lift needs weight >= 2, got {f.weight}",
                                "weight_too_small")
    return xi_hat_series(f.series, f.weight, delta, K)


def canonical_lift(F: QuasiPolynomial, delta: int = 0, K: int | None = None) -> JacobiLikeForm:
    """The Jacobi-like form Phi of weight xi-2m-2delta with Pi_m Phi = F.

    Recursion on the depth: the top coefficient is lifted by Xi-hat, the
    remainder has depth m-1 and is lifted with offset delta+1, then shifted.
    """
    m = F.depth
    xi = F.weight
    if K is None:
        K = m + 1
    if K < m + 1:
        raise InsufficientPrecision(f"canonical lift of depth {m} needs K >= {m + 1}")
    if xi <= 2 * m:
        raise PreconditionError(f"canonical lift needs weight > 2m, got {xi} at depth {m}",
                                "weight_too_small")
    coeffs = _lift_coeffs(F, K)
    return JacobiLikeForm(xi - 2 * m - 2 * delta, delta, coeffs)


def _lift_coeffs(F: QuasiPolynomial, K: int) -> list:
    m = F.depth
    w = F.weight - 2 * m
    top = xi_hat_coefficients(F.coeffs[m], w, K)
    if m == 0:
        return top
    mf = factorial(m)
    top = [c.scale(mf) for c in top]
    rest = [F.coeffs[r] - top[m - r].scale(Fraction(1, factorial(r))) for r in range(m)]
    inner = _lift_coeffs(QuasiPolynomial(F.weight, rest), K - 1)
    return [top[0]] + [top[k] + inner[k - 1] for k in range(1, K)]


def transfer(F: QuasiPolynomial, n: int, delta: int = 0) -> QuasiPolynomial:
    """Pi_n of the canonical lift of F."""
    if n < 0:
        raise PreconditionError("target depth must be nonnegative")
    lift = canonical_lift(F, delta, max(F.depth, n) + 1)
    return pi_map(lift, n)


def jl_check(phi: JacobiLikeForm, kmax: int | None = None) -> Certificate:
    """Certify every head Pi_k(phi), k <= kmax, as a quasimodular polynomial."""
    if kmax is None:
        kmax = phi.xtrunc - 1
    parts = []
    for k in range(kmax + 1):
        cert = certify_quasimodular(pi_map(phi, k))
        parts.append(cert)
        if not cert.ok:
            return Certificate(False, "jacobi_like", phi.weight, cert.sturm, failed_at=k,
                               detail=f"head {k}: {cert.detail}", parts=tuple(parts))
    sturm = parts[-1].sturm if parts else 0
    return Certificate(True, "jacobi_like", phi.weight, sturm, parts=tuple(parts))


def phi_e2(prec: int, K: int) -> JacobiLikeForm:
    """Weight-2 family with offset -1: coefficients 12, E2, DE2/2, D^2E2/12, ...

    The coefficient of X^l is D^l E2 / (l! (l+1)!) with (-1)! read as 1/12.
    """
    e2 = eisenstein(2, prec)
    coeffs = [QSeries.constant(12, prec)]
    for l in range(K - 1):
        coeffs.append(e2.derive(l).scale(Fraction(1, factorial(l) * factorial(l + 1))))
    return JacobiLikeForm(2, -1, coeffs[:K])


def hecke_TJ(p: int, phi: JacobiLikeForm) -> JacobiLikeForm:
    """Hecke action phi_k -> p^(-k) T_p phi_k at weight lambda+2k+2delta.

    This is p^(lambda/2+delta-1) times the double-coset operator, so that
    Pi_m o T^J = p^(-m) T^P o Pi_m and T^J o Xi-hat = Xi-hat o T_p exactly.
    """
    lam = phi.weight
    if isinstance(lam, Fraction):
        raise PreconditionError("Hecke action implemented at integral weight only",
                                "unsupported_weight")
    out = [hecke_T(p, lam + 2 * k + 2 * phi.offset, c).scale(Fraction(1, p**k))
           for k, c in enumerate(phi.coeffs)]
    return JacobiLikeForm(lam, phi.offset, out)
