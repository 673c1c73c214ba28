"""Formal pseudodifferential operators sum_k psi_k d^(-k - offset).

The derivation d is realized as D = q d/dq.  Products follow the Leibniz rule
with generalized binomial coefficients; the maps ``from_series`` and
``to_series`` identify operators with X-power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .combinat import binom
from .errors import InsufficientPrecision, PreconditionError
from .jacobilike import JacobiLikeForm, canonical_lift
from .qseries import QSeries
from .quasipoly import QuasiPolynomial

__all__ = [
    "PsiDO",
    "psido_mul",
    "psido_bracket",
    "psido_bracket_closed",
    "c_const",
    "from_series",
    "to_series",
    "pi_partial",
    "psido_lift",
]


@dataclass(frozen=True, eq=False)
class PsiDO:
    """``coeffs[k]`` multiplies d^(-k - offset); offset >= 1."""

    offset: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if not isinstance(self.offset, int) or self.offset < 1:
            raise PreconditionError(f"operator offset must be a positive integer, got {self.offset}",
                                    "offset")

    @property
    def xtrunc(self) -> int:
        return len(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, PsiDO):
            return NotImplemented
        if other.offset != self.offset:
            raise PreconditionError("offset mismatch", "offset")
        return PsiDO(self.offset, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if not isinstance(other, PsiDO):
            return NotImplemented
        if other.offset != self.offset:
            raise PreconditionError("offset mismatch", "offset")
        return PsiDO(self.offset, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "PsiDO":
        return PsiDO(self.offset, [a.scale(c) for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PsiDO):
            return psido_mul(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, PsiDO):
            return NotImplemented
        return self.offset == other.offset and all(
            a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def to_json(self) -> dict:
        return {"offset": self.offset, "coeffs": [c.to_json() for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> "PsiDO":
        if not isinstance(obj, dict) or not {"offset", "coeffs"} <= obj.keys():
            raise ValueError("PsiDO JSON needs 'offset' and 'coeffs'")
        if not isinstance(obj["offset"], int) or not isinstance(obj["coeffs"], list):
            raise ValueError("PsiDO JSON: bad offset or coefficient list")
        return cls(obj["offset"], [QSeries.from_json(c) for c in obj["coeffs"]])


class _Derivs:
    """Memoized D^q of each coefficient."""

    def __init__(self, coeffs):
        self._c = coeffs
        self._cache = {}

    def __call__(self, j, q):
        key = (j, q)
        if key not in self._cache:
            self._cache[key] = self._c[j].derive(q)
        return self._cache[key]


def _leibniz(a: tuple, ea: int, b: tuple, K: int, db: _Derivs) -> list:
    # coefficient r: sum_{p<=r} sum_{q<=p} C(-(r-p)-ea, q) a_(r-p) D^q b_(p-q)
    prec = min([c.prec for c in a[:K]] + [c.prec for c in b[:K]], default=0)
    out = []
    for r in range(K):
        acc = QSeries.zero(prec)
        for p in range(r + 1):
            ai = a[r - p]
            if ai.is_zero():
                continue
            for q in range(p + 1):
                bj = b[p - q]
                if bj.is_zero():
                    continue
                c = binom(-(r - p) - ea, q)
                acc = acc + (ai * db(p - q, q)).scale(c)
        out.append(acc)
    return out


def psido_mul(A: PsiDO, B: PsiDO) -> PsiDO:
    K = min(A.xtrunc, B.xtrunc)
    return PsiDO(A.offset + B.offset, _leibniz(A.coeffs, A.offset, B.coeffs, K, _Derivs(B.coeffs)))


def psido_bracket(A: PsiDO, B: PsiDO) -> PsiDO:
    """The commutator AB - BA."""
    return psido_mul(A, B) - psido_mul(B, A)


def psido_bracket_closed(A: PsiDO, B: PsiDO) -> PsiDO:
    """Commutator from the closed eta_r coefficient formula."""
    K = min(A.xtrunc, B.xtrunc)
    da, db = _Derivs(A.coeffs), _Derivs(B.coeffs)
    prec = min([c.prec for c in A.coeffs[:K]] + [c.prec for c in B.coeffs[:K]], default=0)
    out = []
    for r in range(K):
        acc = QSeries.zero(prec)
        for p in range(r + 1):
            for q in range(p + 1):
                acc = acc + (A.coeffs[r - p] * db(p - q, q)).scale(binom(-r - A.offset + p, q))
                acc = acc - (B.coeffs[r - p] * da(p - q, q)).scale(binom(-r - B.offset + p, q))
        out.append(acc)
    return PsiDO(A.offset + B.offset, out)


def c_const(eta: int) -> int:
    """C_eta = (-1)^eta eta! (eta-1)!."""
    if eta < 1:
        raise PreconditionError(f"C_eta needs eta >= 1, got {eta}", "index_range")
    return (-1) ** eta * factorial(eta) * factorial(eta - 1)


def from_series(F: JacobiLikeForm, xi: int) -> PsiDO:
    """f_k X^(k+delta) -> C_(k+delta+xi) f_k d^(-k-delta-xi)."""
    eps = F.offset + xi
    if xi < 0 or eps < 1:
        raise PreconditionError(f"need xi >= 0 and offset + xi >= 1 (offset {F.offset}, xi {xi})",
                                "offset")
    return PsiDO(eps, [c.scale(c_const(k + eps)) for k, c in enumerate(F.coeffs)])


def to_series(P: PsiDO, xi: int) -> JacobiLikeForm:
    """psi_k d^(-k-eps) -> psi_k / C_(k+eps) X^(k+eps-xi), tagged with weight 2 xi."""
    if xi < 0 or xi > P.offset:
        raise PreconditionError(f"need 0 <= xi <= offset {P.offset}, got {xi}", "offset")
    return JacobiLikeForm(2 * xi, P.offset - xi,
                          [c.scale(Fraction(1, c_const(k + P.offset))) for k, c in enumerate(P.coeffs)])


def pi_partial(P: PsiDO, m: int) -> QuasiPolynomial:
    """sum_r psi_(m-r) / (r! C_(m-r+eps)) X^r, of weight 2m + 2 eps."""
    if m < 0:
        raise PreconditionError("depth must be nonnegative")
    if m >= P.xtrunc:
        raise InsufficientPrecision(f"projection to depth {m} needs {m + 1} coefficients")
    eps = P.offset
    coeffs = [P.coeffs[m - r].scale(Fraction(1, factorial(r) * c_const(m - r + eps)))
              for r in range(m + 1)]
    return QuasiPolynomial(2 * m + 2 * eps, coeffs)


def psido_lift(F: QuasiPolynomial, delta: int, eps: int, K: int | None = None) -> PsiDO:
    """Operator with pi_partial(result, m) = F for F of weight 2m + 2 eps."""
    m = F.depth
    if F.weight != 2 * m + 2 * eps:
        raise PreconditionError(f"weight {F.weight} != 2m + 2eps = {2 * m + 2 * eps}",
                                "weight_bookkeeping")
    if delta < 0 or eps - delta < 0:
        raise PreconditionError("need 0 <= delta <= eps", "offset")
    return from_series(canonical_lift(F, delta, K), eps - delta)
