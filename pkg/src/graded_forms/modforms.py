"""Level-one modular forms as q-expansions.

Eisenstein generators, the monomial bases E4^a E6^b, Sturm-bound membership
certificates and the classical Hecke operators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import InsufficientPrecision, PreconditionError
from .qseries import QSeries, as_rat

__all__ = [
    "ModularForm",
    "Certificate",
    "eisenstein",
    "delta",
    "basis",
    "basis_exponents",
    "sturm_bound",
    "is_modular",
    "hecke_T",
    "divisor_sigma",
]


@dataclass(frozen=True)
class ModularForm:
    weight: int
    series: QSeries

    def to_json(self) -> dict:
        return {"weight": self.weight, "series": self.series.to_json()}

    @classmethod
    def from_json(cls, obj) -> "ModularForm":
        if not isinstance(obj, dict) or "weight" not in obj or "series" not in obj:
            raise ValueError("ModularForm JSON needs 'weight' and 'series'")
        w = obj["weight"]
        if not isinstance(w, int):
            raise ValueError("ModularForm weight must be an integer")
        return cls(w, QSeries.from_json(obj["series"]))


@dataclass(frozen=True)
class Certificate:
    """Outcome of a structural membership check.

    ``decomposition`` holds the exact basis coefficients (modular check) or one
    coefficient tuple per E2-component (quasimodular check).  ``failed_at`` is
    the first mismatching q-index, component index or head index.
    """

    ok: bool
    kind: str
    weight: object
    sturm: int
    decomposition: tuple = ()
    components: tuple = ()
    failed_at: int | None = None
    detail: str = ""
    parts: tuple = field(default=(), repr=False)

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, Fraction):
                return [str(x.numerator), str(x.denominator)]
            if isinstance(x, tuple):
                return [enc(y) for y in x]
            return x

        out = {
            "ok": self.ok,
            "kind": self.kind,
            "weight": _weight_json(self.weight),
            "sturm": self.sturm,
            "decomposition": enc(self.decomposition),
        }
        if self.components:
            out["components"] = [c.to_json() for c in self.components]
        if self.failed_at is not None:
            out["failed_at"] = self.failed_at
        if self.detail:
            out["detail"] = self.detail
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def _weight_json(w):
    if isinstance(w, Fraction):
        return w.numerator if w.denominator == 1 else f"{w.numerator}/{w.denominator}"
    return w


@lru_cache(maxsize=None)
def divisor_sigma(r: int, limit: int) -> tuple:
    """sigma_r(n) for 0 <= n < limit, with sigma_r(0) set to 0."""
    s = [0] * limit
    for d in range(1, limit):
        dr = d**r
        for n in range(d, limit, d):
            s[n] += dr
    return tuple(s)


_EIS = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}


@lru_cache(maxsize=64)
def eisenstein(k: int, prec: int) -> QSeries:
    """E2, E4 or E6 to precision ``prec``."""
    if k not in _EIS:
        raise PreconditionError(f"unsupported Eisenstein weight {k}", "unsupported_weight")
    c, r = _EIS[k]
    if prec == 0:
        return QSeries(())
    sig = divisor_sigma(r, prec)
    return QSeries([1] + [c * sig[n] for n in range(1, prec)])


@lru_cache(maxsize=64)
def _delta_series(prec: int) -> QSeries:
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    return (e4 * e4 * e4 - e6 * e6) / 1728


def delta(prec: int) -> ModularForm:
    if prec < 2:
        raise PreconditionError("delta needs prec >= 2")
    return ModularForm(12, _delta_series(prec))


def basis_exponents(k: int) -> list:
    """All (a, b) with 4a + 6b = k, ordered by increasing b."""
    if k < 0 or k % 2:
        raise PreconditionError(f"weight {k} has no level-one basis", "bad_weight")
    return [((k - 6 * b) // 4, b) for b in range(k // 6 + 1) if (k - 6 * b) % 4 == 0]


@lru_cache(maxsize=256)
def _basis(k: int, prec: int) -> tuple:
    e4 = eisenstein(4, prec)
    e6 = eisenstein(6, prec)
    return tuple((e4**a) * (e6**b) for a, b in basis_exponents(k))


def basis(k: int, prec: int) -> list:
    """Monomials E4^a E6^b of weight k; empty for k = 2."""
    return list(_basis(k, prec))


def sturm_bound(k) -> int:
    return max(k // 12 + 2, 1)


def _invert(mat: list) -> list:
    n = len(mat)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def _leading_inverse(k: int) -> tuple:
    # the first dim M_k coefficients determine a level-one form, so the
    # leading square block of the monomial matrix is invertible
    mons = _basis(k, len(basis_exponents(k)))
    n = len(mons)
    mat = [[mons[j][i] for j in range(n)] for i in range(n)]
    return tuple(tuple(row) for row in _invert(mat))


def is_modular(s: QSeries, k) -> Certificate:
    """Certify that ``s`` is the q-expansion of a level-one form of weight k."""
    k = as_rat(k)
    if k.denominator != 1:
        raise PreconditionError(f"no level-one certification at weight {k}", "unsupported_weight")
    k = int(k)
    sb = sturm_bound(k)
    if s.prec < sb:
        raise InsufficientPrecision(f"weight {k} needs {sb} coefficients, have {s.prec}")
    if k < 0 or k % 2 or k == 2:
        nz = s.valuation()
        if nz is None:
            return Certificate(True, "modular", k, sb, ())
        return Certificate(False, "modular", k, sb, (), failed_at=nz, detail=f"M_{k} = 0")
    inv = _leading_inverse(k)
    n = len(inv)
    head = [s[i] for i in range(n)]
    c = tuple(sum(inv[i][j] * head[j] for j in range(n)) for i in range(n))
    mons = _basis(k, s.prec)
    for idx in range(s.prec):
        if sum(ci * m[idx] for ci, m in zip(c, mons)) != s[idx]:
            return Certificate(False, "modular", k, sb, c, failed_at=idx,
                               detail=f"mismatch at q^{idx}")
    return Certificate(True, "modular", k, sb, c)


def hecke_T(p: int, k: int, s: QSeries) -> QSeries:
    """Classical Hecke operator T_n in weight k, normalized as U_p + p^(k-1) V_p.

    Accepts any n >= 1 (coefficient formula sum_{d | (m, n)} d^(k-1) a(mn/d^2));
    the output precision is floor(prec / n).
    """
    n = p
    if n < 1:
        raise PreconditionError("Hecke index must be positive")
    if s.prec < n:
        raise InsufficientPrecision(f"T_{n} needs prec >= {n}")
    out_prec = s.prec // n
    out = []
    for m in range(out_prec):
        if m == 0:
            # sum over all d | n of d^(k-1) a(0)
            out.append(sum(Fraction(d) ** (k - 1) for d in range(1, n + 1) if n % d == 0) * s[0])
            continue
        g = gcd(m, n)
        acc = Fraction(0)
        for d in range(1, g + 1):
            if g % d == 0:
                acc += Fraction(d) ** (k - 1) * s[m * n // (d * d)]
        out.append(acc)
    return QSeries(out)
