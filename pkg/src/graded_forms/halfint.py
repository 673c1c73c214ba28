"""Half-integral weight data: theta series, Kronecker characters, the Shimura
coefficient map and its quasimodular extensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable

from .combinat import norm_weight
from .errors import InsufficientPrecision, PreconditionError
from .qseries import QSeries
from .quasipoly import QuasiPolynomial, depth_reduce, s_r, xi_lift_series

__all__ = [
    "HalfIntForm",
    "DirichletCharacter",
    "theta",
    "kronecker",
    "shimura_coeffs",
    "q_shimura",
    "q_shintani",
    "g_sequence",
    "oplus_q_shimura",
    "oplus_q_shintani",
]


def kronecker(a: int, n: int) -> int:
    """The Kronecker symbol (a/n)."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    # factor out powers of two, using (a/2) = 0 for even a, else +-1 by a mod 8
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        if a % 2 == 0:
            return 0
        if v % 2 and a % 8 in (3, 5):
            result = -result
    # Jacobi symbol (a/n) for odd n > 0
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


@dataclass(frozen=True)
class DirichletCharacter:
    """n -> chi_0(n) (-1/n)^k (t/n) with chi_0 principal modulo ``modulus``.

    The trivial character of level M is DirichletCharacter(M).  The family is
    closed under multiplication, which is how psi_t is built from chi.
    """

    modulus: int
    t: int = 1
    k: int = 0

    def __post_init__(self):
        if self.modulus < 1:
            raise PreconditionError("modulus must be positive")

    def __call__(self, n: int) -> int:
        if gcd(n, self.modulus) != 1:
            return 0
        v = kronecker(self.t, n)
        if self.k % 2:
            v *= kronecker(-1, n)
        return v

    def twist(self, t: int, k: int) -> "DirichletCharacter":
        return DirichletCharacter(self.modulus, self.t * t, self.k + k)

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "t": self.t, "k": self.k}


@dataclass(frozen=True)
class HalfIntForm:
    twice_weight: int
    level: int
    series: QSeries
    char: DirichletCharacter | None = None

    def __post_init__(self):
        if self.twice_weight % 2 == 0 or self.twice_weight < 1:
            raise PreconditionError("twice_weight must be an odd positive integer", "bad_weight")
        if self.level % 4:
            raise PreconditionError("level must be divisible by 4", "bad_level")
        if self.char is None:
            object.__setattr__(self, "char", DirichletCharacter(self.level))

    @property
    def weight(self) -> Fraction:
        return Fraction(self.twice_weight, 2)

    def to_json(self) -> dict:
        return {"twice_weight": self.twice_weight, "level": self.level,
                "series": self.series.to_json()}

    @classmethod
    def from_json(cls, obj) -> "HalfIntForm":
        if not isinstance(obj, dict) or not {"twice_weight", "level", "series"} <= obj.keys():
            raise ValueError("HalfIntForm JSON needs 'twice_weight', 'level' and 'series'")
        tw, lv = obj["twice_weight"], obj["level"]
        if not isinstance(tw, int) or not isinstance(lv, int):
            raise ValueError("HalfIntForm JSON: integer twice_weight and level required")
        return cls(tw, lv, QSeries.from_json(obj["series"]))


def theta(prec: int) -> QSeries:
    """1 + 2 sum_{n >= 1} q^(n^2)."""
    c = [0] * prec
    n = 0
    while n * n < prec:
        c[n * n] = 1 if n == 0 else 2
        n += 1
    return QSeries(c)


def _squarefree(t: int) -> bool:
    d = 2
    while d * d <= t:
        if t % (d * d) == 0:
            return False
        d += 1
    return True


def shimura_coeffs(b: QSeries, t: int, k: int, chi: DirichletCharacter | None = None,
                   prec_out: int = 20) -> QSeries:
    """A_t(n) = sum_{d | n} psi_t(d) d^(k-1) b(t (n/d)^2) for 1 <= n <= prec_out.

    psi_t(n) = chi(n) (-1/n)^k (t/n); the result has precision prec_out + 1
    with A_t(0) = 0.
    """
    if t < 1 or not _squarefree(t):
        raise PreconditionError(f"t must be a squarefree positive integer, got {t}", "bad_t")
    if k < 1:
        raise PreconditionError("k must be positive", "bad_weight")
    if b.prec <= t * prec_out * prec_out:
        raise InsufficientPrecision(
            f"need more than {t * prec_out * prec_out} input coefficients, have {b.prec}")
    if chi is None:
        chi = DirichletCharacter(4)
    psi = chi.twist(t, k)
    out = [Fraction(0)] * (prec_out + 1)
    for d in range(1, prec_out + 1):
        c = psi(d)
        if c == 0:
            continue
        scale = c * d ** (k - 1)
        for e in range(1, prec_out // d + 1):
            out[d * e] += scale * b[t * e * e]
    return QSeries(out)


def q_shimura(F: QuasiPolynomial, t: int, m: int, mprime: int, r: int,
              chi: DirichletCharacter | None = None, prec_out: int = 20) -> QuasiPolynomial:
    """Xi lift of depth m'-r of the Shimura image of S_(m-r) F.

    F has half-integral weight lambda + 2m and depth bound m - r; the
    top coefficient has weight lambda + 2r = k + 1/2 and maps to weight 2k.
    The output has weight 2(lambda + m' + r) - 1 and depth bound m' - r.
    """
    if not (0 <= r <= min(m, mprime)):
        raise PreconditionError(f"need 0 <= r <= min(m, m') (r={r}, m={m}, m'={mprime})",
                                "index_range")
    if F.depth > m - r:
        raise PreconditionError(f"input depth {F.depth} exceeds m - r = {m - r}", "index_range")
    lam = Fraction(F.weight) - 2 * m
    if lam.denominator != 2:
        raise PreconditionError("q_shimura needs a half-integral weight", "bad_weight")
    k = lam + 2 * r - Fraction(1, 2)
    if k < 1:
        raise PreconditionError(f"Shimura weight parameter k = {k} must be >= 1", "bad_weight")
    top = s_r(F.pad(m - r), m - r)
    sh = shimura_coeffs(top, t, int(k), chi, prec_out)
    return xi_lift_series(sh, 2 * int(k), mprime - r)


def q_shintani(theta_f: QSeries, lam, m: int, mprime: int, r: int) -> QuasiPolynomial:
    """Xi lift of depth m'-r of a supplied weight lambda + r theta image.

    The output has weight 2m' + lambda - r and depth bound m' - r.
    """
    if not (0 <= r <= min(m, mprime)):
        raise PreconditionError(f"need 0 <= r <= min(m, m') (r={r}, m={m}, m'={mprime})",
                                "index_range")
    w = norm_weight(Fraction(lam) + r)
    return xi_lift_series(theta_f, w, mprime - r)


def g_sequence(G: QuasiPolynomial) -> list:
    """G_0 = G, G_(l+1) = depth reduction of G_l; G_l has depth bound m - l."""
    seq = [G]
    while seq[-1].depth > 0:
        seq.append(depth_reduce(seq[-1], 0))
    return seq


def oplus_q_shimura(G: QuasiPolynomial, t: int, mprime: int,
                    chi: DirichletCharacter | None = None, prec_out: int = 20) -> list:
    """The r-th component is q_shimura of the r-th depth-reduced piece of G."""
    m = G.depth
    seq = g_sequence(G)
    return [q_shimura(seq[r], t, m, mprime, r, chi, prec_out) for r in range(min(m, mprime) + 1)]


def oplus_q_shintani(G: QuasiPolynomial, lam, mprime: int,
                     theta_map: Callable[[QSeries, int], QSeries]) -> list:
    """Componentwise q_shintani; ``theta_map(series, r)`` supplies the
    modular-level image of the top coefficient of the r-th piece."""
    m = G.depth
    seq = g_sequence(G)
    out = []
    for r in range(min(m, mprime) + 1):
        top = s_r(seq[r], m - r)
        out.append(q_shintani(theta_map(top, r), lam, m, mprime, r))
    return out
