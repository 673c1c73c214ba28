"""Deterministic families of certified inputs used by the self-test and the
test-suite."""

from __future__ import annotations

import random
from fractions import Fraction

from .jacobilike import JacobiLikeForm, canonical_lift, ck_lift, xi_hat
from .modforms import ModularForm, basis_exponents, delta, eisenstein
from .qseries import QSeries
from .quasipoly import (
    depth_zero,
    derivative_polynomial,
    e2_polynomial,
    qp_mul,
    xi_lift,
)


def modular_generators(prec: int, max_weight: int = 20) -> list:
    """Monomials E4^a E6^b plus Delta, as (label, ModularForm)."""
    e4, e6 = eisenstein(4, prec), eisenstein(6, prec)
    out = []
    for k in range(4, max_weight + 1, 2):
        for a, b in basis_exponents(k):
            out.append((f"E4^{a}E6^{b}", ModularForm(k, (e4**a) * (e6**b))))
    if max_weight >= 12:
        out.append(("Delta", delta(prec)))
    return out


def certified_qps(prec: int = 40, max_weight: int = 30, max_depth: int = 5) -> list:
    """(label, F) pairs of quasimodular polynomials with weight > 2 * depth."""
    gens = modular_generators(prec, 18)
    e2p = e2_polynomial(prec)
    out = []
    for label, h in gens:
        for m in range(0, max_depth + 1):
            if h.weight + 2 * m <= max_weight:
                out.append((f"xi({label},{m})", xi_lift(h, m)))
        for m in range(1, max_depth + 1):
            if h.weight + 2 * m <= max_weight and h.weight <= 12:
                out.append((f"deriv({label},{m})", derivative_polynomial(h, m)))
    power = depth_zero(QSeries.constant(1, prec), 0)
    for s in range(1, max_depth + 1):
        power = qp_mul(power, e2p)
        for label, h in gens[:4] + gens[-1:]:
            if 2 * s + h.weight <= max_weight:
                out.append((f"E2^{s}*{label}", qp_mul(power, depth_zero(h))))
    x4 = xi_lift(gens[0][1], 1)
    x6 = xi_lift(gens[1][1], 2)
    out.append(("xi(E4,1)*xi(E6,2)", qp_mul(x4, x6)))
    out.append(("xi(E4,1)^2", qp_mul(x4, x4)))
    out.append(("xi(E6,2)+deriv(E6,2)", x6 + derivative_polynomial(gens[1][1], 2)))
    return out


def random_series(rng: random.Random, prec: int, bound: int = 9) -> QSeries:
    return QSeries([Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) for _ in range(prec)])


def random_jl(rng: random.Random, prec: int, K: int, offset: int, weight: int = 0) -> JacobiLikeForm:
    return JacobiLikeForm(weight, offset, [random_series(rng, prec) for _ in range(K)])


def certified_jls(prec: int = 30, K: int = 4) -> list:
    """(label, Phi) Jacobi-like forms of even weight from several constructions."""
    gens = modular_generators(prec, 16)
    out = []
    for label, h in gens[:5]:
        for d in range(0, 3):
            if h.weight - 2 * d >= 0:
                out.append((f"xihat({label},{d})", xi_hat(h, d, K)))
    out.append(("ck(E4;1,2,1)", ck_lift(gens[0][1], 1, 2, 1, K)))
    out.append(("ck(E6;2,2,1)", ck_lift(gens[1][1], 2, 2, 1, K)))
    for label, F in certified_qps(prec, 20, 2)[::7]:
        for d in (0, 1):
            lam = F.weight - 2 * F.depth - 2 * d
            if lam >= 0 and lam % 2 == 0:
                out.append((f"lift({label},{d})", canonical_lift(F, d, K)))
    return out
