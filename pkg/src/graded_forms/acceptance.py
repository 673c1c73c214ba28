"""Acceptance criteria 1-12 as callable checks.

Each ``criterion_N`` returns ``(passed, detail)``.  ``run_all`` times them and
returns a report used by both the CLI ``selftest`` and the test-suite.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import factorial

from .brackets import (
    BracketParams,
    heat_apply,
    heat_coeffs,
    lie_bracket_Q,
    rc_bracket_J,
    rc_bracket_QP,
    rc_bracket_QP_m,
    rc_bracket_QP_m_closed,
    series_lie_bracket,
)
from .corpus import certified_jls, certified_qps, modular_generators, random_jl, random_series
from .halfint import (
    DirichletCharacter,
    g_sequence,
    q_shimura,
    q_shintani,
    shimura_coeffs,
)
from .jacobilike import (
    canonical_lift,
    ck_lift,
    hecke_TJ,
    jl_check,
    phi_e2,
    pi_map,
    reoffset,
    s_hat,
    xi_hat,
    xi_hat_series,
)
from .modforms import ModularForm, basis, delta, eisenstein, hecke_T, is_modular
from .psido import (
    PsiDO,
    from_series,
    pi_partial,
    psido_bracket,
    psido_bracket_closed,
    psido_mul,
    to_series,
)
from .qseries import QSeries
from .quasipoly import (
    QuasiPolynomial,
    certify_quasimodular,
    depth_reduce,
    depth_zero,
    derivative_polynomial,
    e2_polynomial,
    hecke_TP,
    qp_mul,
    s_r,
    xi_lift,
)


class _Log:
    def __init__(self):
        self.failures = []
        self.count = 0

    def check(self, cond, what):
        self.count += 1
        if not cond:
            self.failures.append(what)

    def result(self):
        if self.failures:
            shown = "; ".join(self.failures[:5])
            return False, f"{len(self.failures)}/{self.count} checks failed: {shown}"
        return True, f"{self.count} checks passed"


def criterion_1():
    log = _Log()
    t0 = time.perf_counter()
    e2 = eisenstein(2, 51)
    for n in range(1, 51):
        sigma = sum(d for d in range(1, n + 1) if n % d == 0)
        log.check(e2[n] == -24 * sigma, f"E2 at q^{n}")
    log.check(e2[0] == 1, "E2 constant term")
    # independent Delta: the product q prod (1 - q^n)^24
    prec = 51
    prod = [0] * prec
    prod[1] = 1
    for n in range(1, prec):
        for _ in range(24):
            for i in range(prec - 1, n - 1, -1):
                prod[i] -= prod[i - n]
    d = delta(prec).series
    for n in range(prec):
        log.check(d[n] == prod[n], f"Delta at q^{n}")
    e4, e6 = eisenstein(4, prec), eisenstein(6, prec)
    log.check(d == (e4 * e4 * e4 - e6 * e6) / 1728, "Delta against (E4^3-E6^2)/1728")
    elapsed = time.perf_counter() - t0
    log.check(elapsed < 1.0, f"runtime {elapsed:.3f}s >= 1s")
    return log.result()


def criterion_2():
    log = _Log()
    p = 50
    e2, e4, e6 = (eisenstein(k, p) for k in (2, 4, 6))
    log.check(e2.derive() == (e2 * e2 - e4) / 12, "DE2")
    log.check(e4.derive() == (e2 * e4 - e6) / 3, "DE4")
    log.check(e6.derive() == (e2 * e6 - e4 * e4) / 2, "DE6")
    return log.result()


def criterion_3():
    log = _Log()
    t0 = time.perf_counter()
    p = 40
    e4, e6 = eisenstein(4, p), eisenstein(6, p)
    hs = [("E4", ModularForm(4, e4)), ("E6", ModularForm(6, e6)), ("Delta", delta(p)),
          ("E4E6", ModularForm(10, e4 * e6))]
    for label, h in hs:
        for m in range(5):
            log.check(s_r(xi_lift(h, m), m) == h.series, f"S_m Xi {label} m={m}")
        for d in range(4):
            log.check(s_hat(xi_hat(h, d, 6)) == h.series, f"S-hat Xi-hat {label} d={d}")
    qps = certified_qps(p, 30, 5)
    used = 0
    for label, F in qps:
        if F.weight > 30 or F.depth > 5 or F.weight <= 2 * F.depth:
            continue
        used += 1
        for d in range(4):
            log.check(pi_map(canonical_lift(F, d), F.depth) == F, f"Pi L {label} d={d}")
    log.check(used >= 50, f"only {used} polynomials")
    certified = sum(certify_quasimodular(F).ok for _, F in qps)
    log.check(certified == len(qps), "corpus not fully certified")
    elapsed = time.perf_counter() - t0
    log.check(elapsed < 30, f"runtime {elapsed:.1f}s >= 30s")
    return log.result()


def criterion_4():
    log = _Log()
    rng = random.Random(4)
    for trial in range(20):
        d = rng.randint(0, 3)
        K = rng.randint(3, 6)
        psi = random_jl(rng, 12, K, d + 1, weight=rng.choice([0, 2, 4]))
        incl = reoffset(psi, d)
        for m in range(1, K + 1):
            lhs = pi_map(incl, m)
            rhs = pi_map(psi, m - 1).pad(m)
            log.check(lhs == rhs and lhs.weight == rhs.weight, f"inclusion square trial {trial} m={m}")
        phi = random_jl(rng, 12, K, d, weight=rng.choice([0, 2, 4]))
        for m in range(K):
            lhs = s_r(pi_map(phi, m), m)
            log.check(lhs == s_hat(phi).scale(Fraction(1, factorial(m))), f"S_m Pi_m trial {trial}")
    return log.result()


def _cert_ok(F, weight, depth):
    return F.weight == weight and F.depth == depth and certify_quasimodular(F).ok


def criterion_5():
    log = _Log()
    p = 30
    qps = [(l, F) for l, F in certified_qps(p, 24, 3)]
    gens = modular_generators(p, 16)
    cases = 0
    # qp_mul
    for (l1, F1), (l2, F2) in zip(qps[::9], qps[4::9]):
        G = qp_mul(F1, F2)
        if G.weight <= 40:
            log.check(_cert_ok(G, F1.weight + F2.weight, F1.depth + F2.depth), f"qp_mul {l1} {l2}")
            cases += 1
    # derivative polynomials
    for label, h in gens[:6]:
        for m in range(1, 4):
            log.check(_cert_ok(derivative_polynomial(h, m), h.weight + 2 * m, m), f"deriv {label} {m}")
            cases += 1
    # depth reduction
    for label, F in qps:
        if F.depth >= 1 and F.weight - 2 * F.depth >= 2:
            G = depth_reduce(F, cases % 3)
            log.check(_cert_ok(G, F.weight, F.depth - 1), f"depth_reduce {label}")
            cases += 1
    # Hecke
    for label, F in qps[::3]:
        for prime in (2, 3):
            log.check(_cert_ok(hecke_TP(prime, F), F.weight, F.depth), f"hecke_TP {label} {prime}")
            cases += 1
    # Lie bracket on a common depth
    by_depth = {}
    for label, F in qps:
        if F.weight % 2 == 0 and F.weight > 2 * F.depth:
            by_depth.setdefault(F.depth, []).append((label, F))
    for m, items in by_depth.items():
        for (l1, F1), (l2, F2) in list(zip(items[::2], items[1::2]))[:4]:
            Q = lie_bracket_Q(F1, F2)
            log.check(_cert_ok(Q, F1.weight + F2.weight - 2 * m, m), f"lieQ {l1} {l2}")
            cases += 1
    # Rankin-Cohen on polynomials (offset 0, or mu = 1 - offset)
    small = [(l, F) for l, F in qps if F.depth <= 2 and F.weight <= 14]
    for i, ((l1, F1), (l2, F2)) in enumerate(zip(small[::5], small[2::5])):
        n = i % 3
        mu = [Fraction(1, 2), Fraction(3, 2), Fraction(0), Fraction(2)][i % 4]
        pr = BracketParams(n, mu, mu, 0, 0)
        lam1, lam2 = F1.weight - 2 * F1.depth, F2.weight - 2 * F2.depth
        R = rc_bracket_QP(F1, F2, pr)
        log.check(_cert_ok(R, lam1 + lam2 + 2 * (F1.depth + F2.depth + n), F1.depth + F2.depth),
                  f"rcQP {l1} {l2}")
        cases += 1
        for m in range(0, 3):
            R = rc_bracket_QP_m(F1, F2, m, pr)
            log.check(_cert_ok(R, lam1 + lam2 + 2 * (m + n), m), f"rcQPm {l1} {l2} {m}")
            cases += 1
    for i, ((l1, F1), (l2, F2)) in enumerate(zip(small[1::7], small[3::7])):
        pr = BracketParams(1, 0, 0, 1, 1)
        if F1.weight - 2 * F1.depth - 2 < 0 or F2.weight - 2 * F2.depth - 2 < 0:
            continue
        lam1, lam2 = F1.weight - 2 * F1.depth - 2, F2.weight - 2 * F2.depth - 2
        R = rc_bracket_QP(F1, F2, pr)
        log.check(_cert_ok(R, lam1 + lam2 + 2 * (F1.depth + F2.depth + 1 + 2), F1.depth + F2.depth),
                  f"rcQP offset-1 {l1} {l2}")
        cases += 1
    log.check(cases >= 100, f"only {cases} quasimodular cases")
    # Jacobi-like outputs
    jcases = 0
    K = 4
    for label, h in gens[:5]:
        for d in range(3):
            for w in range(0, 3):
                lam = h.weight - 2 * w
                if d <= w and lam >= 0:
                    phi = ck_lift(h, w, lam, d, K)
                    log.check(jl_check(phi).ok and phi.weight == lam and phi.offset == d,
                              f"ck {label} w={w} d={d}")
                    jcases += 1
            if h.weight >= 2:
                log.check(jl_check(xi_hat(h, d, K)).ok, f"xihat {label} {d}")
                jcases += 1
    for label, F in qps[::6]:
        for d in (0, 2):
            phi = canonical_lift(F, d, F.depth + 3)
            log.check(jl_check(phi).ok and phi.weight == F.weight - 2 * F.depth - 2 * d,
                      f"canonical {label} {d}")
            jcases += 1
    jls = certified_jls(p, 5)
    for i, ((l1, P1), (l2, P2)) in enumerate(zip(jls[::3], jls[1::3])):
        n = i % 3
        mu1 = Fraction(1 - P1.offset) if P1.offset else Fraction(1, 2)
        mu2 = Fraction(1 - P2.offset) if P2.offset else Fraction(3, 2)
        R = rc_bracket_J(P1, P2, BracketParams(n, mu1, mu2))
        log.check(jl_check(R).ok and R.weight == P1.weight + P2.weight + 2 * n
                  and R.offset == P1.offset + P2.offset, f"rcJ {l1} {l2} n={n}")
        jcases += 1
    for label, P in jls[::2]:
        for prime in (2, 3):
            log.check(jl_check(hecke_TJ(prime, P)).ok, f"hecke_TJ {label} {prime}")
            jcases += 1
    ok, detail = log.result()
    return ok, f"{cases} polynomial cases, {jcases} Jacobi-like cases; {detail}"


def criterion_6():
    log = _Log()
    p = 60
    d = delta(p).series
    log.check(hecke_T(2, 12, d) == d.scale(-24), "T2 Delta")
    log.check(hecke_T(3, 12, d) == d.scale(252), "T3 Delta")
    for f in basis(12, p):
        lhs = hecke_T(2, 12, hecke_T(3, 12, f))
        log.check(lhs == hecke_T(6, 12, f), "T2 T3 = T6")
        log.check(hecke_T(3, 12, hecke_T(2, 12, f)) == lhs, "T3 T2 = T2 T3")
    for label, F in certified_qps(30, 30, 5):
        m = F.depth
        for prime in (2, 3):
            lhs = s_r(hecke_TP(prime, F), m)
            rhs = hecke_T(prime, F.weight - 2 * m, s_r(F, m)).scale(prime**m)
            log.check(lhs == rhs, f"S_m T^P {label} p={prime}")
    G = derivative_polynomial(delta(40), 1)
    log.check(hecke_TP(2, G) == G.scale(-48), "T^P_2 on DDelta polynomial")
    log.check(hecke_TP(3, G) == G.scale(3 * 252), "T^P_3 on DDelta polynomial")
    for label, h in modular_generators(40, 12):
        for m in (1, 2, 3):
            for prime in (2, 3):
                lhs = hecke_TP(prime, derivative_polynomial(h, m))
                rhs = derivative_polynomial(ModularForm(h.weight, hecke_T(prime, h.weight, h.series)), m)
                log.check(lhs == rhs.scale(prime**m), f"derivative scale {label} m={m} p={prime}")
    return log.result()


def _random_psido(rng, prec=15, K=6):
    return PsiDO(rng.randint(1, 3), [random_series(rng, prec, 5) for _ in range(K)])


def criterion_7():
    log = _Log()
    rng = random.Random(7)
    for trial in range(20):
        A, B, C = (_random_psido(rng) for _ in range(3))
        log.check(psido_mul(psido_mul(A, B), C) == psido_mul(A, psido_mul(B, C)), f"assoc {trial}")
        br = psido_bracket
        jac = br(A, br(B, C)) + br(B, br(C, A)) + br(C, br(A, B))
        log.check(all(c.is_zero() for c in jac.coeffs), f"Jacobi {trial}")
        log.check(psido_bracket_closed(A, B) == br(A, B), f"closed form {trial}")
        for xi in range(A.offset + 1):
            log.check(from_series(to_series(A, xi), xi) == A, f"I-d I-X {trial} xi={xi}")
            log.check(pi_partial(A, 3) == pi_map(to_series(A, xi), 3), f"operator projection {trial} xi={xi}")
        d1, d2 = rng.randint(0, 2), rng.randint(0, 2)
        xi1, xi2 = rng.randint(1 - min(d1, 1), 3), rng.randint(1 - min(d2, 1), 3)
        F = random_jl(rng, 15, 6, d1, 2 * xi1)
        G = random_jl(rng, 15, 6, d2, 2 * xi2)
        log.check(to_series(from_series(F, xi1), xi1) == F, f"I-X I-d {trial}")
        lhs = from_series(series_lie_bracket(F, G, xi1, xi2), xi1 + xi2)
        rhs = psido_bracket(from_series(F, xi1), from_series(G, xi2))
        log.check(lhs == rhs, f"transport to operators {trial}")
        x1, x2 = rng.randint(0, A.offset), rng.randint(0, B.offset)
        lhs = to_series(psido_bracket(A, B), x1 + x2)
        rhs = series_lie_bracket(to_series(A, x1), to_series(B, x2), x1, x2)
        log.check(lhs == rhs and lhs.offset == rhs.offset, f"transport to series {trial}")
    return log.result()


def criterion_8():
    log = _Log()
    jls = [(l, P) for l, P in certified_jls(30, 4) if P.weight % 2 == 0 and P.weight >= 0]
    for l, P in jls:
        log.check(jl_check(P).ok, f"input {l} certified")
    pairs = 0
    for i in range(len(jls)):
        for j in range(i + 1, len(jls), 5):
            (l1, P1), (l2, P2) = jls[i], jls[j]
            a1, a2 = P1.weight // 2, P2.weight // 2
            if P1.offset + a1 < 1 or P2.offset + a2 < 1:
                continue
            pairs += 1
            S = series_lie_bracket(P1, P2, a1, a2)
            for m in range(0, 3):
                Q = lie_bracket_Q(pi_map(P1, m), pi_map(P2, m))
                log.check(pi_map(S, m) == Q, f"square {l1} {l2} m={m}")
                log.check(s_r(Q, m).is_zero(), f"top vanishes {l1} {l2} m={m}")
                if m >= 1:
                    xi1 = pi_map(P1, m).weight // 2
                    xi2 = pi_map(P2, m).weight // 2
                    cert = is_modular(s_r(Q, m - 1), 2 * xi1 + 2 * xi2 - 4 * m + 2)
                    log.check(cert.ok, f"X^(m-1) modular {l1} {l2} m={m}")
    log.check(pairs >= 20, f"only {pairs} pairs")
    ok, detail = log.result()
    return ok, f"{pairs} pairs; {detail}"


def criterion_9():
    log = _Log()
    rng = random.Random(9)
    mus = [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)]
    for trial in range(6):
        phi = random_jl(rng, 12, 8, rng.randint(0, 2), weight=rng.randint(0, 6))
        for mu in mus:
            it = phi
            for l in range(5):
                log.check(heat_coeffs(phi, mu, l) == it and heat_coeffs(phi, mu, l).xtrunc == it.xtrunc,
                          f"closed vs iterated trial {trial} mu={mu} l={l}")
                it = heat_apply(it, mu)
    shadows = 0
    for label, P in certified_jls(30, 5):
        if P.offset != 0:
            continue
        out = heat_apply(P, P.weight)
        log.check(out.weight == P.weight + 2 and jl_check(out).ok, f"shadow {label}")
        shadows += 1
    log.check(shadows >= 3, "too few shadow cases")
    return log.result()


def criterion_10():
    log = _Log()
    p = 30
    qps = [(l, F) for l, F in certified_qps(p, 30, 4) if F.depth == 4]
    pairs = list(zip(qps[::2], qps[1::2]))[:4]
    mus = [(Fraction(1, 2), Fraction(1, 2)), (Fraction(3, 2), Fraction(0))]
    for (l1, F1), (l2, F2) in pairs:
        for mu1, mu2 in mus:
            pr = BracketParams(1, mu1, mu2)
            L1 = canonical_lift(F1, 0, 6)
            L2 = canonical_lift(F2, 0, 6)
            J = rc_bracket_J(L1, L2, pr)
            for m in range(3):
                closed = rc_bracket_QP_m_closed(F1, F2, m, pr)
                log.check(closed == rc_bracket_QP_m(F1, F2, m, pr), f"closed {l1} {l2} m={m}")
                log.check(closed == pi_map(J, m), f"projection square {l1} {l2} m={m}")
    # the square also commutes for Jacobi-like inputs that are not lifts
    e4, e6 = eisenstein(4, p), eisenstein(6, p)
    P1 = xi_hat(ModularForm(8, e4 * e4), 0, 6) + ck_lift(ModularForm(8, e4 * e4), 0, 8, 0, 6).scale(7)
    P2 = xi_hat(ModularForm(10, e4 * e6), 0, 6)
    pr = BracketParams(1, Fraction(1, 2), Fraction(1, 2))
    J = rc_bracket_J(P1, P2, pr)
    for m in range(3):
        log.check(rc_bracket_QP_m_closed(pi_map(P1, 4), pi_map(P2, 4), m, pr) == pi_map(J, m),
                  f"projection square non-lift m={m}")
    # n = 0 reduces to products
    rng = random.Random(10)
    for trial in range(5):
        A = random_jl(rng, 12, 5, rng.randint(0, 2), 2)
        B = random_jl(rng, 12, 5, rng.randint(0, 2), 4)
        R = rc_bracket_J(A, B, BracketParams(0, Fraction(rng.randint(0, 4), 2), Fraction(1, 2)))
        half = lambda P: [c.scale(Fraction(1, 2) ** (k + P.offset)) for k, c in enumerate(P.coeffs)]
        a, b = half(A), half(B)
        prod = [sum((a[i] * b[u - i] for i in range(u + 1)), QSeries.zero(12)) for u in range(5)]
        log.check(all(x == y for x, y in zip(R.coeffs, prod)), f"n=0 product {trial}")
    for label, h in modular_generators(p, 12)[:4]:
        for label2, g in modular_generators(p, 12)[1:3]:
            R = rc_bracket_QP(depth_zero(h), depth_zero(g), BracketParams(0))
            log.check(R == depth_zero(h.series * g.series, h.weight + g.weight), f"n=0 {label} {label2}")
    return log.result()


def criterion_11():
    log = _Log()
    phi = phi_e2(40, 5)
    log.check(pi_map(phi, 1) == e2_polynomial(40), "Pi_1 of the E2 family")
    log.check(phi.coeffs[0] == QSeries.constant(12, 40), "phi_0 = 12")
    log.check(phi.coeffs[1] == eisenstein(2, 40), "phi_1 = E2")
    cert = jl_check(phi, 4)
    log.check(cert.ok, f"heads up to 4: {cert.detail}")
    return log.result()


def _psi_oracle(t, k, n):
    # psi_t on the odd part via Jacobi symbols, built independently of kronecker()
    from sympy.functions.combinatorial.numbers import jacobi_symbol
    if n % 2 == 0:
        return 0
    v = jacobi_symbol(t % n, n) if n > 1 else 1
    if k % 2:
        v *= 1 if n % 4 == 1 else -1
    return v


def criterion_12():
    log = _Log()
    rng = random.Random(12)
    N = 60
    for t in (1, 2, 3):
        b = QSeries([rng.randint(-20, 20) for _ in range(t * N * N + 1)])
        for k in (2, 3):
            A = shimura_coeffs(b, t, k, DirichletCharacter(4), N)
            # brute-force product of the two Dirichlet series
            lhs = [Fraction(_psi_oracle(t, k, a)) * a ** (k - 1) for a in range(N + 1)]
            rhs = [b[t * c * c] if c else 0 for c in range(N + 1)]
            prod = [0] * (N + 1)
            for a in range(1, N + 1):
                for c in range(1, N + 1):
                    if a * c <= N:
                        prod[a * c] += lhs[a] * rhs[c]
            log.check(A.prec == N + 1 and A[0] == 0, f"shape t={t} k={k}")
            log.check(all(A[n] == prod[n] for n in range(1, N + 1)), f"convolution t={t} k={k}")
            for pr in (3, 5, 7):
                psi = _psi_oracle(t, k, pr)
                log.check(A[pr] == b[t * pr * pr] + psi * pr ** (k - 1) * b[t], f"A(p) t={t} k={k}")
    lam = Fraction(5, 2)
    prec_in = 150
    for m in range(0, 3):
        for mp in range(0, 3):
            for r in range(0, min(m, mp) + 1):
                coeffs = [random_series(rng, prec_in) for _ in range(m - r + 1)]
                F = QuasiPolynomial(lam + 2 * m, coeffs)
                out = q_shimura(F, 1, m, mp, r, DirichletCharacter(4), 10)
                k = int(lam + 2 * r - Fraction(1, 2))
                log.check(out.weight == 2 * (lam + mp + r) - 1 and out.depth == mp - r,
                          f"q_shimura bookkeeping {m} {mp} {r}")
                log.check(s_r(out, mp - r) == shimura_coeffs(coeffs[-1], 1, k, DirichletCharacter(4), 10),
                          f"q_shimura top {m} {mp} {r}")
                th = random_series(rng, 20)
                out = q_shintani(th, lam, m, mp, r)
                log.check(out.weight == 2 * mp + lam - r and out.depth == mp - r,
                          f"q_shintani bookkeeping {m} {mp} {r}")
                log.check(s_r(out, mp - r) == th, f"q_shintani top {m} {mp} {r}")
    for G in (QuasiPolynomial(lam + 8, [random_series(rng, 20) for _ in range(4)]),
              QuasiPolynomial(14, [random_series(rng, 20) for _ in range(3)])):
        seq = g_sequence(G)
        m = G.depth
        log.check(len(seq) == m + 1 and seq[-1].depth == 0, "g_sequence length")
        for l in range(m):
            cur = seq[l]
            top = s_r(cur, m - l)
            lift = xi_hat_series(top, cur.weight - 2 * (m - l), 0, m - l + 1)
            full = cur - pi_map(lift, m - l).scale(factorial(m - l))
            log.check(s_r(full, m - l).is_zero(), f"g_sequence step {l} top")
            log.check(full.trim() == seq[l + 1] or full == seq[l + 1], f"g_sequence step {l}")
    return log.result()


CRITERIA = [
    (1, "generators", criterion_1),
    (2, "Ramanujan system", criterion_2),
    (3, "lifting round trips", criterion_3),
    (4, "projection diagram", criterion_4),
    (5, "certification closure", criterion_5),
    (6, "Hecke operators", criterion_6),
    (7, "pseudodifferential algebra", criterion_7),
    (8, "Lie bracket square", criterion_8),
    (9, "heat operator", criterion_9),
    (10, "Rankin-Cohen brackets", criterion_10),
    (11, "E2 family", criterion_11),
    (12, "Shimura map", criterion_12),
]


def run_criterion(num: int) -> dict:
    name, fn = next((n, f) for i, n, f in CRITERIA if i == num)
    t0 = time.perf_counter()
    try:
        passed, detail = fn()
    except Exception as exc:  # reported, not raised: the report lists every criterion
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return {"id": num, "name": name, "passed": bool(passed), "detail": detail,
            "seconds": round(time.perf_counter() - t0, 3)}


def run_all() -> dict:
    results = [run_criterion(i) for i, _, _ in CRITERIA]
    return {"criteria": results, "passed": all(r["passed"] for r in results)}
