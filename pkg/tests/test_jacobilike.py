from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graded_forms.errors import PreconditionError
from graded_forms.jacobilike import (
    JacobiLikeForm,
    canonical_lift,
    ck_lift,
    hecke_TJ,
    jl_check,
    phi_e2,
    pi_map,
    reoffset,
    s_hat,
    transfer,
    xi_hat,
)
from graded_forms.modforms import ModularForm, delta, eisenstein, is_modular
from graded_forms.qseries import QSeries
from graded_forms.quasipoly import (
    certify_quasimodular,
    depth_zero,
    derivative_polynomial,
    e2_polynomial,
    hecke_TP,
    qp_mul,
    s_r,
    xi_lift,
)
from strategies import jl_forms

P = 30
E2, E4, E6 = (eisenstein(k, P) for k in (2, 4, 6))
mE4, mE6 = ModularForm(4, E4), ModularForm(6, E6)


def test_pi_map_monomial():
    for d in range(3):
        phi = JacobiLikeForm(0, d, [QSeries.constant(1, 5)] + [QSeries.zero(5)] * 2)
        F = pi_map(phi, 2)
        assert s_r(F, 2) == QSeries.constant(Fraction(1, 2), 5)
        assert s_r(F, 0).is_zero() and s_r(F, 1).is_zero()


def test_phi_e2():
    phi = phi_e2(P, 5)
    assert phi.offset == -1
    assert phi.coeffs[0] == QSeries.constant(12, P)
    assert phi.coeffs[1] == E2
    assert pi_map(phi, 1) == e2_polynomial(P)
    assert jl_check(phi).ok


def test_ck_lift_examples():
    for w, lam, d in ((0, 4, 0), (1, 2, 0), (1, 2, 1), (2, 2, 1), (2, 0, 2)):
        f = mE4 if 2 * w + lam == 4 else mE6
        phi = ck_lift(f, w, lam, d, 6)
        lead = w - d
        for l in range(lead):
            assert phi.coeffs[l].is_zero()
        assert phi.coeffs[lead] == f.series.scale(Fraction(1, factorial(2 * w + lam - 1)))
        assert jl_check(phi).ok


def test_ck_lift_matches_xi_hat():
    for d in range(3):
        lam = 4 - 2 * d
        lhs = ck_lift(mE4, d, lam, d, 5).scale(factorial(lam + 2 * d - 1))
        assert lhs == xi_hat(mE4, d, 5)


def test_ck_lift_projection_is_derivative_truncation():
    # Pi_m of the classical lift: sum_r D^(m-r) f / ((m-r)! (m-r+k-1)! r!) X^r
    m = 3
    F = pi_map(ck_lift(mE6, 0, 6, 0, m + 1), m)
    for r in range(m + 1):
        c = Fraction(1, factorial(m - r) * factorial(m - r + 5) * factorial(r))
        assert s_r(F, r) == E6.derive(m - r).scale(c)


def test_ck_lift_offset_above_w_rejected():
    with pytest.raises(PreconditionError):
        ck_lift(mE4, 0, 4, 1, 4)


def test_xi_hat_examples():
    phi = xi_hat(mE4, 1, 5)
    assert phi.weight == 2 and s_hat(phi) == E4
    for l in range(5):
        assert phi.coeffs[l] == E4.derive(l).scale(Fraction(6, factorial(l) * factorial(l + 3)))
    assert jl_check(phi).ok
    with pytest.raises(PreconditionError):
        xi_hat(ModularForm(0, QSeries.constant(1, 5)), 0, 3)


def test_canonical_lift_depth_zero_is_xi_hat():
    for d in range(3):
        assert canonical_lift(depth_zero(mE6), d, 5) == xi_hat(mE6, d, 5)


def test_canonical_lift_base_coefficients():
    # depth 0: (xi-1)! D^k h / (k! (k+xi-1)!)
    phi = canonical_lift(depth_zero(delta(P)), 0, 4)
    for k in range(4):
        c = Fraction(factorial(11), factorial(k) * factorial(k + 11))
        assert phi.coeffs[k] == delta(P).series.derive(k).scale(c)


@pytest.mark.parametrize("d", [0, 1, 2])
def test_canonical_lift_round_trip(d):
    F = xi_lift(mE6, 2)
    phi = canonical_lift(F, d, 5)
    assert pi_map(phi, 2) == F
    assert phi.weight == F.weight - 4 - 2 * d and phi.offset == d
    assert jl_check(phi).ok


def test_canonical_lift_general_polynomial():
    F = qp_mul(e2_polynomial(P), depth_zero(ModularForm(12, E6 * E6)))
    F = F + derivative_polynomial(ModularForm(12, E4 ** 3), 1)
    phi = canonical_lift(F, 1, 4)
    assert pi_map(phi, 1) == F and jl_check(phi).ok


def test_canonical_lift_rejects_small_weight():
    with pytest.raises(PreconditionError):
        canonical_lift(e2_polynomial(P))


def test_transfer():
    Q = e2_polynomial(P)
    F = xi_lift(mE6, 2) + qp_mul(qp_mul(Q, Q), depth_zero(mE6))
    assert transfer(F, 2) == F
    G = transfer(F, 0)
    assert G.weight == F.weight - 4 and G.depth == 0
    assert is_modular(s_r(G, 0), G.weight).ok


def test_transfer_round_trip_is_not_identity():
    F = xi_lift(mE4, 1) + depth_zero(mE6).pad(1)
    back = transfer(transfer(F, 0), 1)
    assert certify_quasimodular(back).ok and certify_quasimodular(F).ok
    assert back != F


def test_jl_check_detects_perturbation():
    phi = xi_hat(mE4, 0, 5)
    for k in range(5):
        cs = list(phi.coeffs)
        cs[k] = cs[k] + E2.scale(Fraction(1, 7))
        cert = jl_check(JacobiLikeForm(phi.weight, 0, cs))
        assert not cert.ok and cert.failed_at == k


def test_reoffset_is_inclusion():
    phi = xi_hat(mE4, 1, 4)
    psi = reoffset(phi, 0)
    assert psi.offset == 0 and psi.coeffs[0].is_zero()
    assert jl_check(psi).ok


def test_hecke_tj_diagram():
    phi = xi_hat(mE4, 1, 4)
    for p in (2, 3):
        for m in range(3):
            assert hecke_TP(p, pi_map(phi, m)) == pi_map(hecke_TJ(p, phi), m).scale(p ** m)


def test_hecke_tj_on_delta_lift():
    D = delta(60)
    for d in range(2):
        phi = xi_hat(D, d, 4)
        assert hecke_TJ(2, phi) == phi.scale(-24)
        assert hecke_TJ(3, phi) == phi.scale(252)
        assert hecke_TJ(2, phi).xtrunc == phi.xtrunc


@settings(max_examples=20, deadline=None)
@given(jl_forms(), st.integers(0, 4))
def test_pi_map_top_coefficient(phi, m):
    assert s_r(pi_map(phi, m), m) == s_hat(phi).scale(Fraction(1, factorial(m)))


@settings(max_examples=20, deadline=None)
@given(jl_forms())
def test_json_round_trip(phi):
    assert JacobiLikeForm.from_json(phi.to_json()) == phi
