from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graded_forms.errors import InsufficientPrecision, PreconditionError
from graded_forms.jacobilike import pi_map, xi_hat
from graded_forms.modforms import ModularForm, delta, eisenstein, hecke_T
from graded_forms.qseries import QSeries
from graded_forms.quasipoly import (
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

P = 30
E2, E4, E6 = (eisenstein(k, P) for k in (2, 4, 6))
mE4, mE6 = ModularForm(4, E4), ModularForm(6, E6)


def test_e2_polynomial():
    Q = e2_polynomial(P)
    assert s_r(Q, 0) == E2
    assert s_r(Q, 1) == QSeries.constant(12, P)
    cert = certify_quasimodular(Q)
    assert cert.ok
    assert cert.components[0].is_zero() and cert.components[1] == QSeries.constant(1, P)


def test_xi_lift_examples():
    F = xi_lift(mE4, 1)
    assert F.weight == 6
    assert s_r(F, 0) == E4.derive().scale(Fraction(1, 4))
    assert s_r(F, 1) == E4
    assert xi_lift(mE4, 0) == depth_zero(mE4)


def test_xi_lift_needs_weight_two():
    with pytest.raises(PreconditionError):
        xi_lift(ModularForm(0, QSeries.constant(1, 5)), 1)


def test_derivative_polynomial_delta():
    d = delta(P)
    G = derivative_polynomial(d, 1)
    assert s_r(G, 0) == d.series.derive()
    assert s_r(G, 1) == d.series.scale(12)
    assert s_r(derivative_polynomial(mE6, 3), 0) == E6.derive(3)


def test_xi_hat_projection_square():
    for h in (mE4, mE6, delta(P)):
        for m in range(4):
            for d in range(3):
                assert pi_map(xi_hat(h, d, m + 1), m) == xi_lift(h, m).scale(Fraction(1, factorial(m)))


def test_qp_mul_examples():
    Q = e2_polynomial(P)
    sq = qp_mul(Q, Q)
    assert sq.coeffs[0] == E2 * E2
    assert sq.coeffs[1] == E2.scale(24)
    assert sq.coeffs[2] == QSeries.constant(144, P)
    F = xi_lift(mE4, 2)
    assert qp_mul(F, depth_zero(QSeries.constant(1, P), 0)) == F


def test_certify_xi_lift_e4():
    cert = certify_quasimodular(xi_lift(mE4, 1))
    assert cert.ok
    assert cert.components[1] == E4.scale(Fraction(1, 12))
    assert cert.components[0] == E6.scale(Fraction(-1, 12))


def test_certify_rejects_e2():
    cert = certify_quasimodular(depth_zero(E2, 2))
    assert not cert.ok and cert.failed_at == 0


def test_certify_rejects_perturbed_top():
    F = xi_lift(mE6, 2)
    bad = QuasiPolynomial(F.weight, [F.coeffs[0], F.coeffs[1], F.coeffs[2] + E2])
    assert not certify_quasimodular(bad).ok


def test_certify_needs_precision():
    with pytest.raises(InsufficientPrecision):
        certify_quasimodular(depth_zero(QSeries([1, 240]), 24))


def test_depth_reduce():
    for F in (xi_lift(mE4, 1).scale(5), derivative_polynomial(mE4, 1), qp_mul(e2_polynomial(P), depth_zero(mE4))):
        G = depth_reduce(F)
        assert G.depth == 0 and G.weight == F.weight
        assert certify_quasimodular(G).ok
    with pytest.raises(PreconditionError):
        depth_reduce(depth_zero(mE4))


def test_depth_reduce_kills_xi_lifts():
    G = depth_reduce(xi_lift(mE6, 3))
    assert all(c.is_zero() for c in G.coeffs)


def test_hecke_tp_examples():
    G = derivative_polynomial(delta(P), 1)
    assert hecke_TP(2, G) == G.scale(-48)
    F = depth_zero(mE6)
    assert hecke_TP(3, F) == depth_zero(hecke_T(3, 6, E6), 6)


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 3), st.sampled_from([0, 1, 2]))
def test_hecke_tp_top_coefficient(p, m, which):
    h = [mE4, mE6, delta(60)][which]
    F = derivative_polynomial(h, m) if m else xi_lift(h, 0)
    lhs = s_r(hecke_TP(p, F), F.depth)
    assert lhs == hecke_T(p, F.weight - 2 * F.depth, s_r(F, F.depth)).scale(p ** F.depth)


def test_json_round_trip_half_integral_weight():
    F = QuasiPolynomial(Fraction(9, 2), [QSeries([1, 2]), QSeries([3, 4])])
    obj = F.to_json()
    assert obj["weight"] == "9/2"
    assert QuasiPolynomial.from_json(obj) == F


def test_weight_mismatch_rejected():
    with pytest.raises(PreconditionError):
        xi_lift(mE4, 1) + xi_lift(mE6, 1)
