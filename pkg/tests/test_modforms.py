import pytest

from graded_forms.errors import InsufficientPrecision, PreconditionError
from graded_forms.modforms import (
    ModularForm,
    basis,
    delta,
    divisor_sigma,
    eisenstein,
    hecke_T,
    is_modular,
    sturm_bound,
)
from graded_forms.qseries import QSeries


def test_eisenstein_examples():
    assert list(eisenstein(2, 5)) == [1, -24, -72, -96, -168]
    assert eisenstein(4, 3)[2] == 240 * 9
    assert eisenstein(6, 3)[2] == -504 * 33


def test_eisenstein_against_divisor_sums():
    for k, c in ((4, 240), (6, -504)):
        e = eisenstein(k, 30)
        for n in range(1, 30):
            assert e[n] == c * sum(d ** (k - 1) for d in range(1, n + 1) if n % d == 0)


def test_divisor_sigma():
    assert divisor_sigma(1, 7)[1:] == (1, 3, 4, 7, 6, 12)


def test_delta_examples():
    d = delta(6).series
    assert list(d) == [0, 1, -24, 252, -1472, 4830]


def test_delta_against_product():
    prec = 40
    prod = [0] * prec
    prod[1] = 1
    for n in range(1, prec):
        for _ in range(24):
            for i in range(prec - 1, n - 1, -1):
                prod[i] -= prod[i - n]
    assert list(delta(prec).series) == prod


def test_basis_examples():
    assert basis(0, 5) == [QSeries.constant(1, 5)]
    e4, e6 = eisenstein(4, 10), eisenstein(6, 10)
    assert basis(12, 10) == [e4 ** 3, e6 ** 2] or basis(12, 10) == [e6 ** 2, e4 ** 3]
    assert basis(2, 5) == []


def test_sturm_bounds():
    assert sturm_bound(0) == 2
    assert sturm_bound(12) == 3
    assert sturm_bound(4) == 2


def test_is_modular_examples():
    e2, e4, e6 = eisenstein(2, 30), eisenstein(4, 30), eisenstein(6, 30)
    cert = is_modular(e4 * e6, 10)
    assert cert.ok and list(cert.decomposition) == [1]
    assert not is_modular(e2, 2).ok
    cert = is_modular(e4.derive().scale(3) - e2 * e4, 6)
    assert cert.ok and list(cert.decomposition) == [-1]


def test_is_modular_rejects_e2_squared():
    e2 = eisenstein(2, 20)
    assert not is_modular(e2 * e2, 4).ok


def test_is_modular_catches_late_mismatch():
    e8 = eisenstein(4, 20) ** 2
    bad = QSeries(list(e8.coeffs[:15]) + [e8[15] + 1] + list(e8.coeffs[16:]))
    cert = is_modular(bad, 8)
    assert not cert.ok and cert.failed_at == 15


def test_is_modular_needs_sturm_precision():
    with pytest.raises(InsufficientPrecision):
        is_modular(delta(2).series, 12)


def test_hecke_examples():
    d = delta(40).series
    assert hecke_T(2, 12, d) == d.scale(-24)
    assert hecke_T(3, 12, d) == d.scale(252)
    for p, k in ((2, 4), (3, 6), (5, 12)):
        one = QSeries.constant(1, 30)
        assert hecke_T(p, k, one) == one.scale(1 + p ** (k - 1))


def test_hecke_eisenstein_eigenvalue():
    for p in (2, 3, 5):
        e4 = eisenstein(4, 60)
        assert hecke_T(p, 4, e4) == e4.scale(1 + p ** 3)


def test_eisenstein_weights_limited():
    with pytest.raises(PreconditionError):
        eisenstein(8, 5)


def test_hecke_output_precision():
    assert hecke_T(3, 12, delta(31).series).prec == 10


def test_modular_form_json():
    f = ModularForm(4, eisenstein(4, 5))
    g = ModularForm.from_json(f.to_json())
    assert g.weight == 4 and g.series.identical(f.series)
