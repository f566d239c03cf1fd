import math

import numpy as np
import pytest

import strongfact as sf


def test_exponents():
    assert sf.conjugate(2) == sf.Exponent(2)
    assert sf.conjugate(1).is_infinite
    assert sf.multiplier_exponent(4, 2) == sf.Exponent(4)
    assert sf.multiplier_exponent(2, 4).is_infinite
    assert str(sf.multiplier_exponent("inf", 3)) == "3"
    with pytest.raises(sf.Error):
        sf.Exponent("1/2")


def test_norms():
    assert sf.lp_norm(np.array([3.0, 4.0]), 2) == pytest.approx(5.0)
    assert sf.weighted_lp_norm(np.array([1.0, 1.0]), 1, np.array([2.0, 3.0])) == 5.0
    value, f = sf.dual_norm(np.array([3.0, 4.0]), 2)
    assert value == pytest.approx(5.0)
    np.testing.assert_allclose(f, [0.6, 0.8])
    lam = np.zeros(9)
    lam[4] = -7.0
    assert sf.kellogg_norm(lam, 3, 2) == 7.0


def test_cesaro_round_trip():
    n = 32
    g = 1.0 / np.arange(1, n + 1)
    h = np.ones(n)
    A = sf.diagonal_sandwich(g, sf.cesaro_matrix(n), h)
    cert = sf.cesaro_factor_check(A, h, 2, 2, 2)
    assert cert["verdict"] == "FACTORS"
    np.testing.assert_allclose(cert["g"]["values"], g, atol=1e-12)
    bad = sf.cesaro_factor_check(np.eye(n), h, 2, 2, 2)
    assert bad["verdict"] == "DOES_NOT_FACTOR"
    assert (bad["witness"]["row"], bad["witness"]["col"]) == (2, 2)


def test_certifier_refutes_identity():
    res = sf.certify_inequality_cesaro(np.eye(2), np.ones(2), 2, patterns=8, seed=0)
    assert res["refuted"]
    assert math.isinf(res["c_hat"])
    assert res["verdict"] == "DOES_NOT_FACTOR"


def test_fourier_coeffs():
    a = sf.fourier_coeffs(lambda x: math.cos(x) / math.sqrt(math.pi), "trig", 5)
    np.testing.assert_allclose(a, [0, 1, 0, 0, 0], atol=1e-9)


def test_suite():
    assert sf.run_suite("kellogg")["passed"]
