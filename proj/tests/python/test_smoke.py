"""Smoke tests for the python bindings: a thin pass over each operation
family; the deep numerical checks live in the C++ suites."""

import math

import pytest

import zetamoments as zm


def test_arith():
    assert zm.factorize(12) == [(2, 2), (3, 1)]
    assert zm.factorize(97) == [(97, 1)]
    assert zm.factorize(1) == []
    assert zm.dk_prime_power(3, 2) == 6
    assert zm.dk(3, 12) == 18
    assert zm.mobius(30) == -1
    assert zm.ramanujan_sum(6, 4) == -1
    t = zm.sieve_dk(2, 100)
    assert t(6) == 4
    assert zm.brute_force_Dk(2, 10, 1, t) == 74
    with pytest.raises(ValueError):
        zm.factorize(0)


def test_exact_polynomials():
    assert zm.w_poly(1) == ["1"]
    assert zm.w_poly(2) == ["1", "4", "-6", "4", "-1"]
    assert zm.w_poly(2, "extra-recip") != zm.w_poly(2)
    assert zm.gamma_kn(2, 1) == "-4"
    assert zm.gamma_kn(4, 7) == zm.gamma_kn_oracle(4, 7)
    assert [zm.ks_gk(k) for k in (1, 2, 3, 4)] == ["1", "2", "42", "24024"]
    assert zm.moment_constant_prediction(3, 1, 3) == "42"
    assert zm.moment_constant_prediction(4, 1, 1) == "24024"
    # w_3(eta) + w_3(1-eta) = 42 pointwise
    for eta in (0.0, 0.25, 0.7):
        assert zm.w_eval(3, eta) + zm.w_eval(3, 1 - eta) == pytest.approx(42.0)


def test_local_series():
    g = zm.stieltjes()
    assert g[0] == pytest.approx(0.5772156649015329, abs=1e-15)
    assert zm.zeta_real(1.1) == pytest.approx(10.584448464950809, abs=1e-10)
    assert zm.P_k_eval(1, 1e4, 1) == pytest.approx(1.0, abs=1e-12)
    two_gamma = 2 * g[0]
    assert zm.P_k_eval(2, 1e6, 1) == pytest.approx(math.log(1e6) + two_gamma, abs=1e-10)
    assert zm.hstar_local_factor(2, 2) == pytest.approx(0.75, abs=1e-11)


def test_singular_series():
    e = zm.SingularSeriesEngine(1)
    value, tail = e.m_k_prime(1e4, 6)
    assert value == pytest.approx(1.0, abs=1e-10)
    inc, _ = e.m_k_increment(1e4, 2e4, 3)
    assert inc == pytest.approx(1e4, abs=1e-3)
    a2 = zm.a_k(2, 100000, "eq51")
    assert a2["value"] == pytest.approx(6 / math.pi**2, abs=1e-12)
    rows, worst = zm.hstar_identity_report(2, [2, 3, 5])
    assert worst < 1e-11


def test_zeta_numerics():
    assert zm.zeta_crit(0.0).real == pytest.approx(-1.4603545088095868, abs=1e-12)
    assert abs(zm.chi_factor(0.5 + 3j)) == pytest.approx(1.0, abs=1e-10)
    m = zm.moment_integral(1, 0.0, 200.0)
    assert m["value"] > 0 and m["error_estimate"] < 1e-6 * m["value"]
    t = zm.sieve_dk(1, 600)
    ms, _ = zm.dpoly_meansq(1, 1, 100.0, 300.0, t)
    assert ms == pytest.approx(200.0, abs=1e-9)
    main, o_scale = zm.mv_diagonal(1, 10, 7.0, t)
    assert main == pytest.approx(7 * 7381 / 2520)


def test_correlation_round_trip():
    e = zm.SingularSeriesEngine(2)
    t = zm.sieve_dk(2, 50010)
    rows = zm.correlation_report(e, t, [5e4], [1, 2])
    assert len(rows) == 2
    for r in rows:
        assert r["rel_err"] < 0.05
        assert r["fingerprint"] == e.fingerprint()
