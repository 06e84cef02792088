import json
import math

import pytest

import ehl


def test_profile_values():
    p3 = ehl.make_profile("ball_complement", 3, 1.0)
    assert p3.phi(2.0) == pytest.approx(0.5, abs=1e-14)
    assert p3.grad_phi(2.0) == pytest.approx(0.25, abs=1e-14)
    assert p3.cstar() == 1.0
    p1 = ehl.make_profile("half_line", 1, 0.0)
    assert p1.phi(3.5) == 3.5
    with pytest.raises(ValueError):
        ehl.make_profile("ball_complement", 1, 1.0)


def test_kernels():
    assert ehl.gaussian(1, 0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi), rel=1e-14)
    assert ehl.heat_gamma(1, 1.0, 0.0) == pytest.approx((4.0 * math.pi) ** -0.5, rel=1e-14)
    v = ehl.halfline_kernel(1.0, 1.0, 1.0, 0.0)
    assert v == pytest.approx((4 * math.pi) ** -0.5 * (1 - math.exp(-1)), rel=1e-12)
    assert ehl.halfline_kernel(1.0, 1.0, 2.0) == ehl.halfline_kernel(1.0, 2.0, 1.0)
    assert ehl.gamma_shift_weighted_l1(1, 1.0, 0.0) == 0.0


def test_normalization_exact_in_1d():
    p = ehl.make_profile("half_line", 1, 0.0)
    assert ehl.i_tau(p, 0.0) == pytest.approx(0.5, rel=1e-11)
    for t in (0.5, 3.0, 50.0):
        assert ehl.k_of_t(p, t) == pytest.approx(1.0 / t, rel=1e-10)
    assert ehl.kprime_over_k(p, 1.0) == pytest.approx(2.0, rel=1e-10)


def test_lsi_assembly():
    assert ehl.radial_lsi_bound(2.0, 1.0, 1.0, 1.0, 3) == pytest.approx(2.0 / 3.0, rel=1e-14)
    p = ehl.make_profile("half_line", 1, 0.0)
    assert ehl.lambda_hat(p, 0.0) == 2.0
    p3 = ehl.make_profile("ball_complement", 3, 1.0)
    assert ehl.lambda_hat(p3, 0.0) > 0.0


def test_fit_rate():
    ts = [10.0 * 2**k for k in range(8)]
    vs = [3.0 * t**-0.5 for t in ts]
    alpha, prefactor, resid = ehl.fit_rate(ts, vs, ts[0], ts[-1])
    assert alpha == pytest.approx(-0.5, abs=1e-12)
    assert prefactor == pytest.approx(3.0, rel=1e-10)
    assert resid < 1e-12


def test_run_experiment(tmp_path):
    cfg = "[domain]\nkind = half_line\nx0 = 0\n[lsi]\ntau_list = 0, 1\n"
    report = json.loads(ehl.run_experiment(cfg, str(tmp_path / "out"), "normalize"))
    assert report["config"]["domain"]["kind"] == "half_line"
    assert (tmp_path / "out" / "normalization.csv").exists()
    assert (tmp_path / "out" / "manifest.json").exists()
