# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import fracmod


def test_trig_poly_and_norms():
    e2 = fracmod.TrigPoly.exponential(2)
    for p in (1.0, 2.0, math.inf):
        assert fracmod.lp_norm(e2, p) == pytest.approx(1.0, abs=1e-12)
    members = fracmod.default_corpus()
    assert len(members) == 10


def test_kernel_checkpoint_and_oracle():
    z = fracmod.z(5.0, 13 * math.pi / 5)
    assert abs(z - complex(3.622, 2.327)) < 2e-3
    assert abs(fracmod.z(2.5, 7.0) - fracmod.z_series(2.5, 7.0)) < 1e-8
    assert fracmod.psi(1.0, 0.0) == pytest.approx(0.0)


def test_beta0_and_pathology():
    r = fracmod.find_beta0()
    assert abs(r.beta - 4.85) <= 0.05
    assert r.t > 2 * math.pi
    assert r.residual < 1e-8
    e1 = fracmod.TrigPoly.exponential(1)
    assert fracmod.omega_tilde(e1, r.beta, r.t) < 1e-7
    assert fracmod.omega(e1, r.beta, r.t) >= 1.0


def test_moduli_chain():
    f = fracmod.corpus("random_smooth", 8, 1)
    tilde = fracmod.omega_tilde(f, 1.5, 0.2)
    w = fracmod.w(f, 1.5, 0.2)
    om = fracmod.omega(f, 1.5, 0.2)
    assert tilde <= w * (1 + 1e-6) <= om * (1 + 1e-6) ** 2
    assert fracmod.omega_star(f, 3.5, 0.2, alpha=2.5) > 0


def test_scan_small_window():
    recs = fracmod.scan_zero_set(4.0, 6.0, 30.0)
    assert recs and abs(recs[0].beta - 4.8432) < 1e-3
    assert all(abs(fracmod.z(r.beta, r.t)) < 1e-8 for r in recs)


def test_errors():
    with pytest.raises(ValueError):
        fracmod.omega(fracmod.TrigPoly.exponential(1), -1.0, 0.1)
    assert issubclass(fracmod.DomainTooSmall, fracmod.FracmodError)
    f, _ = fracmod.best_approx_l2(fracmod.corpus("sawtooth_truncated", 16), 4)
    assert f.degree == 4
    assert fracmod.near_best_error(fracmod.TrigPoly.exponential(1), 0, 2.0) == pytest.approx(1.0)
