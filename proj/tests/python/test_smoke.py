"""Smoke tests for the duffing_flow python module."""

import math

import pytest

import duffing_flow as df


@pytest.fixture
def canon():
    return df.make_params(df.make_operator([1.0, 4.0, 9.0, 16.0]), 2.0)


def test_params_and_constants(canon):
    assert canon.sigma0 == pytest.approx(1.0)
    assert canon.gamma0 == pytest.approx(0.125)
    assert canon.op.lambda1 == 1.0
    assert canon.op.lambda2 == 4.0

    c = df.regime_constants(canon)
    assert c["beta0"] == pytest.approx(0.25)
    assert c["M1"] == pytest.approx(16.0)
    assert c["M2"] == pytest.approx(4.0)
    assert c["M3"] == pytest.approx(64.0)


def test_operator_validation():
    with pytest.raises(df.DuffingError):
        df.make_operator([1.0, 1.0, 4.0])
    with pytest.raises(df.DuffingError):
        df.make_params(df.make_operator([1.0, 4.0]), 5.0)


def test_rhs_and_energy(canon):
    state = df.PhaseState([1.0, 1.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0])
    du, dv = df.rhs(state, 0.0, df.Forcing.zero(4), canon)
    assert dv[0] == pytest.approx(-4.0)
    assert dv[1] == pytest.approx(-28.0)

    eq = df.PhaseState([1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0])
    assert df.classical_energy(eq, canon) == pytest.approx(-0.25)
    assert df.corrected_energy(eq, canon) == pytest.approx(-11.0 / 48.0)
    fm, fp, ii = df.decompose_F(eq, canon)
    assert fm + fp + ii == pytest.approx(-11.0 / 48.0)


def test_integrate_and_classify(canon):
    x0 = df.PhaseState([0.5, 0.0, 0.0, 0.0], [0.0, 0.0, 0.0, 0.0])
    traj = df.integrate(x0, df.Forcing.zero(4), 0.0, 120.0, df.default_dt(canon),
                        "rk4", canon, record_every=25)
    rep = df.classify(traj, df.Forcing.zero(4), canon)
    assert rep["sigma"] == pytest.approx(1.0)
    assert rep["certified"]
    assert rep["tail_residual"] < 1e-6


def test_special_and_green(canon):
    f = df.Forcing.periodic_fourier(4, 2.0 * math.pi,
                                    [df.FourierTerm(1, 1, 1e-4, 0.0)])
    sol = df.solve_periodic(1.0, f, canon)
    assert sol.residual < 1e-10
    amp = max(abs(s.u[1]) for s in sol.orbit.states)
    assert amp == pytest.approx(1e-4 / math.sqrt(122.0), rel=1e-3)

    n = 5001
    times = [i * 1e-3 for i in range(n)]
    ones = [1.0] * n
    y = df.dichotomy_green_apply(-1.0, times, ones, "periodic")
    assert y[n // 2] == pytest.approx(-1.0, abs=1e-6)


def test_lemma_oracle():
    rep = df.ode_limsup_oracle(1.0, lambda t: 1.0, 40.0, 5e-3)
    assert rep["ok"]
    assert rep["ratio_y"] == pytest.approx(1.0, rel=1e-4)
