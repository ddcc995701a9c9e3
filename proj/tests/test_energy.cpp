#include <doctest.h>

#include "test_helpers.hpp"

using namespace duffing;
using namespace duffing::testing;

TEST_CASE("classical energy values") {
    const ModelParams p = canon();
    CHECK(classical_energy(zero_state(4), p) == 0.0);
    CHECK(classical_energy(canon_state({1, 0, 0, 0}, {0, 0, 0, 0}), p) ==
          doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(classical_energy(canon_state({0, 0, 0, 0}, {2, 0, 0, 0}), p) ==
          doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("corrected energy matches the closed form at the stable equilibria") {
    const ModelParams p = canon();
    const double F_eq = corrected_energy(canon_state({1, 0, 0, 0}, {0, 0, 0, 0}), p);
    CHECK(F_eq == doctest::Approx(-11.0 / 48.0).epsilon(1e-15));
    // (-l1(l-l1)/4 + g0/6)(l-l1)/l1 in general
    const double l1 = p.op.lambda1();
    const double closed =
        (-l1 * (p.lambda - l1) / 4.0 + p.gamma0 / 6.0) * (p.lambda - l1) / l1;
    CHECK(F_eq == doctest::Approx(closed).epsilon(1e-15));
    CHECK(corrected_energy(zero_state(4), p) == 0.0);
    CHECK(corrected_energy(canon_state({-1, 0, 0, 0}, {0, 0, 0, 0}), p) ==
          doctest::Approx(-11.0 / 48.0).epsilon(1e-15));

    const ModelParams q = make_params(make_operator({1, 4}), 3.0);
    const double closed_q =
        (-1.0 * (3.0 - 1.0) / 4.0 + q.gamma0 / 6.0) * (3.0 - 1.0) / 1.0;
    CHECK(corrected_energy(PhaseState{{q.sigma0, 0}, {0, 0}}, q) ==
          doctest::Approx(closed_q).epsilon(1e-14));
}

TEST_CASE("decomposition F = F- + F+ + I") {
    const ModelParams p = canon();
    const FDecomposition d = decompose_F(canon_state({1, 0, 0, 0}, {0, 0, 0, 0}), p);
    CHECK(d.F_minus == doctest::Approx(-11.0 / 48.0).epsilon(1e-15));
    CHECK(d.F_plus == 0.0);
    CHECK(d.I == 0.0);

    SUBCASE("vanishing first component") {
        const FDecomposition z = decompose_F(canon_state({0, 0.3, 0.2, 0}, {0, 1, 0, 0}), p);
        CHECK(z.F_minus == 0.0);
        CHECK(z.I == 0.0);
    }
    SUBCASE("identity on random states") {
        SeededRng rng(23);
        for (int i = 0; i < 500; ++i) {
            const PhaseState s{rng.gaussian_vec(4), rng.gaussian_vec(4)};
            const double F = corrected_energy(s, p);
            const FDecomposition dd = decompose_F(s, p);
            const double sum = dd.F_minus + dd.F_plus + dd.I;
            const double scale = std::max({1.0, std::abs(F), std::abs(dd.F_minus) +
                                           std::abs(dd.F_plus) + dd.I});
            CHECK(std::abs(F - sum) <= 1e-12 * scale);
        }
    }
}

TEST_CASE("well potential and well energies") {
    const ModelParams p = canon();
    CHECK(well_potential(0.0, p) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(well_potential(std::sqrt(2.0), p) == doctest::Approx(0.25).epsilon(1e-14));
    const WellEnergies w = well_energies(canon_state({1, 0, 0, 0}, {0, 0, 0, 0}), p, 0.11);
    CHECK(w.W == 0.0);
    CHECK(w.R == 0.0);
    CHECK(w.S == 0.0);
}

TEST_CASE("static lower bounds hold pointwise") {
    const ModelParams p = canon();
    const double l1 = p.op.lambda1();
    const double l2 = p.op.lambda2();
    const double fp_const = std::min(0.25, (l2 - p.lambda) / (2.0 * l2));
    const double gamma1 = regime_constants(p).gamma1;
    const double c7 = regime_constants(p).c7;
    SeededRng rng(31);
    for (int i = 0; i < 500; ++i) {
        const PhaseState s{rng.gaussian_vec(4), rng.gaussian_vec(4)};
        const double u1 = s.u[0], v1 = s.v[0];
        const FDecomposition d = decompose_F(s, p);
        const double F = d.F_minus + d.F_plus + d.I;

        CHECK(d.F_minus >= 0.25 * l1 * l1 * u1 * u1 * u1 * u1 -
                               0.5 * l1 * (p.lambda - l1) * u1 * u1 - 1e-12);
        double vp2 = 0, aup2 = 0;
        for (std::size_t k = 1; k < 4; ++k) {
            vp2 += s.v[k] * s.v[k];
            const double lk = p.op.eigenvalue(k);
            aup2 += lk * lk * s.u[k] * s.u[k];
        }
        CHECK(d.F_plus >= fp_const * (vp2 + aup2) - 1e-12);
        CHECK(d.F_plus >= -1e-12);
        CHECK(d.I >= 0.0);
        CHECK(well_potential(u1, p) <= F + well_potential(0.0, p) + 1e-12);

        const WellEnergies w = well_energies(s, p, gamma1);
        CHECK(w.R >= 0.25 * gamma1 * (v1 * v1 + (u1 - p.sigma0) * (u1 - p.sigma0)) - 1e-12);
        CHECK(w.R >= w.W - 1e-12);

        // conservative coercivity of the global energy
        const Vec du{s.u[0] - p.sigma0, s.u[1], s.u[2], s.u[3]};
        const double resid_sq =
            std::pow(norm_h(s.v), 2) + std::pow(norm_a(du, p.op), 2);
        CHECK(w.S >= c7 * resid_sq - 1e-10);
    }
}

TEST_CASE("potential-well trap via rejection sampling") {
    const ModelParams p = canon();
    const RegimeConstants c = regime_constants(p);
    const double Wb1 = well_potential(c.beta1, p);
    SeededRng rng(77);
    int accepted = 0;
    for (int i = 0; i < 20000 && accepted < 200; ++i) {
        PhaseState s = zero_state(4);
        s.u[0] = rng.uniform(0.0, 1.6);
        s.v[0] = rng.uniform(-0.3, 0.3);
        s.u[1] = rng.uniform(-0.1, 0.1);
        s.v[1] = rng.uniform(-0.1, 0.1);
        const WellEnergies w = well_energies(s, p, c.gamma1);
        if (w.S <= Wb1 && s.u[0] >= 0.0) {
            ++accepted;
            CHECK(s.u[0] >= c.beta1);
            CHECK(s.u[0] <= std::sqrt(2.0) * p.sigma0);
        }
    }
    CHECK(accepted >= 50);  // the sampler actually exercises the implication
}

TEST_CASE("energy identity certification") {
    const ModelParams p = canon();
    SUBCASE("equilibrium gives zero residual") {
        const Trajectory traj = integrate(stationary_states(p)[2], Forcing::zero(4), 0.0, 1.0,
                                          1e-3, Method::Rk4, p, {});
        CHECK(certify_energy_identity(traj, Forcing::zero(4), p) <= 1e-14);
    }
    SUBCASE("residual scales as dt^2 on a forced run") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 1, 0.1, 0.0}});
        PhaseState x0 = zero_state(4);
        x0.u[0] = 0.5;
        const Trajectory t1 = integrate(x0, f, 0.0, 5.0, 1e-3, Method::Rk4, p, {});
        const Trajectory t2 = integrate(x0, f, 0.0, 5.0, 5e-4, Method::Rk4, p, {});
        const double r1 = certify_energy_identity(t1, f, p);
        const double r2 = certify_energy_identity(t2, f, p);
        CHECK(r1 / r2 > 2.0);
        CHECK(r1 / r2 < 8.0);
    }
    SUBCASE("unforced decay: dE/dt <= residual budget") {
        SeededRng rng(3);
        const PhaseState x0 = random_state(rng, p.op, 1.5);
        const Trajectory traj =
            integrate(x0, Forcing::zero(4), 0.0, 5.0, 1e-3, Method::Rk4, p, {});
        const double budget = certify_energy_identity(traj, Forcing::zero(4), p);
        for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
            const double dE = (classical_energy(traj.states[i + 1], p) -
                               classical_energy(traj.states[i - 1], p)) /
                              (2.0 * traj.dt);
            CHECK(dE <= budget + 1e-12);
        }
    }
    SUBCASE("non-uniform grids are rejected") {
        Trajectory bad;
        bad.times = {0.0, 0.1, 0.3};
        bad.states = {zero_state(4), zero_state(4), zero_state(4)};
        bad.dt = 0.1;
        CHECK_THROWS_AS(certify_energy_identity(bad, Forcing::zero(4), p), NonUniformGrid);
    }
}

TEST_CASE("dissipation certification") {
    const ModelParams p = canon();
    const RegimeConstants c = regime_constants(p);

    SUBCASE("equilibrium trajectory has nonnegative margins") {
        const Trajectory traj = integrate(stationary_states(p)[2], Forcing::zero(4), 0.0, 2.0,
                                          1e-3, Method::Rk4, p, {});
        DissipationOptions opt;
        opt.gamma1 = c.gamma1;
        opt.beta1 = c.beta1;
        const DissipationReport rep = certify_dissipation(traj, Forcing::zero(4), p, opt);
        CHECK(rep.margin_F >= 0.0);
        CHECK(rep.margin_F_minus >= 0.0);
        CHECK(rep.margin_F_plus >= 0.0);
        CHECK(rep.identity_I_residual <= 1e-14);
        CHECK(rep.certified());
    }
    SUBCASE("interaction identity residual halves ~4x with dt/2") {
        SeededRng rng(7);
        const PhaseState x0 = random_state(rng, p.op, 2.0);
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 1, 0.1, 0.0}});
        const Trajectory t1 = integrate(x0, f, 0.0, 5.0, 1e-3, Method::Rk4, p, {});
        const Trajectory t2 = integrate(x0, f, 0.0, 5.0, 5e-4, Method::Rk4, p, {});
        const double r1 = certify_dissipation(t1, f, p, {}).identity_I_residual;
        const double r2 = certify_dissipation(t2, f, p, {}).identity_I_residual;
        CHECK(r1 / r2 > 2.0);
        CHECK(r1 / r2 < 8.0);
        CHECK(r1 <= 10.0 * kDissipationBudgetC * 1e-6);
    }
    SUBCASE("well-window inequality holds near the stable equilibrium") {
        PhaseState x0 = stationary_states(p)[2];
        x0.u[0] += 0.05;
        const Trajectory traj =
            integrate(x0, Forcing::zero(4), 0.0, 5.0, 1e-3, Method::Rk4, p, {});
        DissipationOptions opt;
        opt.gamma1 = c.gamma1;
        opt.beta1 = c.beta1;
        opt.well_window = {0.0, 5.0};
        const DissipationReport rep = certify_dissipation(traj, Forcing::zero(4), p, opt);
        REQUIRE(rep.margin_S.has_value());
        CHECK(*rep.margin_S >= -rep.slack_budget);
    }
    SUBCASE("well window outside the well is refused") {
        const Trajectory traj = integrate(stationary_states(p)[1], Forcing::zero(4), 0.0, 1.0,
                                          1e-3, Method::Rk4, p, {});
        DissipationOptions opt;
        opt.gamma1 = c.gamma1;
        opt.beta1 = c.beta1;
        opt.well_window = {0.0, 1.0};
        CHECK_THROWS_AS(certify_dissipation(traj, Forcing::zero(4), p, opt),
                        WellAssumptionViolated);
    }
    SUBCASE("well window requires the constants") {
        const Trajectory traj = integrate(stationary_states(p)[2], Forcing::zero(4), 0.0, 1.0,
                                          1e-3, Method::Rk4, p, {});
        DissipationOptions opt;
        opt.well_window = {0.0, 1.0};
        CHECK_THROWS_AS(certify_dissipation(traj, Forcing::zero(4), p, opt),
                        WellAssumptionViolated);
    }
}

TEST_CASE("energy ledger fills every record") {
    const ModelParams p = canon();
    const Forcing f = Forcing::constant({0.01, 0, 0, 0});
    const Trajectory traj =
        integrate(stationary_states(p)[2], f, 0.0, 1.0, 1e-3, Method::Rk4, p, {10});
    const auto ledger = energy_ledger(traj, f, p, regime_constants(p).gamma1);
    REQUIRE(ledger.size() == traj.size());
    for (const auto& r : ledger) {
        CHECK(std::abs(r.F - (r.F_minus + r.F_plus + r.I)) <= 1e-12);
        CHECK(r.I >= 0.0);
        CHECK(r.F_plus >= -1e-12);
        CHECK(r.f_norm == doctest::Approx(0.01).epsilon(1e-12));
    }
}
