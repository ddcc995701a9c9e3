#include <doctest.h>

#include "test_helpers.hpp"

using namespace duffing;
using namespace duffing::testing;

TEST_CASE("linearizations around the equilibria") {
    const ModelParams p = canon();
    const LinearizedOperator L0 = linearize(0.0, p);
    CHECK(L0.mu == Vec{-1, 8, 63, 224});
    CHECK(L0.coercivity == -1.0);

    const LinearizedOperator Lp = linearize(p.sigma0, p);
    CHECK(Lp.mu == Vec{2, 12, 72, 240});
    CHECK(Lp.coercivity == 2.0);

    const LinearizedOperator Lm = linearize(-p.sigma0, p);
    CHECK(Lm.mu == Lp.mu);  // L depends on sigma^2
}

TEST_CASE("nonlinear remainder") {
    const ModelParams p = canon();
    SUBCASE("vanishes at the equilibrium") {
        CHECK(nonlinear_remainder(p.sigma0, {0, 0, 0, 0}, p) == Vec{0, 0, 0, 0});
        CHECK(nonlinear_remainder(0.0, {0, 0, 0, 0}, p) == Vec{0, 0, 0, 0});
    }
    SUBCASE("no linear part") {
        SeededRng rng(37);
        const Vec w = rng.gaussian_vec(4);
        for (double sigma : {0.0, p.sigma0}) {
            const auto norm_of = [&](double eps) {
                Vec scaled = w;
                for (auto& x : scaled) x *= eps;
                return norm_h(nonlinear_remainder(sigma, scaled, p));
            };
            CHECK(norm_of(1e-3) / 1e-3 > 100.0 * norm_of(1e-6) / 1e-6);
        }
    }
    SUBCASE("symbolic expansion example") {
        const Vec g = nonlinear_remainder(1.0, {0.1, 0, 0, 0}, p);
        CHECK(g[0] == doctest::Approx(-0.031).epsilon(1e-14));
        CHECK(g[1] == 0.0);
    }
    SUBCASE("consistency with the full right-hand side") {
        SeededRng rng(41);
        const Forcing f = Forcing::constant({0.01, -0.02, 0.0, 0.03});
        for (double sigma : {0.0, p.sigma0, -p.sigma0}) {
            const LinearizedOperator L = linearize(sigma, p);
            for (int trial = 0; trial < 20; ++trial) {
                Vec w = rng.gaussian_vec(4);
                for (auto& x : w) x *= 0.3;
                PhaseState s = zero_state(4);
                for (std::size_t k = 0; k < 4; ++k) s.u[k] = w[k];
                s.u[0] += sigma;
                auto [du, dv] = rhs(s, 0.0, f, p);
                const Vec g = nonlinear_remainder(sigma, w, p);
                const Vec fval = f.evaluate(0.0);
                for (std::size_t k = 0; k < 4; ++k) {
                    const double expected = -L.mu[k] * w[k] + g[k] + fval[k];
                    CHECK(dv[k] == doctest::Approx(expected).epsilon(1e-11));
                }
            }
        }
    }
}

TEST_CASE("periodic special solutions") {
    const ModelParams p = canon();
    SUBCASE("zero forcing gives the equilibrium") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {});
        const PeriodicSolution sol = solve_periodic(p.sigma0, f, p);
        CHECK(sol.residual <= 1e-14);
        for (const auto& s : sol.orbit.states) {
            CHECK(std::abs(s.u[0] - p.sigma0) <= 1e-14);
            CHECK(norm_h(s.v) <= 1e-14);
        }
    }
    SUBCASE("linear response amplitude on mode 2") {
        const double eps = 1e-4;
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 1, eps, 0.0}});
        const PeriodicSolution sol = solve_periodic(p.sigma0, f, p);
        CHECK(sol.residual <= 1e-10);
        double amp = 0;
        for (const auto& s : sol.orbit.states) amp = std::max(amp, std::abs(s.u[1]));
        CHECK(std::abs(amp - eps / std::sqrt(122.0)) <= 10.0 * eps * eps);
    }
    SUBCASE("period closure and round-trip through the integrator") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 0, 1e-3, 0.0}});
        const PeriodicSolution sol = solve_periodic(p.sigma0, f, p, 1e-13);
        CHECK(phase_distance(sol.orbit.front(), sol.orbit.back(), p.op) <= 1e-10);

        const Trajectory traj = integrate(sol.orbit.front(), f, 0.0, sol.period,
                                          sol.period / 4096.0, Method::Rk4, p, {});
        CHECK(phase_distance(traj.back(), sol.orbit.front(), p.op) <= 1e-8);
    }
    SUBCASE("iteration seeds agree inside the uniqueness ball") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 0, 1e-3, 0.0}});
        const PeriodicSolution a = solve_periodic(p.sigma0, f, p, 1e-13);
        const Vec seed{0.02, -0.01, 0.005, 0.0};
        const PeriodicSolution b = solve_periodic(p.sigma0, f, p, 1e-13, 200, &seed);
        double gap = 0;
        for (std::size_t k = 0; k < 4; ++k) {
            for (std::size_t j = 0; j < a.coeffs[k].size(); ++j) {
                gap = std::max(gap, std::abs(a.coeffs[k][j] - b.coeffs[k][j]));
            }
        }
        CHECK(gap <= 1e-9);
    }
    SUBCASE("large forcing breaks the contraction") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 0, 10.0, 0.0}});
        CHECK_THROWS_AS(solve_periodic(p.sigma0, f, p), NonContraction);
    }
}

TEST_CASE("dichotomy Green function") {
    const std::size_t n = 20001;
    std::vector<double> times(n), ones(n, 1.0), zeros(n, 0.0), wave(n);
    const double dt = 1e-3;
    for (std::size_t i = 0; i < n; ++i) {
        times[i] = static_cast<double>(i) * dt;
        wave[i] = std::cos(times[i]);
    }
    SUBCASE("constant forcing settles at h/mu") {
        const auto y = dichotomy_green_apply(-1.0, times, ones, Extension::Periodic);
        for (double v : y) CHECK(v == doctest::Approx(-1.0).epsilon(1e-6));
    }
    SUBCASE("zero forcing gives zero") {
        const auto y = dichotomy_green_apply(-1.0, times, zeros, Extension::Zero);
        for (double v : y) CHECK(v == 0.0);
    }
    SUBCASE("frequency response at omega = 1") {
        // window is not an exact period multiple; measure away from edges
        const auto y = dichotomy_green_apply(-1.0, times, wave, Extension::Periodic);
        double amp = 0;
        for (std::size_t i = n / 4; i < 3 * n / 4; ++i) amp = std::max(amp, std::abs(y[i]));
        CHECK(amp == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-2));
    }
    CHECK_THROWS_AS(dichotomy_green_apply(1.0, times, ones, Extension::Zero), NonNegativeMu);
}

TEST_CASE("bounded solutions on a window") {
    const ModelParams p = canon();
    SUBCASE("zero forcing returns the equilibrium line") {
        const BoundedSolution sol =
            solve_bounded(p.sigma0, Forcing::zero(4), 0.0, 60.0, 1e-2, p);
        for (const auto& s : sol.traj.states) {
            CHECK(std::abs(s.u[0] - p.sigma0) <= 1e-12);
            CHECK(norm_h(s.v) <= 1e-12);
        }
        CHECK(sol.residual_interior <= 1e-10);
    }
    SUBCASE("periodic window agrees with the Fourier solution") {
        const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 0, 1e-3, 0.0}});
        const PeriodicSolution ps = solve_periodic(p.sigma0, f, p, 1e-13);
        const double T = ps.period;
        const std::size_t periods = 16;
        const double dt = T / 2048.0;
        const BoundedSolution bs = solve_bounded(
            p.sigma0, f, 0.0, static_cast<double>(periods) * T, dt, p, 1e-12,
            Extension::Periodic);
        double worst = 0;
        for (std::size_t i = 0; i < bs.traj.size(); ++i) {
            const double t = bs.traj.times[i];
            if (t < 4.0 * bs.boundary_layer ||
                t > static_cast<double>(periods) * T - 4.0 * bs.boundary_layer) {
                continue;
            }
            worst = std::max(worst, phase_distance(bs.traj.states[i], ps.evaluate(t, p), p.op));
        }
        CHECK(worst <= 1e-8);
    }
    SUBCASE("decaying forcing relaxes to the equilibrium") {
        const Forcing base = Forcing::constant({5e-3, 0, 0, 0});
        const Forcing f = Forcing::decaying(base, 0.1);
        const BoundedSolution sol = solve_bounded(p.sigma0, f, 0.0, 120.0, 1e-2, p, 1e-12);
        const PhaseState target = stationary_states(p)[2];
        // interior tail, clear of the right-edge boundary layer
        const std::size_t i_probe = sol.traj.size() - 1 -
                                    static_cast<std::size_t>(8.0 * sol.boundary_layer / 1e-2);
        CHECK(phase_distance(sol.traj.states[i_probe], target, p.op) <= 2e-4);
    }
    SUBCASE("window shorter than the boundary layers is refused") {
        CHECK_THROWS_AS(solve_bounded(p.sigma0, Forcing::zero(4), 0.0, 2.0, 1e-2, p),
                        WindowTooShort);
    }
}

TEST_CASE("special solutions obey the sign symmetry") {
    const ModelParams p = canon();
    const Forcing f = Forcing::periodic_fourier(4, kTwoPi, {{1, 0, 2e-3, 0.0}, {1, 1, 0.0, 1e-3}});
    const PeriodicSolution plus = solve_periodic(p.sigma0, f, p, 1e-13);
    const PeriodicSolution minus = solve_periodic(-p.sigma0, f.negated(), p, 1e-13);
    REQUIRE(plus.orbit.size() == minus.orbit.size());
    for (std::size_t i = 0; i < plus.orbit.size(); ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            CHECK(plus.orbit.states[i].u[k] ==
                  doctest::Approx(-minus.orbit.states[i].u[k]).epsilon(1e-10).scale(1.0));
            CHECK(plus.orbit.states[i].v[k] ==
                  doctest::Approx(-minus.orbit.states[i].v[k]).epsilon(1e-10).scale(1.0));
        }
    }
}
