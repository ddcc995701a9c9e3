#include "duffing/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "duffing/special.hpp"

namespace duffing {

namespace {

double tail_sup_abs(std::span<const double> series, std::size_t count) {
    double s = 0;
    for (std::size_t i = series.size() - count; i < series.size(); ++i) {
        s = std::max(s, std::abs(series[i]));
    }
    return s;
}

// Largest x in [0, hi] with pred(x) true, for monotone predicates that hold
// near 0. Keeps the invariant pred(lo) == true.
template <typename Pred>
double monotone_bisect(double hi, const Pred& pred, int iters = 200) {
    if (pred(hi)) return hi;
    double lo = 0.0;
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (pred(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

void verify_constants(const RegimeConstants& c, const ModelParams& p) {
    const double l1 = p.op.lambda1();
    const double l2 = p.op.lambda2();
    const double g0 = p.gamma0;
    const double s0 = p.sigma0;
    auto fail = [](const std::string& which) {
        throw Error("ConstantVerificationFailed", "regime constant check failed: " + which);
    };
    const double tol = 1e-12;

    const double b4 = c.beta0 * c.beta0 * c.beta0 * c.beta0;
    if (!(16.0 * b4 * l1 * l1 <= (l2 - p.lambda) / l2 * g0 * (1.0 + tol))) fail("beta0 (i)");
    if (!(c.beta0 * c.beta0 <= (p.lambda - l1) / (2.0 * l1) * (1.0 + tol))) fail("beta0 (ii)");
    if (!(c.delta > 0.0)) fail("delta > 0");
    if (!(c.beta1 > 0.0 && c.beta1 < c.beta)) fail("beta1 in (0, beta)");

    auto W = [&](double x) { return well_potential(x, p); };
    auto Wp = [&](double x) { return l1 * l1 * (x * x - s0 * s0) * x; };
    const double W0 = W(0.0);
    const int grid = 2000;
    for (int i = 0; i <= grid; ++i) {
        const double xk1 = c.K1 + 3.0 * c.K1 * i / grid;
        if (!(W(xk1) >= W0 + 1.0 - 1e-9)) fail("K1 grid");
        const double xk2 = std::sqrt(2.0) * s0 * i / grid;
        if (!(W(xk2) <= c.K2 * (xk2 - s0) * (xk2 - s0) + 1e-12)) fail("K2 grid");
        const double xk3 = c.beta1 + (c.K1 + s0 + 1.0 - c.beta1) * i / grid;
        if (!((xk3 - s0) * Wp(xk3) >= c.K3 * (xk3 - s0) * (xk3 - s0) - 1e-12)) fail("K3 grid");
    }

    const double g1 = c.gamma1;
    if (!(g1 > 0.0 && g1 <= 0.25)) fail("gamma1 (i)");
    if (!(c.K2 * g1 + 0.25 * g1 + g1 * g1 <= c.K3 * (1.0 + tol))) fail("gamma1 (ii)");
    if (!(l1 * g1 * std::sqrt(2.0) * s0 * s0 <= (l2 - p.lambda) * g0 * (1.0 + tol)))
        fail("gamma1 (iii)");
    if (!(g1 * g1 <= g0 * (1.0 + tol))) fail("gamma1 (iv)");
    if (!(2.0 * (c.K1 + s0) * (c.K1 + s0) * g1 <= c.delta * (1.0 + tol))) fail("gamma1 (v)");

    if (!(c.eta > 0.0 && c.eta <= 1.0)) fail("eta (i)");
    if (!((1.0 + (g0 / 3.0 + g1) * (c.K1 + s0)) * c.eta <= c.delta / 4.0 * (1.0 + tol)))
        fail("eta (ii)");
    if (!(c.eps1 * c.eps1 < c.delta / 4.0 * g1 * g1)) fail("eps1");
}

}  // namespace

double tail_limsup(std::span<const double> series, double window_fraction) {
    if (series.empty()) throw EmptySeries("tail_limsup: empty series");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
        throw Error("InvalidWindowFraction",
                    "window_fraction must be in (0, 1], got " + std::to_string(window_fraction));
    }
    const auto count = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::llround(window_fraction * series.size())));
    return tail_sup_abs(series, std::min(count, series.size()));
}

double stabilized_tail_sup(std::span<const double> series) {
    if (series.empty()) throw EmptySeries("stabilized_tail_sup: empty series");
    const std::size_t n = series.size();
    double prev = tail_sup_abs(series, std::max<std::size_t>(1, n / 16));
    for (int k = 3; k >= 1; --k) {
        const std::size_t count = std::max<std::size_t>(1, n >> k);
        const double cur = tail_sup_abs(series, count);
        if (std::abs(cur - prev) <= 0.05 * std::max(cur, 1e-300)) return cur;
        prev = cur;
    }
    return tail_sup_abs(series, std::max<std::size_t>(1, n / 2));
}

TailStats tail_stats(const Trajectory& traj, const Forcing& f, const ModelParams& p,
                     double window_fraction) {
    const std::size_t n = traj.size();
    const auto count = static_cast<std::size_t>(std::llround(window_fraction * n));
    if (n < 16 || count < 8) {
        throw HorizonTooShort("tail_stats: horizon too short for the tail window");
    }
    const std::size_t start = n - count;
    TailStats s;
    s.window_start = traj.times[start];
    s.sup_F = -std::numeric_limits<double>::infinity();
    const std::array<double, 3> sigmas{-p.sigma0, 0.0, p.sigma0};
    for (std::size_t i = start; i < n; ++i) {
        const PhaseState& st = traj.states[i];
        s.sup_f = std::max(s.sup_f, f.norm_at(traj.times[i]));
        s.sup_F = std::max(s.sup_F, corrected_energy(st, p));
        s.sup_v = std::max(s.sup_v, norm_h(st.v));
        s.sup_u1 = std::max(s.sup_u1, std::abs(st.u[0]));
        for (std::size_t c = 0; c < 3; ++c) {
            Vec du = st.u;
            du[0] -= sigmas[c];
            s.sup_distance[c] = std::max(s.sup_distance[c], norm_a(du, p.op));
        }
    }
    return s;
}

RegimeConstants regime_constants(const ModelParams& p, double beta) {
    const double l1 = p.op.lambda1();
    const double l2 = p.op.lambda2();
    const double g0 = p.gamma0;
    const double s0 = p.sigma0;
    if (!(beta > 0.0 && beta < s0)) {
        throw InfeasibleBeta("beta = " + std::to_string(beta) + " not in (0, sigma0 = " +
                             std::to_string(s0) + ")");
    }

    RegimeConstants c;
    c.beta = beta;
    c.beta0 = std::min({std::pow((l2 - p.lambda) * g0 / (16.0 * l2 * l1 * l1), 0.25),
                        std::sqrt((p.lambda - l1) / (2.0 * l1)), 0.99 * s0});

    // beta1: largest x in (0, beta) with W(x) >= W(0) - gamma0 beta^2 / 12,
    // which makes delta >= gamma0 beta^2 / 12 > 0. W is strictly decreasing
    // on [0, sigma0], so the feasible set is an interval containing 0+.
    auto W = [&](double x) { return well_potential(x, p); };
    const double threshold = W(0.0) - g0 / 12.0 * beta * beta;
    c.beta1 = monotone_bisect(beta, [&](double x) { return W(x) >= threshold; });
    if (c.beta1 >= beta) c.beta1 = beta * (1.0 - 1e-12);
    c.delta = W(c.beta1) - W(0.0) + g0 / 6.0 * beta * beta;

    // Closed forms: K1 from the quartic root of W(x) = W(0) + 1; K2 is
    // (l1^2/4)(x + s0)^2 maximized at sqrt(2) s0; K3 is l1^2 x (x + s0)
    // minimized at beta1.
    c.K1 = std::sqrt(s0 * s0 + std::sqrt(s0 * s0 * s0 * s0 + 4.0 / (l1 * l1)));
    const double sq2p1 = std::sqrt(2.0) + 1.0;
    c.K2 = 0.25 * l1 * l1 * s0 * s0 * sq2p1 * sq2p1;
    c.K3 = l1 * l1 * c.beta1 * (c.beta1 + s0);

    // Largest gamma1 satisfying all five smallness inequalities; each left
    // side is increasing in gamma1, so the feasible set is an interval.
    c.gamma1 = monotone_bisect(0.25, [&](double g1) {
        return g1 <= 0.25 && c.K2 * g1 + 0.25 * g1 + g1 * g1 <= c.K3 &&
               l1 * g1 * std::sqrt(2.0) * s0 * s0 <= (l2 - p.lambda) * g0 && g1 * g1 <= g0 &&
               2.0 * (c.K1 + s0) * (c.K1 + s0) * g1 <= c.delta;
    });

    c.eta = std::min(1.0, c.delta / 4.0 / (1.0 + (g0 / 3.0 + c.gamma1) * (c.K1 + s0)));
    c.eps1 = 0.5 * c.gamma1 * std::sqrt(c.delta) * (1.0 - 1e-6);
    c.M1 = 2.0 / g0;
    c.M2 = p.lambda * p.lambda;
    c.M3 = 4.0 * c.M1;

    const double lN = p.op.lambda_max();
    c.c7 = std::min(c.gamma1 / (4.0 * lN * lN),
                    std::min(0.25, (l2 - p.lambda) / (2.0 * l2)));

    verify_constants(c, p);
    return c;
}

RegimeConstants regime_constants(const ModelParams& p) {
    const double l1 = p.op.lambda1();
    const double l2 = p.op.lambda2();
    const double beta0 = std::min({std::pow((l2 - p.lambda) * p.gamma0 / (16.0 * l2 * l1 * l1), 0.25),
                                   std::sqrt((p.lambda - l1) / (2.0 * l1)), 0.99 * p.sigma0});
    return regime_constants(p, beta0);
}

RegimeReport classify(const Trajectory& traj, const Forcing& f, const ModelParams& p,
                      ClassifierMode mode, double window_fraction) {
    const std::size_t n = traj.size();
    const auto tail_count = static_cast<std::size_t>(std::llround(window_fraction * n));
    if (n < 16 || tail_count < 8) {
        throw HorizonTooShort("classify: need at least 16 samples with 8 in the tail window");
    }
    const std::size_t start = n - tail_count;

    const std::array<double, 3> sigmas{-p.sigma0, 0.0, p.sigma0};
    std::array<std::vector<double>, 3> residuals;
    std::vector<double> fnorm(tail_count);
    for (int c = 0; c < 3; ++c) residuals[static_cast<std::size_t>(c)].resize(tail_count);
    for (std::size_t i = 0; i < tail_count; ++i) {
        const PhaseState& s = traj.states[start + i];
        for (std::size_t c = 0; c < 3; ++c) {
            residuals[c][i] = equilibrium_residual(s, sigmas[c], p.op);
        }
        fnorm[i] = f.norm_at(traj.times[start + i]);
    }

    std::array<double, 3> tails{};
    for (std::size_t c = 0; c < 3; ++c) tails[c] = stabilized_tail_sup(residuals[c]);

    std::size_t best = 0;
    for (std::size_t c = 1; c < 3; ++c) {
        if (tails[c] < tails[best]) best = c;
    }
    double runner_up = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < 3; ++c) {
        if (c != best) runner_up = std::min(runner_up, tails[c]);
    }

    RegimeReport rep;
    rep.sigma = sigmas[best];
    rep.tail_residual = tails[best];
    rep.forcing_tail = stabilized_tail_sup(fnorm);
    rep.certified = runner_up >= 3.0 * tails[best];
    rep.mode = mode;
    rep.candidate_residuals = tails;
    if (rep.forcing_tail > 0.0) {
        rep.margin_vs_linear_scaling = rep.tail_residual / rep.forcing_tail;
    } else {
        rep.margin_vs_linear_scaling =
            rep.tail_residual == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }

    if (mode == ClassifierMode::Theoretical) {
        const RegimeConstants c = regime_constants(p);
        std::vector<double> u1(tail_count);
        for (std::size_t i = 0; i < tail_count; ++i) u1[i] = traj.states[start + i].u[0];
        const double tail_u1 = stabilized_tail_sup(u1);
        if (tail_u1 <= c.beta0 && rep.forcing_tail <= 1.0) {
            rep.gate = TheoreticalGate::Unstable;
        } else {
            // suffix sup of |f| over the tail samples
            std::vector<double> suffix(tail_count);
            double acc = 0;
            for (std::size_t i = tail_count; i-- > 0;) {
                acc = std::max(acc, std::abs(fnorm[i]));
                suffix[i] = acc;
            }
            for (std::size_t i = 0; i < tail_count; ++i) {
                if (suffix[i] > c.eps1) continue;
                const PhaseState& s = traj.states[start + i];
                const double F = corrected_energy(s, p);
                if (F < c.eta && std::abs(s.v[0]) < c.eta) {
                    if (s.u[0] > c.beta) {
                        rep.gate = TheoreticalGate::StablePlus;
                        break;
                    }
                    if (s.u[0] < -c.beta) {
                        rep.gate = TheoreticalGate::StableMinus;
                        break;
                    }
                }
            }
        }
    }
    return rep;
}

UltimateBoundReport verify_ultimate_bound(const Trajectory& traj, const Forcing& f,
                                          const ModelParams& p, double window_fraction,
                                          double slack) {
    const std::size_t n = traj.size();
    const auto tail_count = static_cast<std::size_t>(std::llround(window_fraction * n));
    if (n < 16 || tail_count < 8) {
        throw HorizonTooShort("verify_ultimate_bound: horizon too short for the tail window");
    }
    const std::size_t start = n - tail_count;

    double tail_F = -std::numeric_limits<double>::infinity();
    double tail_f = 0, tail_state = 0;
    for (std::size_t i = start; i < n; ++i) {
        const PhaseState& s = traj.states[i];
        tail_F = std::max(tail_F, corrected_energy(s, p));
        tail_f = std::max(tail_f, f.norm_at(traj.times[i]));
        const StateNorms nm = norms(s, p.op);
        tail_state = std::max(tail_state, nm.v * nm.v + nm.u_a * nm.u_a);
    }

    UltimateBoundReport rep;
    rep.tail_F = tail_F;
    rep.tail_f = tail_f;
    rep.tail_state_sq = tail_state;
    const double M1 = 2.0 / p.gamma0;
    const double M2 = p.lambda * p.lambda;
    const double M3 = 4.0 * M1;
    rep.energy_margin = M1 * tail_f * tail_f - tail_F;
    rep.state_margin = M2 + M3 * tail_f * tail_f - tail_state;
    rep.ok = rep.energy_margin >= -slack && rep.state_margin >= -slack;
    return rep;
}

DistanceSeries asymptotic_distance(const Trajectory& a, const Trajectory& b,
                                   const ModelParams& p) {
    if (a.size() != b.size()) throw GridMismatch("asymptotic_distance: different lengths");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a.times[i] - b.times[i]) > 1e-12 * std::max(1.0, std::abs(a.times[i]))) {
            throw GridMismatch("asymptotic_distance: time grids differ at index " +
                               std::to_string(i));
        }
    }
    DistanceSeries out;
    out.times = a.times;
    out.values.resize(a.size());
    Vec du(p.dim()), dv(p.dim());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < p.dim(); ++k) {
            du[k] = a.states[i].u[k] - b.states[i].u[k];
            dv[k] = a.states[i].v[k] - b.states[i].v[k];
        }
        out.values[i] = norm_h(dv) + norm_a(du, p.op);
    }

    // Log-linear fit of the decaying segment: from the series maximum down
    // to the numerical agreement floor (fitting the flat floor would wash
    // the rate out).
    std::size_t start = 0;
    double peak = 0;
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        if (out.values[i] > peak) {
            peak = out.values[i];
            start = i;
        }
    }
    const double floor = std::max(1e-250, 1e-8 * peak);
    std::size_t end = out.values.size();
    for (std::size_t i = start; i < out.values.size(); ++i) {
        if (out.values[i] <= floor) {
            end = i;
            break;
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    for (std::size_t i = start; i < end; ++i) {
        if (out.values[i] > 0.0) {
            const double x = out.times[i], y = std::log(out.values[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
    }
    if (m >= 3) {
        const double denom = static_cast<double>(m) * sxx - sx * sx;
        if (denom > 0) out.fitted_rate = -(static_cast<double>(m) * sxy - sx * sy) / denom;
    }
    return out;
}

OdeOracleReport ode_limsup_oracle(double m, const std::function<double(double)>& psi,
                                  double horizon, double dt) {
    if (!(m > 0.0)) throw NonNegativeMu("ode_limsup_oracle needs m > 0");
    if (!(horizon > 0.0) || !(dt > 0.0)) {
        throw Error("InvalidTimeGrid", "ode_limsup_oracle needs horizon > 0 and dt > 0");
    }
    const auto n = static_cast<std::size_t>(std::llround(horizon / dt)) + 1;
    const ScalarBoundedSolution sol = dichotomy_green_solve(-m, 0.0, dt, n, psi);

    std::vector<double> psis(n);
    for (std::size_t i = 0; i < n; ++i) psis[i] = psi(static_cast<double>(i) * dt);
    for (double y : sol.y) {
        if (!std::isfinite(y) || std::abs(y) > 1e12) {
            throw UnboundedSolution("ode_limsup_oracle: solution left the bounded range");
        }
    }

    OdeOracleReport rep;
    rep.tail_y = tail_limsup(sol.y, 0.5);
    rep.tail_dy = tail_limsup(sol.dy, 0.5);
    rep.tail_psi = tail_limsup(psis, 0.5);
    rep.ratio_y = rep.tail_psi > 0 ? rep.tail_y / rep.tail_psi : 0.0;
    rep.ratio_dy = rep.tail_psi > 0 ? rep.tail_dy / rep.tail_psi : 0.0;
    // 1e-4 relative headroom for the trapezoid quadrature (the equality case
    // sits exactly on the bound)
    rep.ok = rep.tail_y <= rep.tail_psi / m * (1.0 + 1e-4) + 1e-12 &&
             rep.tail_dy <= 2.0 * rep.tail_psi * (1.0 + 1e-4) + 1e-12;
    return rep;
}

PdeOracleReport pde_limsup_oracle(const Vec& b_eigenvalues, const Forcing& psi,
                                  double horizon, double dt) {
    if (b_eigenvalues.empty()) throw NonCoerciveB("pde_limsup_oracle: empty spectrum");
    double m = std::numeric_limits<double>::infinity();
    double mu_max = 0;
    for (double mu : b_eigenvalues) {
        if (!(mu > 0.0)) throw NonCoerciveB("B eigenvalue " + std::to_string(mu) + " <= 0");
        m = std::min(m, mu);
        mu_max = std::max(mu_max, mu);
    }
    detail::require_dim(psi.dim(), b_eigenvalues.size(), "pde_limsup_oracle (forcing)");
    if (dt > std::min(2.0 / std::max(std::sqrt(mu_max), 1.0), 0.5)) {
        throw StepTooLargeForStiffness("pde_limsup_oracle: dt too large for max eigenvalue");
    }

    // Plain RK4 on the damped linear diagonal system from zero data.
    const std::size_t dim = b_eigenvalues.size();
    const auto steps = static_cast<std::size_t>(std::llround(horizon / dt));
    Vec y(dim, 0.0), v(dim, 0.0), fbuf;
    std::vector<double> energy(steps + 1), psinorm2(steps + 1);
    auto deriv = [&](const Vec& yy, const Vec& vv, double t, Vec& dy, Vec& dv) {
        psi.evaluate(t, fbuf);
        for (std::size_t k = 0; k < dim; ++k) {
            dy[k] = vv[k];
            dv[k] = -vv[k] - b_eigenvalues[k] * yy[k] + fbuf[k];
        }
    };
    auto record = [&](std::size_t i, double t) {
        double e = 0;
        for (std::size_t k = 0; k < dim; ++k) e += v[k] * v[k] + b_eigenvalues[k] * y[k] * y[k];
        energy[i] = e;
        psi.evaluate(t, fbuf);
        double p2 = 0;
        for (double x : fbuf) p2 += x * x;
        psinorm2[i] = p2;
    };
    record(0, 0.0);
    Vec k1y(dim), k1v(dim), k2y(dim), k2v(dim), k3y(dim), k3v(dim), k4y(dim), k4v(dim),
        ty(dim), tv(dim);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        deriv(y, v, t, k1y, k1v);
        for (std::size_t k = 0; k < dim; ++k) {
            ty[k] = y[k] + 0.5 * dt * k1y[k];
            tv[k] = v[k] + 0.5 * dt * k1v[k];
        }
        deriv(ty, tv, t + 0.5 * dt, k2y, k2v);
        for (std::size_t k = 0; k < dim; ++k) {
            ty[k] = y[k] + 0.5 * dt * k2y[k];
            tv[k] = v[k] + 0.5 * dt * k2v[k];
        }
        deriv(ty, tv, t + 0.5 * dt, k3y, k3v);
        for (std::size_t k = 0; k < dim; ++k) {
            ty[k] = y[k] + dt * k3y[k];
            tv[k] = v[k] + dt * k3v[k];
        }
        deriv(ty, tv, t + dt, k4y, k4v);
        for (std::size_t k = 0; k < dim; ++k) {
            y[k] += dt / 6.0 * (k1y[k] + 2.0 * k2y[k] + 2.0 * k3y[k] + k4y[k]);
            v[k] += dt / 6.0 * (k1v[k] + 2.0 * k2v[k] + 2.0 * k3v[k] + k4v[k]);
        }
        record(i + 1, t + dt);
    }

    PdeOracleReport rep;
    rep.tail_energy = tail_limsup(energy, 0.5);
    rep.tail_psi_sq = tail_limsup(psinorm2, 0.5);
    rep.bound = 9.0 * std::max(1.0, 1.0 / m) * rep.tail_psi_sq;
    rep.ratio = rep.tail_psi_sq > 0 ? rep.tail_energy / rep.tail_psi_sq : 0.0;
    rep.ok = rep.tail_energy <= rep.bound * (1.0 + 1e-4) + 1e-12;
    return rep;
}

double LemmaCase::psi(double t) const {
    double s = constant;
    for (const auto& w : waves) {
        const double phase = 2.0 * std::numbers::pi * w.freq_index * t / period;
        s += w.cos_amp * std::cos(phase) + w.sin_amp * std::sin(phase);
    }
    return s;
}

Forcing LemmaCase::forcing(std::size_t dim, int mode) const {
    std::vector<FourierTerm> terms;
    if (constant != 0.0) terms.push_back(FourierTerm{0, mode, constant, 0.0});
    for (const auto& w : waves) terms.push_back(FourierTerm{w.freq_index, mode, w.cos_amp, w.sin_amp});
    return Forcing::periodic_fourier(dim, period, terms);
}

std::vector<LemmaCase> lemma_oracle_suite() {
    const double tp = 2.0 * std::numbers::pi;
    std::vector<LemmaCase> suite;
    suite.push_back({"equality-constant", 1.0, tp, 1.0, {}});
    suite.push_back({"constant-negative", 2.0, tp, -3.0, {}});
    suite.push_back({"constant-small", 0.5, tp, 0.2, {}});
    suite.push_back({"sine", 1.0, tp, 0.0, {{1, 0, 0.0, 1.0}}});
    suite.push_back({"cosine-fast", 0.5, tp, 0.0, {{2, 0, 1.0, 0.0}}});
    suite.push_back({"mix-offset", 1.0, tp, 0.3, {{1, 0, 0.0, 0.5}}});
    suite.push_back({"two-harmonics", 0.25, tp, 0.0, {{1, 0, 1.0, 0.0}, {3, 0, 0.2, 0.0}}});
    suite.push_back({"slow-wave", 4.0, 2.0 * tp, 0.0, {{1, 0, 0.0, 1.0}}});
    suite.push_back({"stiff-m", 3.0, tp, 0.0, {{1, 0, 0.4, 0.0}, {2, 0, 0.0, 0.1}}});
    suite.push_back({"tiny-amp", 0.75, tp, 0.0, {{1, 0, 1e-3, 0.0}}});
    return suite;
}

}  // namespace duffing
