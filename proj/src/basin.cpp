#include "duffing/basin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "duffing/parallel.hpp"

namespace duffing {

namespace {

// Coarse recording is enough for tail classification; keep the step itself
// at full resolution.
IntegrateOptions classify_recording(double dt) {
    IntegrateOptions opt;
    opt.record_every = std::max(1, static_cast<int>(std::llround(0.05 / dt)));
    return opt;
}

double dwell_time(const Trajectory& traj, double beta0) {
    for (std::size_t i = 0; i < traj.size(); ++i) {
        if (std::abs(traj.states[i].u[0]) > beta0) return traj.times[i] - traj.times[0];
    }
    return traj.times.back() - traj.times.front();
}

PhaseState midpoint(const PhaseState& a, const PhaseState& b) {
    PhaseState m = a;
    for (std::size_t k = 0; k < m.u.size(); ++k) {
        m.u[k] = 0.5 * (a.u[k] + b.u[k]);
        m.v[k] = 0.5 * (a.v[k] + b.v[k]);
    }
    return m;
}

}  // namespace

BisectionResult bisect_boundary(const PhaseState& a, const PhaseState& b, const Forcing& f,
                                const ModelParams& p, double horizon, double width_tol,
                                double dt) {
    if (dt <= 0.0) dt = default_dt(p);
    const IntegrateOptions rec = classify_recording(dt);
    const double beta0 = regime_constants(p).beta0;

    auto run = [&](const PhaseState& x) {
        return integrate(x, f, 0.0, horizon, dt, Method::Rk4, p, rec);
    };
    auto sigma_of = [&](const Trajectory& traj) { return classify(traj, f, p).sigma; };

    const double sa = sigma_of(run(a));
    const double sb = sigma_of(run(b));
    if (!(sa == p.sigma0 && sb == -p.sigma0)) {
        throw EndpointsSameBasin("endpoints must classify to +sigma0 and -sigma0, got " +
                                 std::to_string(sa) + " and " + std::to_string(sb));
    }

    BisectionResult res;
    res.endpoint_plus = a;
    res.endpoint_minus = b;
    res.sigma_plus = sa;
    res.sigma_minus = sb;
    res.boundary_dwell = -1.0;

    while (phase_distance(res.endpoint_plus, res.endpoint_minus, p.op) > width_tol) {
        const PhaseState mid = midpoint(res.endpoint_plus, res.endpoint_minus);
        const Trajectory traj = run(mid);
        const RegimeReport rep = classify(traj, f, p);
        const double dwell = dwell_time(traj, beta0);
        if (dwell > res.boundary_dwell) {
            res.boundary_dwell = dwell;
            res.boundary = mid;
            res.boundary_tail_residual = rep.candidate_residuals[1];
        }
        ++res.steps;
        if (rep.sigma == p.sigma0) {
            res.endpoint_plus = mid;
        } else if (rep.sigma == -p.sigma0) {
            res.endpoint_minus = mid;
        } else {
            // Hovering on the manifold for the whole horizon; split by the
            // late sign of u1 so the loop keeps its two-sided invariant.
            if (traj.back().u[0] >= 0.0) {
                res.endpoint_plus = mid;
            } else {
                res.endpoint_minus = mid;
            }
        }
    }
    res.width = phase_distance(res.endpoint_plus, res.endpoint_minus, p.op);
    if (res.boundary_dwell < 0.0) {
        // width_tol wider than the initial segment: fall back to the midpoint
        const PhaseState mid = midpoint(res.endpoint_plus, res.endpoint_minus);
        const Trajectory traj = run(mid);
        res.boundary = mid;
        res.boundary_dwell = dwell_time(traj, beta0);
        res.boundary_tail_residual = classify(traj, f, p).candidate_residuals[1];
    }
    return res;
}

double openness_probe(const PhaseState& base, double radius, int samples, const Forcing& f,
                      const ModelParams& p, double horizon, std::uint64_t seed, double dt) {
    if (samples <= 0) throw Error("InvalidSampleCount", "openness_probe needs samples >= 1");
    if (dt <= 0.0) dt = default_dt(p);
    const IntegrateOptions rec = classify_recording(dt);

    const RegimeReport base_rep =
        classify(integrate(base, f, 0.0, horizon, dt, Method::Rk4, p, rec), f, p);
    if (!base_rep.certified || base_rep.sigma == 0.0) {
        throw UncertifiedBasePoint("base point classification is " +
                                   std::to_string(base_rep.sigma) + ", certified = " +
                                   (base_rep.certified ? "true" : "false"));
    }

    // Pre-drawn per-sample seeds keep the fan-out deterministic.
    SeededRng master(seed);
    std::vector<std::uint64_t> sample_seeds(static_cast<std::size_t>(samples));
    for (auto& s : sample_seeds) s = master.next_u64();

    std::vector<int> same(static_cast<std::size_t>(samples), 0);
    parallel_for(static_cast<std::size_t>(samples), [&](std::size_t i) {
        SeededRng rng(sample_seeds[i]);
        const PhaseState d = random_state(rng, p.op, radius);
        PhaseState x = base;
        for (std::size_t k = 0; k < x.u.size(); ++k) {
            x.u[k] += d.u[k];
            x.v[k] += d.v[k];
        }
        const RegimeReport rep =
            classify(integrate(x, f, 0.0, horizon, dt, Method::Rk4, p, rec), f, p);
        same[i] = (rep.sigma == base_rep.sigma) ? 1 : 0;
    });

    int count = 0;
    for (int s : same) count += s;
    return static_cast<double>(count) / static_cast<double>(samples);
}

HeteroclinicReport heteroclinic_demo(const ModelParams& p, double horizon, double delta,
                                     double dt) {
    if (dt <= 0.0) dt = default_dt(p);
    const Forcing f = Forcing::zero(p.dim());
    PhaseState x0 = zero_state(p.dim());
    x0.u[0] = delta;

    HeteroclinicReport rep;
    rep.delta = delta;
    rep.sigma_target = (delta > 0) ? p.sigma0 : (delta < 0 ? -p.sigma0 : 0.0);
    rep.traj = integrate(x0, f, 0.0, horizon, dt, Method::Rk4, p, classify_recording(dt));
    if (rep.traj.size() < 16) throw HorizonTooShort("heteroclinic_demo: horizon too short");

    rep.dwell_time = dwell_time(rep.traj, regime_constants(p).beta0);

    const std::size_t n = rep.traj.size();
    double rt = 0, rz = 0;
    for (std::size_t i = n - n / 2; i < n; ++i) {
        rt = std::max(rt, equilibrium_residual(rep.traj.states[i], rep.sigma_target, p.op));
        rz = std::max(rz, equilibrium_residual(rep.traj.states[i], 0.0, p.op));
    }
    rep.tail_residual_target = rt;
    rep.tail_residual_zero = rz;
    return rep;
}

}  // namespace duffing
