#include "duffing/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace duffing {

namespace {

// Derivative with caller-provided buffers; `fbuf` holds f(t).
void eval_rhs(const Vec& u, const Vec& v, double t, const Forcing& f, const ModelParams& p,
              Vec& du, Vec& dv, Vec& fbuf) {
    const std::size_t n = p.dim();
    f.evaluate(t, fbuf);
    double s = 0;  // |A^{1/2} u|^2
    for (std::size_t j = 0; j < n; ++j) s += p.op.eigenvalue(j) * u[j] * u[j];
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = p.op.eigenvalue(k);
        du[k] = v[k];
        dv[k] = -v[k] - lk * lk * u[k] + p.lambda * lk * u[k] - s * lk * u[k] + fbuf[k];
    }
}

// Nonlinear-and-forcing part only (velocity slot), used by the
// integrating-factor scheme whose linear propagator is exact.
void eval_nonlinear(const Vec& u, double t, const Forcing& f, const ModelParams& p,
                    Vec& dv, Vec& fbuf) {
    const std::size_t n = p.dim();
    f.evaluate(t, fbuf);
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += p.op.eigenvalue(j) * u[j] * u[j];
    for (std::size_t k = 0; k < n; ++k) {
        dv[k] = -s * p.op.eigenvalue(k) * u[k] + fbuf[k];
    }
}

struct Mat2 {
    double a, b, c, d;  // row-major [[a, b], [c, d]]
};

// exp(t * [[0, 1], [-mu, -1]]). Split off the -I/2 damping: the remainder
// B = [[1/2, 1], [-mu, -1/2]] squares to (1/4 - mu) I, so the exponential is
// e^{-t/2} (cosh(q t) I + sinh(q t)/q B) with q^2 = 1/4 - mu (trig branch for
// mu > 1/4, series near the double root).
Mat2 exp_modal(double mu, double t) {
    const double disc = 0.25 - mu;
    double ch, shq;
    if (disc > 1e-10) {
        const double q = std::sqrt(disc);
        ch = std::cosh(q * t);
        shq = std::sinh(q * t) / q;
    } else if (disc < -1e-10) {
        const double w = std::sqrt(-disc);
        ch = std::cos(w * t);
        shq = std::sin(w * t) / w;
    } else {
        const double x = disc * t * t;
        ch = 1.0 + x / 2.0 + x * x / 24.0;
        shq = t * (1.0 + x / 6.0 + x * x / 120.0);
    }
    const double e = std::exp(-0.5 * t);
    return Mat2{e * (ch + 0.5 * shq), e * shq, e * (-mu * shq), e * (ch - 0.5 * shq)};
}

inline void apply_exp(const std::vector<Mat2>& E, Vec& u, Vec& v) {
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double uu = u[k], vv = v[k];
        u[k] = E[k].a * uu + E[k].b * vv;
        v[k] = E[k].c * uu + E[k].d * vv;
    }
}

void check_finite(const Vec& u, const Vec& v, double t) {
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!std::isfinite(u[k]) || !std::isfinite(v[k])) {
            throw NonFiniteState("non-finite state at t = " + std::to_string(t) +
                                 ", mode " + std::to_string(k + 1));
        }
    }
}

}  // namespace

void rhs(const PhaseState& state, double t, const Forcing& f, const ModelParams& p,
         Vec& du, Vec& dv) {
    const std::size_t n = p.dim();
    detail::require_dim(state.u.size(), n, "rhs");
    detail::require_dim(state.v.size(), n, "rhs");
    detail::require_dim(f.dim(), n, "rhs (forcing)");
    du.resize(n);
    dv.resize(n);
    Vec fbuf;
    eval_rhs(state.u, state.v, t, f, p, du, dv, fbuf);
}

std::pair<Vec, Vec> rhs(const PhaseState& state, double t, const Forcing& f,
                        const ModelParams& p) {
    Vec du, dv;
    rhs(state, t, f, p, du, dv);
    return {std::move(du), std::move(dv)};
}

double default_dt(const ModelParams& p) {
    const double lN = p.op.lambda_max();
    return 0.5 / (lN * lN);
}

double stability_limit(const ModelParams& p, Method method) {
    const double lN = p.op.lambda_max();
    const double stiff = (method == Method::Rk4) ? std::max(lN * lN, 1.0) : std::max(lN, 1.0);
    return std::min(2.0 / stiff, 0.5);
}

Trajectory integrate(const PhaseState& initial, const Forcing& f, double t0, double t1,
                     double dt, Method method, const ModelParams& p, IntegrateOptions opt) {
    const std::size_t n = p.dim();
    detail::require_dim(initial.u.size(), n, "integrate");
    detail::require_dim(initial.v.size(), n, "integrate");
    detail::require_dim(f.dim(), n, "integrate (forcing)");
    if (!(dt > 0.0) || !(t1 > t0)) {
        throw Error("InvalidTimeGrid", "integrate needs dt > 0 and t1 > t0");
    }
    const double limit = stability_limit(p, method);
    if (dt > limit) {
        throw StepTooLargeForStiffness("dt = " + std::to_string(dt) +
                                       " exceeds stability bound " + std::to_string(limit) +
                                       " for this spectrum/method");
    }
    const int stride = std::max(1, opt.record_every);
    std::size_t steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt - 1e-12));
    steps = ((steps + stride - 1) / stride) * stride;  // whole number of records

    Trajectory traj;
    traj.dt = dt * stride;
    traj.times.reserve(steps / stride + 1);
    traj.states.reserve(steps / stride + 1);

    Vec u = initial.u, v = initial.v;
    Vec fbuf(n);
    traj.times.push_back(t0);
    traj.states.push_back(PhaseState{u, v});

    if (method == Method::Rk4) {
        Vec du1(n), dv1(n), du2(n), dv2(n), du3(n), dv3(n), du4(n), dv4(n), ut(n), vt(n);
        for (std::size_t i = 0; i < steps; ++i) {
            const double t = t0 + static_cast<double>(i) * dt;
            eval_rhs(u, v, t, f, p, du1, dv1, fbuf);
            for (std::size_t k = 0; k < n; ++k) {
                ut[k] = u[k] + 0.5 * dt * du1[k];
                vt[k] = v[k] + 0.5 * dt * dv1[k];
            }
            eval_rhs(ut, vt, t + 0.5 * dt, f, p, du2, dv2, fbuf);
            for (std::size_t k = 0; k < n; ++k) {
                ut[k] = u[k] + 0.5 * dt * du2[k];
                vt[k] = v[k] + 0.5 * dt * dv2[k];
            }
            eval_rhs(ut, vt, t + 0.5 * dt, f, p, du3, dv3, fbuf);
            for (std::size_t k = 0; k < n; ++k) {
                ut[k] = u[k] + dt * du3[k];
                vt[k] = v[k] + dt * dv3[k];
            }
            eval_rhs(ut, vt, t + dt, f, p, du4, dv4, fbuf);
            for (std::size_t k = 0; k < n; ++k) {
                u[k] += dt / 6.0 * (du1[k] + 2.0 * du2[k] + 2.0 * du3[k] + du4[k]);
                v[k] += dt / 6.0 * (dv1[k] + 2.0 * dv2[k] + 2.0 * dv3[k] + dv4[k]);
            }
            check_finite(u, v, t + dt);
            if ((i + 1) % static_cast<std::size_t>(stride) == 0) {
                traj.times.push_back(t0 + static_cast<double>(i + 1) * dt);
                traj.states.push_back(PhaseState{u, v});
            }
        }
        return traj;
    }

    // Lawson scheme: exact modal propagator for the linear part, classical
    // RK4 weights on the transformed nonlinearity.
    std::vector<Mat2> Ehalf(n), Efull(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lk = p.op.eigenvalue(k);
        const double mu = lk * lk - p.lambda * lk;
        Ehalf[k] = exp_modal(mu, 0.5 * dt);
        Efull[k] = exp_modal(mu, dt);
    }
    Vec k1(n), k2(n), k3(n), k4(n), ua(n), va(n), ub(n), vb(n);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = t0 + static_cast<double>(i) * dt;
        eval_nonlinear(u, t, f, p, k1, fbuf);
        // stage 2: E_half (U + h/2 K1)
        for (std::size_t k = 0; k < n; ++k) {
            ua[k] = u[k];
            va[k] = v[k] + 0.5 * dt * k1[k];
        }
        apply_exp(Ehalf, ua, va);
        eval_nonlinear(ua, t + 0.5 * dt, f, p, k2, fbuf);
        // stage 3: N only reads the u slot, and the u-part of
        // (E_half U + h/2 K2) is just [E_half U].u since K2 is v-only.
        for (std::size_t k = 0; k < n; ++k) {
            ub[k] = u[k];
            vb[k] = v[k];
        }
        apply_exp(Ehalf, ub, vb);
        eval_nonlinear(ub, t + 0.5 * dt, f, p, k3, fbuf);
        // stage 4: E_full U + h E_half K3
        for (std::size_t k = 0; k < n; ++k) {
            ua[k] = 0.0;
            va[k] = dt * k3[k];
        }
        apply_exp(Ehalf, ua, va);
        for (std::size_t k = 0; k < n; ++k) {
            ub[k] = u[k];
            vb[k] = v[k];
        }
        apply_exp(Efull, ub, vb);
        for (std::size_t k = 0; k < n; ++k) {
            ub[k] += ua[k];
            vb[k] += va[k];
        }
        eval_nonlinear(ub, t + dt, f, p, k4, fbuf);
        // combine: U_{n+1} = E_full U + h/6 (E_full K1 + 2 E_half (K2 + K3)) + h/6 K4
        for (std::size_t k = 0; k < n; ++k) {
            ua[k] = 0.0;
            va[k] = dt / 6.0 * k1[k];
        }
        apply_exp(Efull, ua, va);
        for (std::size_t k = 0; k < n; ++k) {
            ub[k] = 0.0;
            vb[k] = dt / 6.0 * (2.0 * k2[k] + 2.0 * k3[k]);
        }
        apply_exp(Ehalf, ub, vb);
        apply_exp(Efull, u, v);
        for (std::size_t k = 0; k < n; ++k) {
            u[k] += ua[k] + ub[k];
            v[k] += va[k] + vb[k] + dt / 6.0 * k4[k];
        }
        check_finite(u, v, t + dt);
        if ((i + 1) % static_cast<std::size_t>(stride) == 0) {
            traj.times.push_back(t0 + static_cast<double>(i + 1) * dt);
            traj.states.push_back(PhaseState{u, v});
        }
    }
    return traj;
}

std::array<PhaseState, 3> stationary_states(const ModelParams& p) {
    const std::size_t n = p.dim();
    std::array<PhaseState, 3> out{zero_state(n), zero_state(n), zero_state(n)};
    out[0].u[0] = -p.sigma0;
    out[2].u[0] = p.sigma0;
    // each must be an exact zero of the unforced flow
    const Forcing f0 = Forcing::zero(n);
    Vec du, dv;
    for (const auto& s : out) {
        rhs(s, 0.0, f0, p, du, dv);
        for (double x : dv) {
            if (std::abs(x) > 1e-12) {
                throw Error("StationaryStateDrift", "computed equilibrium is not stationary");
            }
        }
    }
    return out;
}

}  // namespace duffing
