#pragma once

#include <array>
#include <utility>
#include <vector>

#include "duffing/forcing.hpp"
#include "duffing/spectral.hpp"

namespace duffing {

enum class Method { Rk4, Rk4IntegratingFactor };

struct Trajectory {
    std::vector<double> times;        // strictly increasing, uniform spacing
    std::vector<PhaseState> states;   // one per time
    double dt = 0;                    // recording step

    std::size_t size() const noexcept { return times.size(); }
    const PhaseState& front() const { return states.front(); }
    const PhaseState& back() const { return states.back(); }
};

// Modal derivative of u'' + u' + A^2 u - lambda A u + |A^{1/2}u|^2 A u = f:
//   du_k = v_k
//   dv_k = -v_k - lk^2 u_k + lambda lk u_k - (sum_j lj u_j^2) lk u_k + f_k(t)
// Restricting to mode 1 alone reproduces the scalar Duffing equation.
void rhs(const PhaseState& state, double t, const Forcing& f, const ModelParams& p,
         Vec& du, Vec& dv);
std::pair<Vec, Vec> rhs(const PhaseState& state, double t, const Forcing& f,
                        const ModelParams& p);

// Conservative default step, 0.5 / lambda_N^2.
double default_dt(const ModelParams& p);

// Largest dt the stability check accepts for the given method. Rk4 resolves
// the full linear stiffness (dt * max(lambda_N^2, 1) <= 2); the integrating
// factor handles the linear part exactly and only needs the nonlinear scale
// resolved (dt * max(lambda_N, 1) <= 2). Both are capped at dt <= 0.5.
double stability_limit(const ModelParams& p, Method method);

struct IntegrateOptions {
    int record_every = 1;  // keep every k-th step (plus the final one)
};

// Fixed-step integration on [t0, t1]. Deterministic: fixed inputs give
// bit-identical trajectories. Throws StepTooLargeForStiffness if dt exceeds
// the documented bound and NonFiniteState on overflow/NaN.
Trajectory integrate(const PhaseState& initial, const Forcing& f, double t0, double t1,
                     double dt, Method method, const ModelParams& p,
                     IntegrateOptions opt = {});

// { -sigma0 e1, 0, +sigma0 e1 }, each with zero velocity.
std::array<PhaseState, 3> stationary_states(const ModelParams& p);

}  // namespace duffing
