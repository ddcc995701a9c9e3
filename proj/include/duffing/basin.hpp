#pragma once

#include <cstdint>

#include "duffing/asymptotics.hpp"

namespace duffing {

struct BisectionResult {
    PhaseState endpoint_plus;   // final endpoint classified to +sigma0
    PhaseState endpoint_minus;  // final endpoint classified to -sigma0
    PhaseState boundary;        // longest near-zero dwell among evaluated points
    double width = 0;           // final segment width in D(A) x H
    double sigma_plus = 0;
    double sigma_minus = 0;
    double boundary_dwell = 0;          // time the boundary trajectory kept |u1| <= beta0
    double boundary_tail_residual = 0;  // its tail residual against sigma = 0
    int steps = 0;
};

// Bisection along the straight phase-space segment [a, b]; a must classify
// to +sigma0 and b to -sigma0. The width halves exactly each step.
BisectionResult bisect_boundary(const PhaseState& a, const PhaseState& b, const Forcing& f,
                                const ModelParams& p, double horizon, double width_tol,
                                double dt = 0);

// Fraction of `samples` random perturbations (norm <= radius in D(A) x H)
// whose classification matches the base point's. The base point must itself
// classify to a certified +-sigma0.
double openness_probe(const PhaseState& base, double radius, int samples, const Forcing& f,
                      const ModelParams& p, double horizon, std::uint64_t seed = 0,
                      double dt = 0);

struct HeteroclinicReport {
    Trajectory traj;
    double delta = 0;
    double sigma_target = 0;           // equilibrium the orbit escapes to
    double dwell_time = 0;             // time with |u1| <= beta0
    double tail_residual_target = 0;   // tail residual against sigma_target
    double tail_residual_zero = 0;     // tail residual against the origin
};

// Unforced orbit from (delta e1, 0): hovers near the unstable equilibrium
// for ~log(1/|delta|)/s_plus, then falls into the well on delta's side.
HeteroclinicReport heteroclinic_demo(const ModelParams& p, double horizon,
                                     double delta = 1e-8, double dt = 0);

}  // namespace duffing
