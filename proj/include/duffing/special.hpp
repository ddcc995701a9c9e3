#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "duffing/dynamics.hpp"

namespace duffing {

// Diagonal modal stiffnesses of the linearization around an equilibrium.
// sigma = 0:        mu_k = lk^2 - lambda lk   (mu_1 < 0, the unstable mode)
// sigma = +-sigma0: mu_1 = 2 l1 (lambda - l1), mu_k = lk^2 - l1 lk  (all > 0)
struct LinearizedOperator {
    double sigma = 0;
    Vec mu;
    double coercivity = 0;  // min modal stiffness (m0 in the stable cases)
};

LinearizedOperator linearize(double sigma, const ModelParams& p);

// g(w) = full nonlinearity minus its equilibrium and linear parts, so that
// u = sigma e1 + w solves the full equation iff w'' + w' + L w = f + g(w).
Vec nonlinear_remainder(double sigma, const Vec& w, const ModelParams& p);

struct PeriodicSolution {
    double sigma = 0;
    double period = 0;
    int harmonics = 0;  // kept band |j| <= J
    int grid_size = 0;  // collocation points M (padded to dealias the cubic)
    std::vector<std::vector<std::complex<double>>> coeffs;  // [mode][j], DFT of w
    Trajectory orbit;   // one period, grid_size + 1 samples
    double residual = 0;  // sup-norm residual in the full equation
    int iterations = 0;

    // u = sigma e1 + w(t), v = w'(t) from the Fourier sum, any t.
    PhaseState evaluate(double t, const ModelParams& p) const;
};

// Fixed point of w <- K(f + g(w)) in time-Fourier space. The forcing must be
// PeriodicFourier; convergence requires it to be small (the contraction
// hypothesis), divergence surfaces as NonContraction.
PeriodicSolution solve_periodic(double sigma, const Forcing& f, const ModelParams& p,
                                double tol = 1e-12, int max_iter = 200,
                                const Vec* seed = nullptr);

enum class Extension { Periodic, Zero };

// Unique bounded-on-R solution of y'' + y' + mu y = h for mu < 0, through the
// two-sided dichotomy Green function. h is sampled on a uniform window and
// extended beyond it by the declared rule.
std::vector<double> dichotomy_green_apply(double mu, std::span<const double> times,
                                          std::span<const double> h, Extension ext);

struct ScalarBoundedSolution {
    std::vector<double> y, dy;
};

// Same solve for a function-valued right-hand side defined on all of R;
// returns y and y' on the grid t0 + i dt, i = 0..n-1.
ScalarBoundedSolution dichotomy_green_solve(double mu, double t0, double dt, std::size_t n,
                                            const std::function<double(double)>& h);

struct BoundedSolution {
    Trajectory traj;
    double boundary_layer = 0;     // width of the edge region with degraded accuracy
    double residual_interior = 0;  // full-equation residual away from the edges
    int iterations = 0;
};

// Fixed point of w <- K(f + g(w)) on a finite window of R: coercive modes go
// through the causal Green function, the unstable mode (sigma = 0 only)
// through the dichotomy Green function.
BoundedSolution solve_bounded(double sigma, const Forcing& f, double t0, double t1, double dt,
                              const ModelParams& p, double tol = 1e-10,
                              Extension ext = Extension::Zero, int max_iter = 200);

}  // namespace duffing
