#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "duffing/energy.hpp"

namespace duffing {

// Sup over the trailing `window_fraction` of the samples; the finite-horizon
// surrogate for limsup as t -> infinity.
double tail_limsup(std::span<const double> series, double window_fraction);

// Tail sup with window doubling (1/16, 1/8, 1/4, 1/2 of the series) until
// two successive estimates agree within 5%.
double stabilized_tail_sup(std::span<const double> series);

// Tail sups of the monitored series over the trailing window.
struct TailStats {
    double window_start = 0;
    double sup_f = 0;   // |f(t)|
    double sup_F = 0;   // corrected energy (largest value)
    double sup_v = 0;   // |u'(t)|
    double sup_u1 = 0;  // |u1(t)|
    std::array<double, 3> sup_distance{};  // |A(u - sigma e1)| for -sigma0, 0, +sigma0
};

TailStats tail_stats(const Trajectory& traj, const Forcing& f, const ModelParams& p,
                     double window_fraction = 0.5);

// The constants of the regime analysis. Every defining inequality is
// re-verified after construction.
struct RegimeConstants {
    double beta0 = 0;   // unstable-regime gate on |u1|
    double beta = 0;    // the chosen beta in (0, sigma0)
    double beta1 = 0;   // well floor, keeps delta positive
    double delta = 0;
    double K1 = 0, K2 = 0, K3 = 0;
    double gamma1 = 0;
    double eta = 0;
    double eps1 = 0;
    double M1 = 0, M2 = 0, M3 = 0;
    double c7 = 0;      // conservative coercivity of S over D(A) x H
};

RegimeConstants regime_constants(const ModelParams& p, double beta);
RegimeConstants regime_constants(const ModelParams& p);  // beta = beta0

enum class ClassifierMode { Pragmatic, Theoretical };
enum class TheoreticalGate { None, Unstable, StablePlus, StableMinus };

struct RegimeReport {
    double sigma = 0;          // value in {-sigma0, 0, +sigma0}
    double tail_residual = 0;  // tail sup of |v| + |A(u - sigma e1)|
    double forcing_tail = 0;
    double margin_vs_linear_scaling = 0;  // tail_residual / forcing_tail
    bool certified = false;               // runner-up residual >= 3x winner's
    ClassifierMode mode = ClassifierMode::Pragmatic;
    TheoreticalGate gate = TheoreticalGate::None;
    std::array<double, 3> candidate_residuals{};  // for -sigma0, 0, +sigma0
};

RegimeReport classify(const Trajectory& traj, const Forcing& f, const ModelParams& p,
                      ClassifierMode mode = ClassifierMode::Pragmatic,
                      double window_fraction = 0.5);

struct UltimateBoundReport {
    bool ok = false;
    double tail_F = 0;
    double tail_f = 0;
    double tail_state_sq = 0;     // tail sup of |v|^2 + |Au|^2
    double energy_margin = 0;     // M1 tail_f^2 - tail_F
    double state_margin = 0;      // M2 + M3 tail_f^2 - tail_state_sq
};

// Checks tail F <= M1 (tail |f|)^2 and tail(|v|^2 + |Au|^2) <= M2 + M3 (tail |f|)^2.
UltimateBoundReport verify_ultimate_bound(const Trajectory& traj, const Forcing& f,
                                          const ModelParams& p, double window_fraction = 0.5,
                                          double slack = 1e-9);

struct DistanceSeries {
    std::vector<double> times;
    std::vector<double> values;  // |u' - v'| + |A(u - v)|
    std::optional<double> fitted_rate;  // exponential decay rate over the tail
};

DistanceSeries asymptotic_distance(const Trajectory& a, const Trajectory& b,
                                   const ModelParams& p);

struct OdeOracleReport {
    bool ok = false;
    double tail_y = 0, tail_dy = 0, tail_psi = 0;
    double ratio_y = 0, ratio_dy = 0;  // measured tail ratios vs 1/m and 2
};

// Lemma check for y'' + y' - m y = psi: builds the bounded solution through
// the dichotomy Green function and measures limsup|y| <= (1/m) limsup|psi|
// and limsup|y'| <= 2 limsup|psi|. psi must be defined on all of R.
OdeOracleReport ode_limsup_oracle(double m, const std::function<double(double)>& psi,
                                  double horizon, double dt = 1e-3);

struct PdeOracleReport {
    bool ok = false;
    double tail_energy = 0;   // tail sup of |y'|^2 + |B^{1/2} y|^2
    double tail_psi_sq = 0;
    double bound = 0;         // 9 max{1, 1/m} tail_psi_sq
    double ratio = 0;
};

// Lemma check for y'' + y' + B y = psi with coercive diagonal B.
PdeOracleReport pde_limsup_oracle(const Vec& b_eigenvalues, const Forcing& psi,
                                  double horizon, double dt = 1e-3);

// One (m, psi) pair of the oracle suite; psi = constant + trigonometric
// terms at harmonics of the base period.
struct LemmaCase {
    std::string name;
    double m = 1;
    double period = 0;
    double constant = 0;
    std::vector<FourierTerm> waves;  // mode_index ignored for the scalar form

    double psi(double t) const;
    // The same signal as a Forcing on one mode of an N-dimensional system.
    Forcing forcing(std::size_t dim, int mode) const;
};

// The built-in suite: 10 pairs including the equality case psi = const.
std::vector<LemmaCase> lemma_oracle_suite();

}  // namespace duffing
