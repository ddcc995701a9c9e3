#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "duffing/dynamics.hpp"

namespace duffing {

// All energy functionals evaluated at one time sample.
struct EnergyRecord {
    double E = 0;        // classical energy
    double F = 0;        // corrected energy
    double F_minus = 0;  // first-component part
    double F_plus = 0;   // high-frequency part
    double I = 0;        // interaction term
    double R = 0;        // well energy of the first component (needs gamma1)
    double S = 0;        // global well energy R + F_plus + I
    double f_norm = 0;   // |f(t)|
};

// E = 1/2 |v|^2 + 1/2 |Au|^2 - lambda/2 |A^{1/2}u|^2 + 1/4 |A^{1/2}u|^4
double classical_energy(const PhaseState& state, const ModelParams& p);

// F = E + 2 gamma0 <Pu, v> + gamma0 <Pu, u>
double corrected_energy(const PhaseState& state, const ModelParams& p);

struct FDecomposition {
    double F_minus = 0;
    double F_plus = 0;
    double I = 0;
};

// F = F_minus + F_plus + I (exact algebraic identity).
FDecomposition decompose_F(const PhaseState& state, const ModelParams& p);

// W(x) = lambda1^2/4 (x^2 - sigma0^2)^2
double well_potential(double x, const ModelParams& p);

struct WellEnergies {
    double W = 0;
    double R = 0;
    double S = 0;
};

WellEnergies well_energies(const PhaseState& state, const ModelParams& p, double gamma1);

EnergyRecord energy_record(const PhaseState& state, double f_norm, const ModelParams& p,
                           double gamma1);
std::vector<EnergyRecord> energy_ledger(const Trajectory& traj, const Forcing& f,
                                        const ModelParams& p, double gamma1);

// Max over interior grid points of the centered-difference residual of
// E' = -|v|^2 + <v, f(t)>. The caller compares against a C dt^2 budget.
double certify_energy_identity(const Trajectory& traj, const Forcing& f, const ModelParams& p);

struct DissipationOptions {
    std::optional<double> gamma1;
    std::optional<double> beta1;
    std::optional<std::pair<double, double>> well_window;
};

// Certification report. Differential margins are min over interior grid
// points of (rhs - centered lhs'); static-bound margins are min over all
// samples of (quantity - bound). Negative values within slack_budget are
// discretization noise, anything below that is a genuine violation.
struct DissipationReport {
    double margin_F = 0;             // F' <= -gamma0 F + 2|f|^2
    double margin_F_minus = 0;       // first-component inequality
    double margin_F_plus = 0;        // high-frequency inequality
    double identity_I_residual = 0;  // max |I' - exact rhs|
    std::optional<double> margin_S;  // well inequality on the requested window

    double bound_F_minus = 0;              // F- >= l1^2/4 u1^4 - l1(l-l1)/2 u1^2
    double bound_F_plus = 0;               // F+ >= min{1/4, (l2-l)/(2 l2)} (...)
    std::optional<double> bound_R_state;   // R >= gamma1/4 (v1^2 + (u1-sigma0)^2)
    std::optional<double> bound_R_W;       // R >= W(u1)
    double bound_F_W = 0;                  // W(u1) <= F + W(0)
    bool well_trap_ok = true;              // S <= W(beta1), u1 >= 0  =>  in the well

    double dt = 0;
    double slack_budget = 0;  // 10 * C_fit * dt^2

    bool certified() const;
};

DissipationReport certify_dissipation(const Trajectory& traj, const Forcing& f,
                                      const ModelParams& p, DissipationOptions opt = {});

// Discretization budget constant, fitted once on stress runs and frozen.
inline constexpr double kDissipationBudgetC = 50.0;

}  // namespace duffing
