#pragma once

#include <cmath>
#include <numbers>

#include "duffing/basin.hpp"
#include "duffing/special.hpp"

namespace duffing::testing {

// The canonical desk-scale configuration: lambda_k = k^2, lambda = 2,
// so sigma0 = 1 and gamma0 = 1/8.
inline ModelParams canon() { return make_params(make_operator({1, 4, 9, 16}), 2.0); }

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline PhaseState canon_state(Vec u, Vec v) { return PhaseState{std::move(u), std::move(v)}; }

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace duffing::testing
