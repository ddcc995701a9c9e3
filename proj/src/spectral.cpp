#include "duffing/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace duffing {

namespace detail {
void require_dim(std::size_t got, std::size_t want, const char* where) {
    if (got != want) {
        throw DimensionMismatch(std::string(where) + ": got length " + std::to_string(got) +
                                ", operator has " + std::to_string(want) + " modes");
    }
}
}  // namespace detail

SpectralOperator make_operator(Vec eigenvalues) {
    if (eigenvalues.size() < 2) {
        throw TooFewModes("need at least 2 eigenvalues, got " + std::to_string(eigenvalues.size()));
    }
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        if (!(eigenvalues[k] > 0.0)) {
            throw NonPositiveEigenvalue("eigenvalue[" + std::to_string(k) + "] = " +
                                        std::to_string(eigenvalues[k]) + " is not positive");
        }
        if (k > 0 && !(eigenvalues[k] > eigenvalues[k - 1])) {
            throw NonIncreasingSpectrum("eigenvalues must be strictly increasing at index " +
                                        std::to_string(k));
        }
    }
    return SpectralOperator(std::move(eigenvalues));
}

ModelParams make_params(SpectralOperator op, double lambda) {
    const double l1 = op.lambda1();
    const double l2 = op.lambda2();
    if (!(lambda > l1 && lambda < l2)) {
        throw LambdaOutOfGap("lambda = " + std::to_string(lambda) + " not in (" +
                             std::to_string(l1) + ", " + std::to_string(l2) + ")");
    }
    ModelParams p{std::move(op), lambda, 0.0, 0.0};
    p.sigma0 = std::sqrt((lambda - l1) / l1);
    p.gamma0 = 0.125 * std::min({1.0, l1 * (lambda - l1), l2 * (l2 - lambda)});
    if (!(p.sigma0 > 0.0 && p.gamma0 > 0.0 && p.gamma0 <= 0.125)) {
        throw Error("DerivedConstantOutOfRange",
                    "sigma0/gamma0 left their admissible range; inputs are degenerate");
    }
    return p;
}

PhaseState zero_state(std::size_t dim) { return PhaseState{Vec(dim, 0.0), Vec(dim, 0.0)}; }

double norm_h(std::span<const double> x) {
    double s = 0;
    for (double xi : x) s += xi * xi;
    return std::sqrt(s);
}

double norm_ahalf(std::span<const double> x, const SpectralOperator& op) {
    detail::require_dim(x.size(), op.size(), "norm_ahalf");
    double s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) s += op.eigenvalue(k) * x[k] * x[k];
    return std::sqrt(s);
}

double norm_a(std::span<const double> x, const SpectralOperator& op) {
    detail::require_dim(x.size(), op.size(), "norm_a");
    double s = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double lk = op.eigenvalue(k);
        s += lk * lk * x[k] * x[k];
    }
    return std::sqrt(s);
}

double inner(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

StateNorms norms(const PhaseState& state, const SpectralOperator& op) {
    detail::require_dim(state.u.size(), op.size(), "norms");
    detail::require_dim(state.v.size(), op.size(), "norms");
    return StateNorms{norm_h(state.u), norm_ahalf(state.u, op), norm_a(state.u, op),
                      norm_h(state.v)};
}

Vec apply_P(const Vec& u) {
    Vec out = u;
    if (!out.empty()) out[0] /= 6.0;
    return out;
}

double inner_P(std::span<const double> a, std::span<const double> b) {
    if (a.empty()) return 0.0;
    double s = a[0] * b[0] / 6.0;
    for (std::size_t k = 1; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

double phase_distance(const PhaseState& a, const PhaseState& b, const SpectralOperator& op) {
    detail::require_dim(a.u.size(), op.size(), "phase_distance");
    detail::require_dim(b.u.size(), op.size(), "phase_distance");
    double s = 0;
    for (std::size_t k = 0; k < op.size(); ++k) {
        const double lk = op.eigenvalue(k);
        const double du = lk * (a.u[k] - b.u[k]);
        const double dv = a.v[k] - b.v[k];
        s += du * du + dv * dv;
    }
    return std::sqrt(s);
}

double equilibrium_residual(const PhaseState& state, double sigma, const SpectralOperator& op) {
    double sa = 0, sv = 0;
    for (std::size_t k = 0; k < op.size(); ++k) {
        const double lk = op.eigenvalue(k);
        const double uk = (k == 0) ? state.u[k] - sigma : state.u[k];
        sa += lk * lk * uk * uk;
        sv += state.v[k] * state.v[k];
    }
    return std::sqrt(sv) + std::sqrt(sa);
}

PhaseState random_state(SeededRng& rng, const SpectralOperator& op, double norm_bound) {
    const std::size_t n = op.size();
    PhaseState s{rng.gaussian_vec(n), rng.gaussian_vec(n)};
    const double r = rng.uniform01();
    double cur = phase_distance(s, zero_state(n), op);
    if (cur == 0.0) return zero_state(n);
    const double scale =
        norm_bound * std::pow(r, 1.0 / static_cast<double>(2 * n)) / cur;
    for (auto& x : s.u) x *= scale;
    for (auto& x : s.v) x *= scale;
    return s;
}

}  // namespace duffing
