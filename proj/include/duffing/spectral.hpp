#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "duffing/errors.hpp"
#include "duffing/rng.hpp"

namespace duffing {

using Vec = std::vector<double>;

// Diagonal positive operator with a simple lowest eigenvalue and a spectral
// gap above it: 0 < lambda1 < lambda2 <= lambda3 <= ... (strictly increasing
// here; repeated higher eigenvalues are out of scope). The first coordinate
// direction of every coefficient array is the distinguished eigenvector e1.
class SpectralOperator {
public:
    std::size_t size() const noexcept { return eigenvalues_.size(); }
    double eigenvalue(std::size_t k) const { return eigenvalues_[k]; }
    double lambda1() const { return eigenvalues_[0]; }
    double lambda2() const { return eigenvalues_[1]; }
    double lambda_max() const { return eigenvalues_.back(); }
    const Vec& eigenvalues() const noexcept { return eigenvalues_; }

private:
    friend SpectralOperator make_operator(Vec eigenvalues);
    explicit SpectralOperator(Vec eigenvalues) : eigenvalues_(std::move(eigenvalues)) {}

    Vec eigenvalues_;
};

// Validates positivity, strict monotonicity and N >= 2.
SpectralOperator make_operator(Vec eigenvalues);

// Model parameters with the two derived structural constants:
//   sigma0 = sqrt((lambda - lambda1) / lambda1)      amplitude of the stable equilibria
//   gamma0 = (1/8) min{1, lambda1(lambda - lambda1), lambda2(lambda2 - lambda)}
struct ModelParams {
    SpectralOperator op;
    double lambda = 0;
    double sigma0 = 0;
    double gamma0 = 0;

    std::size_t dim() const noexcept { return op.size(); }
};

// Requires lambda1 < lambda < lambda2.
ModelParams make_params(SpectralOperator op, double lambda);

// Point of the phase space D(A) x H in the eigenbasis.
struct PhaseState {
    Vec u;
    Vec v;
};

PhaseState zero_state(std::size_t dim);

struct StateNorms {
    double u = 0;       // |u|
    double u_half = 0;  // |A^{1/2} u|
    double u_a = 0;     // |A u|
    double v = 0;       // |v|
};

StateNorms norms(const PhaseState& state, const SpectralOperator& op);

// Weighted l2 sums realizing the H, A^{1/2} and A norms.
double norm_h(std::span<const double> x);
double norm_ahalf(std::span<const double> x, const SpectralOperator& op);
double norm_a(std::span<const double> x, const SpectralOperator& op);
double inner(std::span<const double> a, std::span<const double> b);

// The correction operator: P e1 = e1/6, identity on the complement.
Vec apply_P(const Vec& u);
double inner_P(std::span<const double> a, std::span<const double> b);

// sqrt(|A(u_a - u_b)|^2 + |v_a - v_b|^2), the D(A) x H distance.
double phase_distance(const PhaseState& a, const PhaseState& b, const SpectralOperator& op);

// |v| + |A(u - sigma e1)|, the residual metric of the regime classifier.
double equilibrium_residual(const PhaseState& state, double sigma, const SpectralOperator& op);

// State drawn from the D(A) x H ball of the given radius: gaussian direction,
// radius scaled by U^{1/(2N)}. Deterministic for a fixed rng stream.
PhaseState random_state(SeededRng& rng, const SpectralOperator& op, double norm_bound);

namespace detail {
void require_dim(std::size_t got, std::size_t want, const char* where);
}

}  // namespace duffing
