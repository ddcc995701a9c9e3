#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "duffing/spectral.hpp"

namespace duffing {

// One Fourier term of a periodic forcing: a cosine/sine pair on a single
// mode at harmonic `freq_index` of the base period.
struct FourierTerm {
    int freq_index = 0;  // j >= 0, angular frequency 2*pi*j / period
    int mode_index = 0;  // 0-based mode
    double cos_amp = 0;
    double sin_amp = 0;
};

enum class ForcingKind { Zero, Constant, PeriodicFourier, DecayingEnvelope, Sampled };

// Time-dependent coefficient-valued forcing f(t). All kinds evaluate for
// every t in R except Sampled, which is restricted to its sample range.
class Forcing {
public:
    static Forcing zero(std::size_t dim);
    static Forcing constant(Vec coeffs);
    static Forcing periodic_fourier(std::size_t dim, double period, std::vector<FourierTerm> terms);
    // base(t) * exp(-decay_rate * t)
    static Forcing decaying(Forcing base, double decay_rate);
    // Piecewise-linear interpolation of the samples; evaluation outside
    // [times.front(), times.back()] throws SampledOutOfRange.
    static Forcing sampled(std::vector<double> times, std::vector<Vec> values);

    std::size_t dim() const noexcept { return dim_; }
    ForcingKind kind() const noexcept { return kind_; }
    std::optional<double> period() const noexcept { return period_; }
    // Largest harmonic index present (PeriodicFourier only).
    int max_harmonic() const;

    void evaluate(double t, Vec& out) const;
    Vec evaluate(double t) const;
    double norm_at(double t) const;
    // Component on e1 and the H-norm of the complement part.
    void split_norms(double t, double& f1, double& f_plus_norm) const;

    Forcing negated() const;

private:
    Forcing() = default;

    struct SampledData {
        std::vector<double> times;
        std::vector<Vec> values;
    };

    ForcingKind kind_ = ForcingKind::Zero;
    std::size_t dim_ = 0;
    std::optional<double> period_;
    Vec constant_;
    std::vector<FourierTerm> terms_;
    double decay_rate_ = 0;
    std::shared_ptr<const Forcing> base_;
    std::shared_ptr<const SampledData> samples_;
};

}  // namespace duffing
