#include "duffing/forcing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace duffing {

Forcing Forcing::zero(std::size_t dim) {
    Forcing f;
    f.kind_ = ForcingKind::Zero;
    f.dim_ = dim;
    return f;
}

Forcing Forcing::constant(Vec coeffs) {
    Forcing f;
    f.kind_ = ForcingKind::Constant;
    f.dim_ = coeffs.size();
    f.constant_ = std::move(coeffs);
    return f;
}

Forcing Forcing::periodic_fourier(std::size_t dim, double period, std::vector<FourierTerm> terms) {
    if (!(period > 0.0)) throw ConfigParseError("periodic forcing needs period > 0");
    for (const auto& t : terms) {
        if (t.freq_index < 0) throw ConfigParseError("negative frequency index in forcing term");
        if (t.mode_index < 0 || static_cast<std::size_t>(t.mode_index) >= dim) {
            throw DimensionMismatch("forcing term mode index " + std::to_string(t.mode_index) +
                                    " out of range for dim " + std::to_string(dim));
        }
    }
    Forcing f;
    f.kind_ = ForcingKind::PeriodicFourier;
    f.dim_ = dim;
    f.period_ = period;
    f.terms_ = std::move(terms);
    return f;
}

Forcing Forcing::decaying(Forcing base, double decay_rate) {
    Forcing f;
    f.kind_ = ForcingKind::DecayingEnvelope;
    f.dim_ = base.dim();
    f.decay_rate_ = decay_rate;
    f.base_ = std::make_shared<const Forcing>(std::move(base));
    return f;
}

Forcing Forcing::sampled(std::vector<double> times, std::vector<Vec> values) {
    if (times.size() < 2 || times.size() != values.size()) {
        throw ConfigParseError("sampled forcing needs matching times/values, at least 2 samples");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1])) throw ConfigParseError("sampled forcing times must increase");
    }
    const std::size_t dim = values.front().size();
    for (const auto& v : values) {
        if (v.size() != dim) throw DimensionMismatch("sampled forcing values have mixed lengths");
    }
    Forcing f;
    f.kind_ = ForcingKind::Sampled;
    f.dim_ = dim;
    auto data = std::make_shared<Forcing::SampledData>();
    data->times = std::move(times);
    data->values = std::move(values);
    f.samples_ = std::move(data);
    return f;
}

int Forcing::max_harmonic() const {
    int j = 0;
    for (const auto& t : terms_) j = std::max(j, t.freq_index);
    if (kind_ == ForcingKind::DecayingEnvelope && base_) return base_->max_harmonic();
    return j;
}

void Forcing::evaluate(double t, Vec& out) const {
    out.assign(dim_, 0.0);
    switch (kind_) {
        case ForcingKind::Zero:
            break;
        case ForcingKind::Constant:
            out = constant_;
            break;
        case ForcingKind::PeriodicFourier: {
            // reduce the argument first so evaluate(t + T) == evaluate(t)
            // whenever t and t + T are exactly representable
            const double tm = std::fmod(t, *period_);
            const double w0 = 2.0 * std::numbers::pi / *period_;
            for (const auto& term : terms_) {
                const double phase = w0 * static_cast<double>(term.freq_index) * tm;
                out[static_cast<std::size_t>(term.mode_index)] +=
                    term.cos_amp * std::cos(phase) + term.sin_amp * std::sin(phase);
            }
            break;
        }
        case ForcingKind::DecayingEnvelope: {
            base_->evaluate(t, out);
            const double env = std::exp(-decay_rate_ * t);
            for (auto& x : out) x *= env;
            break;
        }
        case ForcingKind::Sampled: {
            const auto& ts = samples_->times;
            if (t < ts.front() || t > ts.back()) {
                throw SampledOutOfRange("t = " + std::to_string(t) + " outside [" +
                                        std::to_string(ts.front()) + ", " +
                                        std::to_string(ts.back()) + "]");
            }
            auto it = std::upper_bound(ts.begin(), ts.end(), t);
            std::size_t hi = std::min<std::size_t>(
                static_cast<std::size_t>(it - ts.begin()), ts.size() - 1);
            if (hi == 0) hi = 1;
            const std::size_t lo = hi - 1;
            const double w = (t - ts[lo]) / (ts[hi] - ts[lo]);
            const Vec& a = samples_->values[lo];
            const Vec& b = samples_->values[hi];
            for (std::size_t k = 0; k < dim_; ++k) out[k] = (1.0 - w) * a[k] + w * b[k];
            break;
        }
    }
}

Vec Forcing::evaluate(double t) const {
    Vec out;
    evaluate(t, out);
    return out;
}

double Forcing::norm_at(double t) const {
    if (kind_ == ForcingKind::Zero) return 0.0;
    Vec buf;
    evaluate(t, buf);
    return norm_h(buf);
}

void Forcing::split_norms(double t, double& f1, double& f_plus_norm) const {
    if (kind_ == ForcingKind::Zero) {
        f1 = 0.0;
        f_plus_norm = 0.0;
        return;
    }
    Vec buf;
    evaluate(t, buf);
    f1 = buf.empty() ? 0.0 : buf[0];
    double s = 0;
    for (std::size_t k = 1; k < buf.size(); ++k) s += buf[k] * buf[k];
    f_plus_norm = std::sqrt(s);
}

Forcing Forcing::negated() const {
    Forcing f = *this;
    switch (kind_) {
        case ForcingKind::Zero:
            break;
        case ForcingKind::Constant:
            for (auto& x : f.constant_) x = -x;
            break;
        case ForcingKind::PeriodicFourier:
            for (auto& t : f.terms_) {
                t.cos_amp = -t.cos_amp;
                t.sin_amp = -t.sin_amp;
            }
            break;
        case ForcingKind::DecayingEnvelope:
            f.base_ = std::make_shared<const Forcing>(base_->negated());
            break;
        case ForcingKind::Sampled: {
            auto data = std::make_shared<SampledData>(*samples_);
            for (auto& v : data->values)
                for (auto& x : v) x = -x;
            f.samples_ = std::move(data);
            break;
        }
    }
    return f;
}

}  // namespace duffing
