#include "duffing/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace duffing {

namespace {

using cplx = std::complex<double>;

constexpr double kWarmupDecades = 45.0;  // e^{-45} ~ 3e-20, below double noise

// Roots of s^2 + s + mu = 0, s_plus first (larger real part).
std::pair<cplx, cplx> characteristic_roots(double mu) {
    const cplx r = std::sqrt(cplx(1.0 - 4.0 * mu, 0.0));
    return {0.5 * (-1.0 + r), 0.5 * (-1.0 - r)};
}

// Window samples with the declared extension. Periodic extension treats the
// window as exactly one period with the endpoint sample duplicated.
struct ExtendedSeries {
    std::span<const double> h;
    Extension ext;

    double operator()(long i) const {
        const long n = static_cast<long>(h.size());
        if (i >= 0 && i < n) return h[static_cast<std::size_t>(i)];
        if (ext == Extension::Zero) return 0.0;
        const long per = n - 1;
        long j = ((i % per) + per) % per;
        return h[static_cast<std::size_t>(j)];
    }
};

// Trapezoid sum T_i = h_i/2 + sum_{j>=1} alpha^j h_{i-j}, computed by the
// scan T_i = h_i/2 + alpha (T_{i-1} + h_{i-1}/2). Exact geometric tails, so
// the only quadrature error is the O(dt^2) trapezoid term.
template <typename Getter>
std::vector<cplx> causal_scan(cplx alpha, long warmup, long n, const Getter& h) {
    std::vector<cplx> out(static_cast<std::size_t>(n));
    double prev = h(-warmup);
    cplx acc = 0.5 * prev;
    for (long i = -warmup + 1; i < n; ++i) {
        const double cur = h(i);
        acc = 0.5 * cur + alpha * (acc + 0.5 * prev);
        prev = cur;
        if (i >= 0) out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

template <typename Getter>
std::vector<cplx> anticausal_scan(cplx alpha, long warmup, long n, const Getter& h) {
    std::vector<cplx> out(static_cast<std::size_t>(n));
    double prev = h(n - 1 + warmup);
    cplx acc = 0.5 * prev;
    for (long i = n - 2 + warmup; i >= 0; --i) {
        const double cur = h(i);
        acc = 0.5 * cur + alpha * (acc + 0.5 * prev);
        prev = cur;
        if (i < n) out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

struct ScanSolution {
    std::vector<double> y, dy;
};

// mu < 0: G(xi) = -e^{s- xi}/(s+ - s-) for xi >= 0, -e^{s+ xi}/(s+ - s-)
// for xi < 0. Continuous at 0, derivative jump 1, the unique kernel whose
// convolution is bounded on R.
template <typename Getter>
ScanSolution dichotomy_apply(double mu, double dt, long n, const Getter& h) {
    const auto [sp, sm] = characteristic_roots(mu);
    const double s_plus = sp.real(), s_minus = sm.real();
    const double delta = s_plus - s_minus;
    const long warm_c = static_cast<long>(std::ceil(kWarmupDecades / (-s_minus * dt)));
    const long warm_a = static_cast<long>(std::ceil(kWarmupDecades / (s_plus * dt)));
    const auto T = causal_scan(cplx(std::exp(s_minus * dt), 0.0), warm_c, n, h);
    const auto U = anticausal_scan(cplx(std::exp(-s_plus * dt), 0.0), warm_a, n, h);
    ScanSolution out;
    out.y.resize(static_cast<std::size_t>(n));
    out.dy.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out.y[k] = -dt / delta * (T[k].real() + U[k].real());
        out.dy[k] = -dt / delta * (s_minus * T[k].real() + s_plus * U[k].real());
    }
    return out;
}

// mu > 0: causal kernel G(xi) = (e^{s+ xi} - e^{s- xi})/(s+ - s-), xi >= 0.
template <typename Getter>
ScanSolution coercive_apply(double mu, double dt, long n, const Getter& h) {
    const auto [sp, sm] = characteristic_roots(mu);
    const double rate = std::min(-sp.real(), -sm.real());
    const long warm = static_cast<long>(std::ceil(kWarmupDecades / (rate * dt)));
    const auto Tp = causal_scan(std::exp(sp * dt), warm, n, h);
    const auto Tm = causal_scan(std::exp(sm * dt), warm, n, h);
    const cplx delta = sp - sm;
    ScanSolution out;
    out.y.resize(static_cast<std::size_t>(n));
    out.dy.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out.y[k] = (dt * (Tp[k] - Tm[k]) / delta).real();
        out.dy[k] = (dt * (sp * Tp[k] - sm * Tm[k]) / delta).real();
    }
    return out;
}

double slowest_rate(double mu) {
    const auto [sp, sm] = characteristic_roots(mu);
    if (mu < 0.0) return std::min(-sm.real(), sp.real());
    return std::min(-sp.real(), -sm.real());
}

void validate_sigma(double sigma, const ModelParams& p) {
    const double tol = 1e-9 * std::max(1.0, p.sigma0);
    if (!(sigma == 0.0 || std::abs(std::abs(sigma) - p.sigma0) <= tol)) {
        throw Error("InvalidSigma", "sigma must be one of {-sigma0, 0, +sigma0}, got " +
                                        std::to_string(sigma));
    }
}

}  // namespace

LinearizedOperator linearize(double sigma, const ModelParams& p) {
    validate_sigma(sigma, p);
    const double l1 = p.op.lambda1();
    LinearizedOperator L;
    L.sigma = sigma;
    L.mu.resize(p.dim());
    if (sigma == 0.0) {
        for (std::size_t k = 0; k < p.dim(); ++k) {
            const double lk = p.op.eigenvalue(k);
            L.mu[k] = lk * lk - p.lambda * lk;
        }
    } else {
        L.mu[0] = 2.0 * l1 * (p.lambda - l1);
        for (std::size_t k = 1; k < p.dim(); ++k) {
            const double lk = p.op.eigenvalue(k);
            L.mu[k] = lk * lk - l1 * lk;
        }
    }
    L.coercivity = *std::min_element(L.mu.begin(), L.mu.end());
    return L;
}

Vec nonlinear_remainder(double sigma, const Vec& w, const ModelParams& p) {
    detail::require_dim(w.size(), p.dim(), "nonlinear_remainder");
    validate_sigma(sigma, p);
    const double l1 = p.op.lambda1();
    double s = 0;  // |A^{1/2} w|^2
    for (std::size_t j = 0; j < w.size(); ++j) s += p.op.eigenvalue(j) * w[j] * w[j];

    Vec g(w.size(), 0.0);
    if (sigma == 0.0) {
        for (std::size_t k = 0; k < w.size(); ++k) g[k] = -s * p.op.eigenvalue(k) * w[k];
        return g;
    }
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double lk = p.op.eigenvalue(k);
        g[k] = -2.0 * sigma * l1 * w[0] * lk * w[k] - s * lk * w[k];
    }
    g[0] -= sigma * l1 * s;
    return g;
}

PhaseState PeriodicSolution::evaluate(double t, const ModelParams& p) const {
    const std::size_t n = coeffs.size();
    detail::require_dim(n, p.dim(), "PeriodicSolution::evaluate");
    PhaseState out = zero_state(n);
    const int M = grid_size;
    for (std::size_t k = 0; k < n; ++k) {
        cplx w = 0, dw = 0;
        for (int j = 0; j < M; ++j) {
            const cplx c = coeffs[k][static_cast<std::size_t>(j)];
            if (c == cplx(0.0, 0.0)) continue;
            const int sj = (j <= M / 2) ? j : j - M;
            const double omega = 2.0 * std::numbers::pi * sj / period;
            const cplx phase = std::exp(cplx(0.0, omega * t));
            w += c * phase;
            dw += c * cplx(0.0, omega) * phase;
        }
        out.u[k] = w.real();
        out.v[k] = dw.real();
    }
    out.u[0] += sigma;
    return out;
}

PeriodicSolution solve_periodic(double sigma, const Forcing& f, const ModelParams& p,
                                double tol, int max_iter, const Vec* seed) {
    validate_sigma(sigma, p);
    detail::require_dim(f.dim(), p.dim(), "solve_periodic");
    if (f.kind() != ForcingKind::PeriodicFourier && f.kind() != ForcingKind::Zero) {
        throw ConfigParseError("solve_periodic needs a PeriodicFourier (or zero) forcing");
    }
    const double T = f.period().value_or(2.0 * std::numbers::pi);
    const LinearizedOperator L = linearize(sigma, p);
    for (std::size_t k = 0; k < L.mu.size(); ++k) {
        if (L.mu[k] == 0.0) {
            throw ZeroStiffnessMode("mu[" + std::to_string(k + 1) + "] = 0, K not invertible");
        }
    }

    // Band J covers the forcing exactly; the grid is padded so the cubic of a
    // band-limited iterate cannot alias back into the kept band.
    const int J = std::max(8, 2 * f.max_harmonic());
    int M = 1;
    while (M < 4 * J + 2) M *= 2;
    const std::size_t n = p.dim();
    const auto Ms = static_cast<std::size_t>(M);

    // DFT workspace: roots of unity.
    std::vector<cplx> unity(Ms);
    for (int j = 0; j < M; ++j) {
        unity[static_cast<std::size_t>(j)] =
            std::exp(cplx(0.0, 2.0 * std::numbers::pi * j / M));
    }
    auto dft = [&](const std::vector<double>& x, std::vector<cplx>& out) {
        for (int j = 0; j < M; ++j) {
            cplx acc = 0;
            for (int i = 0; i < M; ++i) {
                acc += x[static_cast<std::size_t>(i)] *
                       std::conj(unity[static_cast<std::size_t>((j * i) % M)]);
            }
            out[static_cast<std::size_t>(j)] = acc / static_cast<double>(M);
        }
    };
    auto idft = [&](const std::vector<cplx>& c, std::vector<double>& out) {
        for (int i = 0; i < M; ++i) {
            cplx acc = 0;
            for (int j = 0; j < M; ++j) {
                acc += c[static_cast<std::size_t>(j)] *
                       unity[static_cast<std::size_t>((j * i) % M)];
            }
            out[static_cast<std::size_t>(i)] = acc.real();
        }
    };

    std::vector<std::vector<cplx>> what(n, std::vector<cplx>(Ms, cplx(0, 0)));
    if (seed) {
        detail::require_dim(seed->size(), n, "solve_periodic (seed)");
        for (std::size_t k = 0; k < n; ++k) what[k][0] = (*seed)[k];
    }

    // Forcing samples per mode.
    std::vector<std::vector<double>> fsamp(n, std::vector<double>(Ms, 0.0));
    {
        Vec fbuf;
        for (int i = 0; i < M; ++i) {
            f.evaluate(T * i / M, fbuf);
            for (std::size_t k = 0; k < n; ++k) fsamp[k][static_cast<std::size_t>(i)] = fbuf[k];
        }
    }

    std::vector<std::vector<double>> wvals(n, std::vector<double>(Ms, 0.0));
    std::vector<std::vector<double>> hvals(n, std::vector<double>(Ms, 0.0));
    std::vector<cplx> spec(Ms);
    Vec wt(n), gt(n);

    double prev_diff = std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    int iter = 0;
    for (;; ++iter) {
        if (iter >= max_iter) {
            throw MaxIterExceeded("solve_periodic: no convergence after " +
                                  std::to_string(max_iter) + " iterations");
        }
        for (std::size_t k = 0; k < n; ++k) idft(what[k], wvals[k]);
        for (int i = 0; i < M; ++i) {
            for (std::size_t k = 0; k < n; ++k) wt[k] = wvals[k][static_cast<std::size_t>(i)];
            gt = nonlinear_remainder(sigma, wt, p);
            for (std::size_t k = 0; k < n; ++k) {
                hvals[k][static_cast<std::size_t>(i)] =
                    fsamp[k][static_cast<std::size_t>(i)] + gt[k];
            }
        }
        double diff = 0;
        bool finite = true;
        for (std::size_t k = 0; k < n; ++k) {
            dft(hvals[k], spec);
            for (int j = 0; j < M; ++j) {
                const int sj = (j <= M / 2) ? j : j - M;
                cplx next(0, 0);
                if (std::abs(sj) <= J) {
                    const double omega = 2.0 * std::numbers::pi * sj / T;
                    next = spec[static_cast<std::size_t>(j)] /
                           cplx(L.mu[k] - omega * omega, omega);
                }
                diff += std::abs(next - what[k][static_cast<std::size_t>(j)]);
                if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) finite = false;
                what[k][static_cast<std::size_t>(j)] = next;
            }
        }
        if (!finite) throw NonContraction("solve_periodic: iterates left the finite range");
        if (diff <= tol) break;
        if (diff > prev_diff) {
            if (++growth_streak >= 3) {
                throw NonContraction("solve_periodic: iterate distance grew 3 times in a row "
                                     "(forcing too large for the contraction ball)");
            }
        } else {
            growth_streak = 0;
        }
        prev_diff = diff;
    }

    PeriodicSolution sol;
    sol.sigma = sigma;
    sol.period = T;
    sol.harmonics = J;
    sol.grid_size = M;
    sol.coeffs = std::move(what);
    sol.iterations = iter + 1;

    // Residual of the reconstructed trig polynomial in the full equation,
    // measured on a refined grid.
    double res = 0;
    Vec fbuf;
    for (int i = 0; i < 2 * M; ++i) {
        const double t = T * i / (2 * M);
        const PhaseState st = sol.evaluate(t, p);
        // second derivative of w from the spectrum
        Vec wpp(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            cplx acc = 0;
            for (int j = 0; j < M; ++j) {
                const cplx c = sol.coeffs[k][static_cast<std::size_t>(j)];
                if (c == cplx(0.0, 0.0)) continue;
                const int sj = (j <= M / 2) ? j : j - M;
                const double omega = 2.0 * std::numbers::pi * sj / T;
                acc += c * (-omega * omega) * std::exp(cplx(0.0, omega * t));
            }
            wpp[k] = acc.real();
        }
        f.evaluate(t, fbuf);
        double s = 0;
        for (std::size_t j = 0; j < n; ++j) s += p.op.eigenvalue(j) * st.u[j] * st.u[j];
        double norm2 = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double lk = p.op.eigenvalue(k);
            const double r =
                wpp[k] + st.v[k] + lk * lk * st.u[k] - p.lambda * lk * st.u[k] +
                s * lk * st.u[k] - fbuf[k];
            norm2 += r * r;
        }
        res = std::max(res, std::sqrt(norm2));
    }
    sol.residual = res;

    sol.orbit.dt = T / M;
    sol.orbit.times.reserve(Ms + 1);
    sol.orbit.states.reserve(Ms + 1);
    for (int i = 0; i <= M; ++i) {
        const double t = T * i / M;
        sol.orbit.times.push_back(t);
        sol.orbit.states.push_back(sol.evaluate(t, p));
    }
    return sol;
}

std::vector<double> dichotomy_green_apply(double mu, std::span<const double> times,
                                          std::span<const double> h, Extension ext) {
    if (!(mu < 0.0)) {
        throw NonNegativeMu("dichotomy Green function needs mu < 0, got " + std::to_string(mu));
    }
    if (times.size() != h.size() || times.size() < 2) {
        throw GridMismatch("dichotomy_green_apply: times/h must match, length >= 2");
    }
    const double dt = times[1] - times[0];
    const ExtendedSeries series{h, ext};
    const auto sol = dichotomy_apply(mu, dt, static_cast<long>(h.size()), series);
    return sol.y;
}

ScalarBoundedSolution dichotomy_green_solve(double mu, double t0, double dt, std::size_t n,
                                            const std::function<double(double)>& h) {
    if (!(mu < 0.0)) {
        throw NonNegativeMu("dichotomy Green function needs mu < 0, got " + std::to_string(mu));
    }
    auto getter = [&](long i) { return h(t0 + static_cast<double>(i) * dt); };
    const auto sol = dichotomy_apply(mu, dt, static_cast<long>(n), getter);
    return ScalarBoundedSolution{sol.y, sol.dy};
}

BoundedSolution solve_bounded(double sigma, const Forcing& f, double t0, double t1, double dt,
                              const ModelParams& p, double tol, Extension ext, int max_iter) {
    validate_sigma(sigma, p);
    detail::require_dim(f.dim(), p.dim(), "solve_bounded");
    if (!(dt > 0.0) || !(t1 > t0)) throw Error("InvalidTimeGrid", "need dt > 0 and t1 > t0");
    const LinearizedOperator L = linearize(sigma, p);
    const std::size_t n = p.dim();

    double rate = std::numeric_limits<double>::infinity();
    for (double mu : L.mu) rate = std::min(rate, slowest_rate(mu));
    const double layer = 1.0 / rate;
    if (t1 - t0 < 10.0 * layer) {
        throw WindowTooShort("window " + std::to_string(t1 - t0) +
                             " shorter than 10 boundary layers (" + std::to_string(layer) + ")");
    }

    const auto steps = static_cast<std::size_t>(std::llround((t1 - t0) / dt));
    const std::size_t ns = steps + 1;
    std::vector<double> times(ns);
    for (std::size_t i = 0; i < ns; ++i) times[i] = t0 + static_cast<double>(i) * dt;

    // Forcing samples per mode.
    std::vector<std::vector<double>> fsamp(n, std::vector<double>(ns));
    {
        Vec fbuf;
        for (std::size_t i = 0; i < ns; ++i) {
            f.evaluate(times[i], fbuf);
            for (std::size_t k = 0; k < n; ++k) fsamp[k][i] = fbuf[k];
        }
    }

    std::vector<std::vector<double>> w(n, std::vector<double>(ns, 0.0));
    std::vector<std::vector<double>> dw(n, std::vector<double>(ns, 0.0));
    std::vector<std::vector<double>> h(n, std::vector<double>(ns));
    Vec wt(n), gt(n);

    double prev_diff = std::numeric_limits<double>::infinity();
    int growth_streak = 0;
    int iter = 0;
    for (;; ++iter) {
        if (iter >= max_iter) {
            throw MaxIterExceeded("solve_bounded: no convergence after " +
                                  std::to_string(max_iter) + " iterations");
        }
        for (std::size_t i = 0; i < ns; ++i) {
            for (std::size_t k = 0; k < n; ++k) wt[k] = w[k][i];
            gt = nonlinear_remainder(sigma, wt, p);
            for (std::size_t k = 0; k < n; ++k) h[k][i] = fsamp[k][i] + gt[k];
        }
        double diff = 0;
        bool finite = true;
        for (std::size_t k = 0; k < n; ++k) {
            const ExtendedSeries series{std::span<const double>(h[k]), ext};
            const ScanSolution sol =
                (L.mu[k] < 0.0) ? dichotomy_apply(L.mu[k], dt, static_cast<long>(ns), series)
                                : coercive_apply(L.mu[k], dt, static_cast<long>(ns), series);
            for (std::size_t i = 0; i < ns; ++i) {
                diff = std::max(diff, std::abs(sol.y[i] - w[k][i]));
                if (!std::isfinite(sol.y[i])) finite = false;
            }
            w[k] = sol.y;
            dw[k] = sol.dy;
        }
        if (!finite) throw NonContraction("solve_bounded: iterates left the finite range");
        if (diff <= tol) break;
        if (diff > prev_diff) {
            if (++growth_streak >= 3) {
                throw NonContraction("solve_bounded: iterate distance grew 3 times in a row");
            }
        } else {
            growth_streak = 0;
        }
        prev_diff = diff;
    }

    BoundedSolution out;
    out.boundary_layer = layer;
    out.iterations = iter + 1;
    out.traj.dt = dt;
    out.traj.times = times;
    out.traj.states.reserve(ns);
    for (std::size_t i = 0; i < ns; ++i) {
        PhaseState st = zero_state(n);
        for (std::size_t k = 0; k < n; ++k) {
            st.u[k] = w[k][i];
            st.v[k] = dw[k][i];
        }
        st.u[0] += sigma;
        out.traj.states.push_back(st);
    }

    // Interior residual via centered second differences, skipping two
    // boundary layers at each edge.
    const auto skip = static_cast<std::size_t>(std::ceil(2.0 * layer / dt));
    double res = 0;
    Vec fbuf;
    for (std::size_t i = std::max<std::size_t>(skip, 1); i + std::max<std::size_t>(skip, 1) < ns;
         ++i) {
        const PhaseState& st = out.traj.states[i];
        f.evaluate(times[i], fbuf);
        double s = 0;
        for (std::size_t j = 0; j < n; ++j) s += p.op.eigenvalue(j) * st.u[j] * st.u[j];
        double norm2 = 0;
        for (std::size_t k = 0; k < n; ++k) {
            const double lk = p.op.eigenvalue(k);
            const double wpp = (w[k][i + 1] - 2.0 * w[k][i] + w[k][i - 1]) / (dt * dt);
            const double r = wpp + st.v[k] + lk * lk * st.u[k] - p.lambda * lk * st.u[k] +
                             s * lk * st.u[k] - fbuf[k];
            norm2 += r * r;
        }
        res = std::max(res, std::sqrt(norm2));
    }
    out.residual_interior = res;
    return out;
}

}  // namespace duffing
