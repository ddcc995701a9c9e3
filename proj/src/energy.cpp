#include "duffing/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace duffing {

namespace {

// Scalars entering the split energies, computed once per sample.
struct SplitQuantities {
    double u1 = 0, v1 = 0;
    double up_h2 = 0;     // |u+|^2
    double up_half2 = 0;  // |A^{1/2} u+|^2
    double up_a2 = 0;     // |A u+|^2
    double vp_h2 = 0;     // |v+|^2
    double up_vp = 0;     // <u+, v+>
    double aup_vp = 0;    // <A u+, v+>
};

SplitQuantities split(const PhaseState& s, const ModelParams& p) {
    SplitQuantities q;
    q.u1 = s.u[0];
    q.v1 = s.v[0];
    for (std::size_t k = 1; k < p.dim(); ++k) {
        const double lk = p.op.eigenvalue(k);
        q.up_h2 += s.u[k] * s.u[k];
        q.up_half2 += lk * s.u[k] * s.u[k];
        q.up_a2 += lk * lk * s.u[k] * s.u[k];
        q.vp_h2 += s.v[k] * s.v[k];
        q.up_vp += s.u[k] * s.v[k];
        q.aup_vp += lk * s.u[k] * s.v[k];
    }
    return q;
}

double uniform_dt(const Trajectory& traj, const char* where) {
    if (traj.size() < 2) throw NonUniformGrid(std::string(where) + ": need at least 2 samples");
    const double dt = traj.times[1] - traj.times[0];
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const double step = traj.times[i + 1] - traj.times[i];
        if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt))) {
            throw NonUniformGrid(std::string(where) + ": non-uniform step at index " +
                                 std::to_string(i));
        }
    }
    return dt;
}

}  // namespace

double classical_energy(const PhaseState& state, const ModelParams& p) {
    detail::require_dim(state.u.size(), p.dim(), "classical_energy");
    detail::require_dim(state.v.size(), p.dim(), "classical_energy");
    const StateNorms n = norms(state, p.op);
    const double half2 = n.u_half * n.u_half;
    return 0.5 * n.v * n.v + 0.5 * n.u_a * n.u_a - 0.5 * p.lambda * half2 + 0.25 * half2 * half2;
}

double corrected_energy(const PhaseState& state, const ModelParams& p) {
    const double E = classical_energy(state, p);
    return E + 2.0 * p.gamma0 * inner_P(state.u, state.v) + p.gamma0 * inner_P(state.u, state.u);
}

FDecomposition decompose_F(const PhaseState& state, const ModelParams& p) {
    detail::require_dim(state.u.size(), p.dim(), "decompose_F");
    detail::require_dim(state.v.size(), p.dim(), "decompose_F");
    const SplitQuantities q = split(state, p);
    const double l1 = p.op.lambda1();
    const double g0 = p.gamma0;

    FDecomposition d;
    d.F_minus = 0.5 * q.v1 * q.v1 - 0.5 * l1 * (p.lambda - l1) * q.u1 * q.u1 +
                0.25 * l1 * l1 * q.u1 * q.u1 * q.u1 * q.u1 + g0 / 3.0 * q.u1 * q.v1 +
                g0 / 6.0 * q.u1 * q.u1;
    d.F_plus = 0.5 * q.vp_h2 + 0.5 * q.up_a2 - 0.5 * p.lambda * q.up_half2 +
               0.25 * q.up_half2 * q.up_half2 + 2.0 * g0 * q.up_vp + g0 * q.up_h2;
    d.I = 0.5 * l1 * q.u1 * q.u1 * q.up_half2;
    return d;
}

double well_potential(double x, const ModelParams& p) {
    const double l1 = p.op.lambda1();
    const double d = x * x - p.sigma0 * p.sigma0;
    return 0.25 * l1 * l1 * d * d;
}

WellEnergies well_energies(const PhaseState& state, const ModelParams& p, double gamma1) {
    const FDecomposition d = decompose_F(state, p);
    const double u1 = state.u[0], v1 = state.v[0];
    WellEnergies w;
    w.W = well_potential(u1, p);
    w.R = 0.5 * v1 * v1 + w.W + gamma1 * (u1 - p.sigma0) * v1 +
          0.5 * gamma1 * (u1 - p.sigma0) * (u1 - p.sigma0);
    w.S = w.R + d.F_plus + d.I;
    return w;
}

EnergyRecord energy_record(const PhaseState& state, double f_norm, const ModelParams& p,
                           double gamma1) {
    EnergyRecord r;
    r.E = classical_energy(state, p);
    const FDecomposition d = decompose_F(state, p);
    r.F_minus = d.F_minus;
    r.F_plus = d.F_plus;
    r.I = d.I;
    r.F = d.F_minus + d.F_plus + d.I;
    const WellEnergies w = well_energies(state, p, gamma1);
    r.R = w.R;
    r.S = w.S;
    r.f_norm = f_norm;
    return r;
}

std::vector<EnergyRecord> energy_ledger(const Trajectory& traj, const Forcing& f,
                                        const ModelParams& p, double gamma1) {
    std::vector<EnergyRecord> out;
    out.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out.push_back(energy_record(traj.states[i], f.norm_at(traj.times[i]), p, gamma1));
    }
    return out;
}

double certify_energy_identity(const Trajectory& traj, const Forcing& f, const ModelParams& p) {
    if (traj.size() < 3) throw NonUniformGrid("certify_energy_identity: need >= 3 samples");
    const double dt = uniform_dt(traj, "certify_energy_identity");

    std::vector<double> E(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) E[i] = classical_energy(traj.states[i], p);

    double max_residual = 0;
    Vec fbuf;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const double dE = (E[i + 1] - E[i - 1]) / (2.0 * dt);
        f.evaluate(traj.times[i], fbuf);
        const PhaseState& s = traj.states[i];
        const double expected = -inner(s.v, s.v) + inner(s.v, fbuf);
        max_residual = std::max(max_residual, std::abs(dE - expected));
    }
    return max_residual;
}

bool DissipationReport::certified() const {
    const double budget = slack_budget;
    bool ok = margin_F >= -budget && margin_F_minus >= -budget && margin_F_plus >= -budget &&
              identity_I_residual <= budget && bound_F_minus >= -budget &&
              bound_F_plus >= -budget && bound_F_W >= -budget && well_trap_ok;
    if (margin_S) ok = ok && *margin_S >= -budget;
    if (bound_R_state) ok = ok && *bound_R_state >= -budget;
    if (bound_R_W) ok = ok && *bound_R_W >= -budget;
    return ok;
}

DissipationReport certify_dissipation(const Trajectory& traj, const Forcing& f,
                                      const ModelParams& p, DissipationOptions opt) {
    if (traj.size() < 3) throw NonUniformGrid("certify_dissipation: need >= 3 samples");
    const double dt = uniform_dt(traj, "certify_dissipation");
    const double l1 = p.op.lambda1();
    const double l2 = p.op.lambda2();
    const double g0 = p.gamma0;
    const double fp_const = std::min(0.25, (l2 - p.lambda) / (2.0 * l2));

    const bool with_well = opt.gamma1.has_value();
    const double g1 = opt.gamma1.value_or(0.0);
    if (opt.well_window && (!opt.gamma1 || !opt.beta1)) {
        throw WellAssumptionViolated("well_window requires gamma1 and beta1");
    }

    const std::size_t n_samp = traj.size();
    std::vector<double> Fv(n_samp), Fm(n_samp), Fp(n_samp), Iv(n_samp), Sv(n_samp);
    std::vector<SplitQuantities> qs(n_samp);
    std::vector<double> f1(n_samp), fplus(n_samp), fnorm2(n_samp);
    for (std::size_t i = 0; i < n_samp; ++i) {
        const PhaseState& s = traj.states[i];
        detail::require_dim(s.u.size(), p.dim(), "certify_dissipation");
        qs[i] = split(s, p);
        const FDecomposition d = decompose_F(s, p);
        Fm[i] = d.F_minus;
        Fp[i] = d.F_plus;
        Iv[i] = d.I;
        Fv[i] = d.F_minus + d.F_plus + d.I;
        if (with_well) Sv[i] = well_energies(s, p, g1).S;
        f.split_norms(traj.times[i], f1[i], fplus[i]);
        fnorm2[i] = f1[i] * f1[i] + fplus[i] * fplus[i];
    }

    DissipationReport rep;
    rep.dt = dt;
    rep.slack_budget = 10.0 * kDissipationBudgetC * dt * dt;
    double inf = std::numeric_limits<double>::infinity();
    rep.margin_F = rep.margin_F_minus = rep.margin_F_plus = inf;
    rep.bound_F_minus = rep.bound_F_plus = rep.bound_F_W = inf;
    rep.identity_I_residual = 0;
    if (with_well) rep.bound_R_state = rep.bound_R_W = inf;
    if (opt.well_window) rep.margin_S = inf;

    const double W0 = well_potential(0.0, p);
    const double sqrt2_s0 = std::sqrt(2.0) * p.sigma0;
    const double Wb1 = opt.beta1 ? well_potential(*opt.beta1, p) : 0.0;

    for (std::size_t i = 0; i < n_samp; ++i) {
        const SplitQuantities& q = qs[i];
        // static lower bounds, valid pointwise on any state
        rep.bound_F_minus = std::min(
            rep.bound_F_minus, Fm[i] - (0.25 * l1 * l1 * q.u1 * q.u1 * q.u1 * q.u1 -
                                        0.5 * l1 * (p.lambda - l1) * q.u1 * q.u1));
        rep.bound_F_plus =
            std::min(rep.bound_F_plus, Fp[i] - fp_const * (q.vp_h2 + q.up_a2));
        const double Wu1 = well_potential(q.u1, p);
        rep.bound_F_W = std::min(rep.bound_F_W, Fv[i] + W0 - Wu1);
        if (with_well) {
            const WellEnergies w = well_energies(traj.states[i], p, g1);
            rep.bound_R_state = std::min(
                *rep.bound_R_state,
                w.R - 0.25 * g1 * (q.v1 * q.v1 + (q.u1 - p.sigma0) * (q.u1 - p.sigma0)));
            rep.bound_R_W = std::min(*rep.bound_R_W, w.R - Wu1);
            if (opt.beta1 && Sv[i] <= Wb1 && q.u1 >= 0.0) {
                if (!(q.u1 >= *opt.beta1 && q.u1 <= sqrt2_s0)) rep.well_trap_ok = false;
            }
        }
    }

    for (std::size_t i = 1; i + 1 < n_samp; ++i) {
        const SplitQuantities& q = qs[i];
        const double dF = (Fv[i + 1] - Fv[i - 1]) / (2.0 * dt);
        const double dFm = (Fm[i + 1] - Fm[i - 1]) / (2.0 * dt);
        const double dFp = (Fp[i + 1] - Fp[i - 1]) / (2.0 * dt);
        const double dI = (Iv[i + 1] - Iv[i - 1]) / (2.0 * dt);

        rep.margin_F = std::min(rep.margin_F, (-g0 * Fv[i] + 2.0 * fnorm2[i]) - dF);
        const double coupling_minus = l1 * q.up_half2 * q.u1 * q.v1;
        rep.margin_F_minus = std::min(
            rep.margin_F_minus, (-g0 * Fm[i] + 2.0 * f1[i] * f1[i] - coupling_minus) - dFm);
        const double coupling_plus = l1 * q.aup_vp * q.u1 * q.u1;
        rep.margin_F_plus = std::min(
            rep.margin_F_plus,
            (-g0 * Fp[i] - 0.25 * q.vp_h2 - (l2 - p.lambda) / l2 * g0 * q.up_a2 +
             2.0 * fplus[i] * fplus[i] - coupling_plus - 4.0 * g0 * Iv[i]) -
                dFp);
        rep.identity_I_residual =
            std::max(rep.identity_I_residual, std::abs(dI - (coupling_plus + coupling_minus)));

        if (opt.well_window && traj.times[i] >= opt.well_window->first &&
            traj.times[i] <= opt.well_window->second) {
            if (!(q.u1 >= *opt.beta1 && q.u1 <= sqrt2_s0)) {
                throw WellAssumptionViolated(
                    "u1 = " + std::to_string(q.u1) + " at t = " + std::to_string(traj.times[i]) +
                    " outside [beta1, sqrt(2) sigma0]");
            }
            const double dS = (Sv[i + 1] - Sv[i - 1]) / (2.0 * dt);
            rep.margin_S = std::min(*rep.margin_S, (-g1 * g1 * Sv[i] + 2.0 * fnorm2[i]) - dS);
        }
    }
    return rep;
}

}  // namespace duffing
