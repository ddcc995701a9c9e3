#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "duffing/basin.hpp"
#include "duffing/scenario.hpp"
#include "duffing/special.hpp"

namespace duffing {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// JSON has no inf/nan literals; nlohmann would emit them as null anyway,
// this just makes it explicit.
json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj,
                          const std::vector<EnergyRecord>& ledger, std::size_t n) {
    std::ofstream out(path);
    if (!out) throw Error("OutputWriteFailed", "cannot open " + path.string());
    out << "t";
    for (std::size_t k = 1; k <= n; ++k) out << ",u_" << k;
    for (std::size_t k = 1; k <= n; ++k) out << ",v_" << k;
    out << ",E,F,F_minus,F_plus,I,R,S,f_norm\n";
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out << fmt17(traj.times[i]);
        for (std::size_t k = 0; k < n; ++k) out << ',' << fmt17(traj.states[i].u[k]);
        for (std::size_t k = 0; k < n; ++k) out << ',' << fmt17(traj.states[i].v[k]);
        const EnergyRecord& r = ledger[i];
        out << ',' << fmt17(r.E) << ',' << fmt17(r.F) << ',' << fmt17(r.F_minus) << ','
            << fmt17(r.F_plus) << ',' << fmt17(r.I) << ',' << fmt17(r.R) << ',' << fmt17(r.S)
            << ',' << fmt17(r.f_norm) << '\n';
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("OutputWriteFailed", "cannot open " + path.string());
    out << j.dump(2) << '\n';
}

json state_json(const PhaseState& s) {
    return json{{"u", s.u}, {"v", s.v}};
}

const char* gate_name(TheoreticalGate g) {
    switch (g) {
        case TheoreticalGate::Unstable: return "unstable";
        case TheoreticalGate::StablePlus: return "stable_plus";
        case TheoreticalGate::StableMinus: return "stable_minus";
        default: return "none";
    }
}

json regime_json(const RegimeReport& rep) {
    return json{
        {"sigma", rep.sigma},
        {"tail_residual", rep.tail_residual},
        {"forcing_tail", rep.forcing_tail},
        {"margin_vs_linear_scaling", jnum(rep.margin_vs_linear_scaling)},
        {"certified", rep.certified},
        {"mode", rep.mode == ClassifierMode::Theoretical ? "theoretical" : "pragmatic"},
        {"gate", gate_name(rep.gate)},
        {"candidate_residuals",
         {rep.candidate_residuals[0], rep.candidate_residuals[1], rep.candidate_residuals[2]}},
    };
}

double resolve_gamma1(const Scenario& sc, const ModelParams& p) {
    if (sc.gamma1) return *sc.gamma1;
    return sc.beta ? regime_constants(p, *sc.beta).gamma1 : regime_constants(p).gamma1;
}

double sigma_value(const std::string& name, const ModelParams& p) {
    if (name == "minus") return -p.sigma0;
    if (name == "zero") return 0.0;
    return p.sigma0;
}

}  // namespace

int run_scenario(const std::string& subcommand, const Scenario& sc, const RunOptions& opt) {
    const ModelParams params = sc.make_model();
    const Forcing forcing = sc.make_forcing();
    const std::uint64_t seed = opt.seed_override.value_or(sc.seed);
    const std::filesystem::path out_dir(opt.out_dir);
    std::filesystem::create_directories(out_dir);
    const auto csv_path = out_dir / sc.trajectory_csv;
    const auto json_path = out_dir / sc.report_json;
    const double dt = sc.step(params);

    auto integrate_scenario = [&]() {
        IntegrateOptions io;
        io.record_every = sc.record_every;
        return integrate(sc.make_initial(params, seed), forcing, sc.t0, sc.t1, dt,
                         sc.make_method(), params, io);
    };
    auto log = [&](const std::string& msg) {
        if (!opt.quiet) std::cout << msg << '\n';
    };

    if (subcommand == "simulate") {
        const Trajectory traj = integrate_scenario();
        const double g1 = resolve_gamma1(sc, params);
        write_trajectory_csv(csv_path, traj, energy_ledger(traj, forcing, params, g1),
                             params.dim());
        log("wrote " + csv_path.string());
        return 0;
    }

    if (subcommand == "classify") {
        const Trajectory traj = integrate_scenario();
        const auto mode = sc.classifier_mode == "theoretical" ? ClassifierMode::Theoretical
                                                              : ClassifierMode::Pragmatic;
        const RegimeReport rep = classify(traj, forcing, params, mode, sc.window_fraction);
        json j = regime_json(rep);
        j["schema_version"] = 1;
        j["seed"] = seed;
        write_json(json_path, j);
        log("sigma = " + std::to_string(rep.sigma) + ", wrote " + json_path.string());
        return 0;
    }

    if (subcommand == "energies") {
        const Trajectory traj = integrate_scenario();
        const RegimeConstants rc =
            sc.beta ? regime_constants(params, *sc.beta) : regime_constants(params);
        const double g1 = sc.gamma1.value_or(rc.gamma1);
        write_trajectory_csv(csv_path, traj, energy_ledger(traj, forcing, params, g1),
                             params.dim());
        const double identity_residual = certify_energy_identity(traj, forcing, params);
        DissipationOptions dopt;
        dopt.gamma1 = g1;
        dopt.beta1 = rc.beta1;
        const DissipationReport rep = certify_dissipation(traj, forcing, params, dopt);
        json j{
            {"schema_version", 1},
            {"energy_identity_residual", identity_residual},
            {"gamma1", g1},
            {"beta1", rc.beta1},
            {"dissipation",
             {{"margin_F", jnum(rep.margin_F)},
              {"margin_F_minus", jnum(rep.margin_F_minus)},
              {"margin_F_plus", jnum(rep.margin_F_plus)},
              {"identity_I_residual", rep.identity_I_residual},
              {"bound_F_minus", jnum(rep.bound_F_minus)},
              {"bound_F_plus", jnum(rep.bound_F_plus)},
              {"bound_R_state", rep.bound_R_state ? jnum(*rep.bound_R_state) : json(nullptr)},
              {"bound_R_W", rep.bound_R_W ? jnum(*rep.bound_R_W) : json(nullptr)},
              {"bound_F_W", jnum(rep.bound_F_W)},
              {"well_trap_ok", rep.well_trap_ok},
              {"slack_budget", rep.slack_budget},
              {"certified", rep.certified()}}},
        };
        write_json(json_path, j);
        log("identity residual " + fmt17(identity_residual) + ", wrote " + json_path.string());
        return 0;
    }

    if (subcommand == "special") {
        const double sigma = sigma_value(sc.special_sigma, params);
        const PeriodicSolution sol =
            solve_periodic(sigma, forcing, params, sc.special_tol, sc.special_max_iter);
        const double g1 = resolve_gamma1(sc, params);
        write_trajectory_csv(csv_path, sol.orbit, energy_ledger(sol.orbit, forcing, params, g1),
                             params.dim());
        const PhaseState first = sol.orbit.front();
        const PhaseState last = sol.orbit.back();
        json j{
            {"schema_version", 1},
            {"sigma", sigma},
            {"period", sol.period},
            {"residual", sol.residual},
            {"harmonics", sol.harmonics},
            {"grid_size", sol.grid_size},
            {"iterations", sol.iterations},
            {"closure", phase_distance(first, last, params.op)},
        };
        write_json(json_path, j);
        log("residual " + fmt17(sol.residual) + ", wrote " + json_path.string() + " and " +
            csv_path.string());
        return 0;
    }

    if (subcommand == "basin") {
        const double horizon = sc.t1 - sc.t0;
        json j{{"schema_version", 1}, {"op", sc.basin_op}};
        if (sc.basin_op == "bisect") {
            const std::size_t n = params.dim();
            if (sc.basin_a_u.size() != n || sc.basin_b_u.size() != n) {
                throw ConfigParseError("[basin] a_u/b_u must have the model dimension");
            }
            PhaseState a{sc.basin_a_u, sc.basin_a_v.empty() ? Vec(n, 0.0) : sc.basin_a_v};
            PhaseState b{sc.basin_b_u, sc.basin_b_v.empty() ? Vec(n, 0.0) : sc.basin_b_v};
            const BisectionResult r =
                bisect_boundary(a, b, forcing, params, horizon, sc.width_tol, dt);
            j["endpoint_plus"] = state_json(r.endpoint_plus);
            j["endpoint_minus"] = state_json(r.endpoint_minus);
            j["boundary"] = state_json(r.boundary);
            j["width"] = r.width;
            j["sigma_plus"] = r.sigma_plus;
            j["sigma_minus"] = r.sigma_minus;
            j["boundary_dwell"] = r.boundary_dwell;
            j["boundary_tail_residual"] = r.boundary_tail_residual;
            j["steps"] = r.steps;
        } else if (sc.basin_op == "probe") {
            const PhaseState base = sc.make_initial(params, seed);
            const double fraction = openness_probe(base, sc.probe_radius, sc.probe_samples,
                                                   forcing, params, horizon, seed, dt);
            j["base"] = state_json(base);
            j["radius"] = sc.probe_radius;
            j["samples"] = sc.probe_samples;
            j["fraction"] = fraction;
        } else {
            const HeteroclinicReport r = heteroclinic_demo(params, horizon, sc.hetero_delta, dt);
            j["delta"] = r.delta;
            j["sigma_target"] = r.sigma_target;
            j["dwell_time"] = r.dwell_time;
            j["tail_residual_target"] = r.tail_residual_target;
            j["tail_residual_zero"] = r.tail_residual_zero;
        }
        write_json(json_path, j);
        log("wrote " + json_path.string());
        return 0;
    }

    if (subcommand == "lemma-check") {
        json cases = json::array();
        bool all_ok = true;
        for (const LemmaCase& c : lemma_oracle_suite()) {
            const OdeOracleReport ode =
                ode_limsup_oracle(c.m, [&c](double t) { return c.psi(t); }, sc.lemma_horizon,
                                  sc.lemma_dt);
            const Vec eigs{c.m, 4.0 * c.m + 3.0};
            const PdeOracleReport pde =
                pde_limsup_oracle(eigs, c.forcing(2, 0), sc.lemma_horizon, sc.lemma_dt);
            all_ok = all_ok && ode.ok && pde.ok;
            cases.push_back(json{
                {"name", c.name},
                {"m", c.m},
                {"ode_ok", ode.ok},
                {"ratio_y", jnum(ode.ratio_y)},
                {"ratio_dy", jnum(ode.ratio_dy)},
                {"bound_y", 1.0 / c.m},
                {"bound_dy", 2.0},
                {"pde_ok", pde.ok},
                {"pde_ratio", jnum(pde.ratio)},
                {"pde_bound_factor", 9.0 * std::max(1.0, 1.0 / c.m)},
            });
        }
        json j{{"schema_version", 1}, {"all_ok", all_ok}, {"cases", cases}};
        write_json(json_path, j);
        log(std::string("lemma oracles ") + (all_ok ? "passed" : "FAILED") + ", wrote " +
            json_path.string());
        return all_ok ? 0 : 1;
    }

    throw ConfigParseError("unknown subcommand '" + subcommand + "'");
}

}  // namespace duffing
