#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "duffing/dynamics.hpp"

namespace duffing {

// Parsed scenario file: a flat, sectioned key = value format (see README
// for the full key list). Parsing validates everything it can without
// running; field errors carry the offending line number.
struct Scenario {
    int schema_version = 1;

    // [model]
    Vec eigenvalues;
    double lambda = 0;

    // [forcing]
    std::string forcing_kind = "zero";
    Vec forcing_coeffs;
    double forcing_period = 0;
    std::vector<FourierTerm> forcing_terms;
    std::string forcing_base_kind;  // decaying envelope base
    double decay_rate = 0;
    std::vector<std::pair<double, Vec>> forcing_samples;

    // [initial]
    std::string initial_kind = "equilibrium";
    std::string equilibrium_name = "plus";
    Vec initial_u, initial_v;
    std::uint64_t seed = 0;
    double norm_bound = 1.0;

    // [integration]
    double t0 = 0;
    double t1 = 0;
    std::optional<double> dt;  // default: 0.5 / lambda_N^2
    std::string method = "rk4";
    int record_every = 1;

    // [analysis]
    double window_fraction = 0.5;
    std::string classifier_mode = "pragmatic";
    std::optional<double> beta;
    std::optional<double> gamma1;

    // [special]
    std::string special_sigma = "plus";
    double special_tol = 1e-12;
    int special_max_iter = 200;

    // [basin]
    std::string basin_op = "bisect";
    Vec basin_a_u, basin_a_v, basin_b_u, basin_b_v;
    double width_tol = 1e-10;
    double probe_radius = 1e-6;
    int probe_samples = 20;
    double hetero_delta = 1e-8;

    // [lemma]
    double lemma_horizon = 60.0;
    double lemma_dt = 5e-3;

    // [output]
    std::string trajectory_csv = "trajectory.csv";
    std::string report_json = "report.json";

    ModelParams make_model() const;
    Forcing make_forcing() const;
    PhaseState make_initial(const ModelParams& p, std::uint64_t seed_value) const;
    Method make_method() const;
    double step(const ModelParams& p) const;
};

Scenario parse_scenario_text(const std::string& text, const std::string& origin);
Scenario parse_scenario_file(const std::string& path);

struct RunOptions {
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed_override;
    bool quiet = false;
};

// Dispatch for the CLI subcommands: simulate | classify | energies |
// special | basin | lemma-check. Writes the artifacts named in [output]
// under out_dir and returns 0; module errors propagate as typed Errors.
int run_scenario(const std::string& subcommand, const Scenario& sc, const RunOptions& opt);

}  // namespace duffing
