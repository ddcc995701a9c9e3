#include "duffing/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace duffing {

namespace {

struct Cursor {
    std::string origin;
    int line = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigParseError(origin + ":" + std::to_string(line) + ": " + msg);
    }
};

double parse_double(const std::string& s, const Cursor& at) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) at.fail("trailing characters in number '" + s + "'");
        return v;
    } catch (const ConfigParseError&) {
        throw;
    } catch (const std::exception&) {
        at.fail("cannot parse number '" + s + "'");
    }
}

long parse_int(const std::string& s, const Cursor& at) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos != s.size()) at.fail("trailing characters in integer '" + s + "'");
        return v;
    } catch (const ConfigParseError&) {
        throw;
    } catch (const std::exception&) {
        at.fail("cannot parse integer '" + s + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

Vec parse_vec(const std::string& s, const Cursor& at) {
    Vec out;
    for (const auto& tok : split_ws(s)) out.push_back(parse_double(tok, at));
    if (out.empty()) at.fail("expected a list of numbers");
    return out;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

Scenario parse_scenario_text(const std::string& text, const std::string& origin) {
    Scenario sc;
    Cursor at{origin, 0};
    std::string section;
    bool have_version = false, have_eigenvalues = false, have_lambda = false, have_t1 = false;

    std::istringstream stream(text);
    std::string raw;
    while (std::getline(stream, raw)) {
        ++at.line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') at.fail("unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "model" && section != "forcing" && section != "initial" &&
                section != "integration" && section != "analysis" && section != "special" &&
                section != "basin" && section != "lemma" && section != "output") {
                at.fail("unknown section [" + section + "]");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) at.fail("expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) at.fail("empty key or value");

        if (section.empty()) {
            if (key == "schema_version") {
                if (parse_int(value, at) != 1) at.fail("unsupported schema_version " + value);
                have_version = true;
            } else {
                at.fail("unknown top-level key '" + key + "'");
            }
        } else if (section == "model") {
            if (key == "eigenvalues") {
                sc.eigenvalues = parse_vec(value, at);
                have_eigenvalues = true;
            } else if (key == "lambda") {
                sc.lambda = parse_double(value, at);
                have_lambda = true;
            } else {
                at.fail("unknown [model] key '" + key + "'");
            }
        } else if (section == "forcing") {
            if (key == "kind") {
                sc.forcing_kind = value;
            } else if (key == "coeffs") {
                sc.forcing_coeffs = parse_vec(value, at);
            } else if (key == "period") {
                sc.forcing_period = parse_double(value, at);
            } else if (key == "term") {
                const auto toks = split_ws(value);
                if (toks.size() != 4) at.fail("term needs: freq_index mode cos_amp sin_amp");
                FourierTerm t;
                t.freq_index = static_cast<int>(parse_int(toks[0], at));
                t.mode_index = static_cast<int>(parse_int(toks[1], at)) - 1;  // 1-based in file
                t.cos_amp = parse_double(toks[2], at);
                t.sin_amp = parse_double(toks[3], at);
                if (t.mode_index < 0) at.fail("term mode index is 1-based");
                sc.forcing_terms.push_back(t);
            } else if (key == "base_kind") {
                sc.forcing_base_kind = value;
            } else if (key == "decay_rate") {
                sc.decay_rate = parse_double(value, at);
            } else if (key == "sample") {
                const Vec nums = parse_vec(value, at);
                if (nums.size() < 2) at.fail("sample needs: t v_1 ... v_N");
                sc.forcing_samples.emplace_back(nums[0], Vec(nums.begin() + 1, nums.end()));
            } else {
                at.fail("unknown [forcing] key '" + key + "'");
            }
        } else if (section == "initial") {
            if (key == "kind") {
                sc.initial_kind = value;
            } else if (key == "name") {
                sc.equilibrium_name = value;
            } else if (key == "u") {
                sc.initial_u = parse_vec(value, at);
            } else if (key == "v") {
                sc.initial_v = parse_vec(value, at);
            } else if (key == "seed") {
                sc.seed = static_cast<std::uint64_t>(parse_int(value, at));
            } else if (key == "norm_bound") {
                sc.norm_bound = parse_double(value, at);
            } else {
                at.fail("unknown [initial] key '" + key + "'");
            }
        } else if (section == "integration") {
            if (key == "t0") {
                sc.t0 = parse_double(value, at);
            } else if (key == "t1") {
                sc.t1 = parse_double(value, at);
                have_t1 = true;
            } else if (key == "dt") {
                sc.dt = parse_double(value, at);
            } else if (key == "method") {
                if (value != "rk4" && value != "rk4_if") at.fail("method must be rk4 or rk4_if");
                sc.method = value;
            } else if (key == "record_every") {
                sc.record_every = static_cast<int>(parse_int(value, at));
                if (sc.record_every < 1) at.fail("record_every must be >= 1");
            } else {
                at.fail("unknown [integration] key '" + key + "'");
            }
        } else if (section == "analysis") {
            if (key == "window_fraction") {
                sc.window_fraction = parse_double(value, at);
            } else if (key == "classifier_mode") {
                if (value != "pragmatic" && value != "theoretical") {
                    at.fail("classifier_mode must be pragmatic or theoretical");
                }
                sc.classifier_mode = value;
            } else if (key == "beta") {
                sc.beta = parse_double(value, at);
            } else if (key == "gamma1") {
                sc.gamma1 = parse_double(value, at);
            } else {
                at.fail("unknown [analysis] key '" + key + "'");
            }
        } else if (section == "special") {
            if (key == "sigma") {
                if (value != "plus" && value != "zero" && value != "minus") {
                    at.fail("sigma must be plus, zero or minus");
                }
                sc.special_sigma = value;
            } else if (key == "tol") {
                sc.special_tol = parse_double(value, at);
            } else if (key == "max_iter") {
                sc.special_max_iter = static_cast<int>(parse_int(value, at));
            } else {
                at.fail("unknown [special] key '" + key + "'");
            }
        } else if (section == "basin") {
            if (key == "op") {
                if (value != "bisect" && value != "probe" && value != "heteroclinic") {
                    at.fail("basin op must be bisect, probe or heteroclinic");
                }
                sc.basin_op = value;
            } else if (key == "a_u") {
                sc.basin_a_u = parse_vec(value, at);
            } else if (key == "a_v") {
                sc.basin_a_v = parse_vec(value, at);
            } else if (key == "b_u") {
                sc.basin_b_u = parse_vec(value, at);
            } else if (key == "b_v") {
                sc.basin_b_v = parse_vec(value, at);
            } else if (key == "width_tol") {
                sc.width_tol = parse_double(value, at);
            } else if (key == "radius") {
                sc.probe_radius = parse_double(value, at);
            } else if (key == "samples") {
                sc.probe_samples = static_cast<int>(parse_int(value, at));
            } else if (key == "delta") {
                sc.hetero_delta = parse_double(value, at);
            } else {
                at.fail("unknown [basin] key '" + key + "'");
            }
        } else if (section == "lemma") {
            if (key == "horizon") {
                sc.lemma_horizon = parse_double(value, at);
            } else if (key == "dt") {
                sc.lemma_dt = parse_double(value, at);
            } else {
                at.fail("unknown [lemma] key '" + key + "'");
            }
        } else if (section == "output") {
            if (key == "trajectory_csv") {
                sc.trajectory_csv = value;
            } else if (key == "report_json") {
                sc.report_json = value;
            } else {
                at.fail("unknown [output] key '" + key + "'");
            }
        }
    }

    at.line = 0;
    if (!have_version) at.fail("missing schema_version");
    if (!have_eigenvalues) at.fail("missing [model] eigenvalues");
    if (!have_lambda) at.fail("missing [model] lambda");
    if (!have_t1) at.fail("missing [integration] t1");
    return sc;
}

Scenario parse_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigParseError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str(), path);
}

ModelParams Scenario::make_model() const { return make_params(make_operator(eigenvalues), lambda); }

Forcing Scenario::make_forcing() const {
    const std::size_t n = eigenvalues.size();
    auto build = [&](const std::string& kind) -> Forcing {
        if (kind == "zero") return Forcing::zero(n);
        if (kind == "constant") {
            if (forcing_coeffs.size() != n) {
                throw ConfigParseError("[forcing] coeffs length must match eigenvalues");
            }
            return Forcing::constant(forcing_coeffs);
        }
        if (kind == "periodic_fourier") {
            if (!(forcing_period > 0)) throw ConfigParseError("[forcing] period must be > 0");
            return Forcing::periodic_fourier(n, forcing_period, forcing_terms);
        }
        if (kind == "sampled") {
            std::vector<double> ts;
            std::vector<Vec> vals;
            for (const auto& [t, v] : forcing_samples) {
                if (v.size() != n) {
                    throw ConfigParseError("[forcing] sample length must match eigenvalues");
                }
                ts.push_back(t);
                vals.push_back(v);
            }
            return Forcing::sampled(std::move(ts), std::move(vals));
        }
        throw ConfigParseError("unknown forcing kind '" + kind + "'");
    };
    if (forcing_kind == "decaying") {
        if (forcing_base_kind.empty() || forcing_base_kind == "decaying") {
            throw ConfigParseError("[forcing] decaying needs a base_kind");
        }
        return Forcing::decaying(build(forcing_base_kind), decay_rate);
    }
    return build(forcing_kind);
}

PhaseState Scenario::make_initial(const ModelParams& p, std::uint64_t seed_value) const {
    if (initial_kind == "equilibrium") {
        const auto eq = stationary_states(p);
        if (equilibrium_name == "minus") return eq[0];
        if (equilibrium_name == "zero") return eq[1];
        if (equilibrium_name == "plus") return eq[2];
        throw ConfigParseError("[initial] name must be minus, zero or plus");
    }
    if (initial_kind == "explicit") {
        if (initial_u.size() != p.dim() || initial_v.size() != p.dim()) {
            throw ConfigParseError("[initial] u and v must have the model dimension");
        }
        return PhaseState{initial_u, initial_v};
    }
    if (initial_kind == "random") {
        SeededRng rng(seed_value);
        return random_state(rng, p.op, norm_bound);
    }
    throw ConfigParseError("unknown [initial] kind '" + initial_kind + "'");
}

Method Scenario::make_method() const {
    return method == "rk4_if" ? Method::Rk4IntegratingFactor : Method::Rk4;
}

double Scenario::step(const ModelParams& p) const { return dt.value_or(default_dt(p)); }

}  // namespace duffing
