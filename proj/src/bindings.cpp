#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "duffing/basin.hpp"
#include "duffing/scenario.hpp"
#include "duffing/special.hpp"

namespace py = pybind11;
using namespace duffing;

namespace {

Method method_from_string(const std::string& name) {
    if (name == "rk4") return Method::Rk4;
    if (name == "rk4_if") return Method::Rk4IntegratingFactor;
    throw Error("InvalidMethod", "method must be 'rk4' or 'rk4_if'");
}

py::dict regime_dict(const RegimeReport& r) {
    py::dict d;
    d["sigma"] = r.sigma;
    d["tail_residual"] = r.tail_residual;
    d["forcing_tail"] = r.forcing_tail;
    d["margin_vs_linear_scaling"] = r.margin_vs_linear_scaling;
    d["certified"] = r.certified;
    d["mode"] = r.mode == ClassifierMode::Theoretical ? "theoretical" : "pragmatic";
    switch (r.gate) {
        case TheoreticalGate::Unstable: d["gate"] = "unstable"; break;
        case TheoreticalGate::StablePlus: d["gate"] = "stable_plus"; break;
        case TheoreticalGate::StableMinus: d["gate"] = "stable_minus"; break;
        default: d["gate"] = "none";
    }
    d["candidate_residuals"] = r.candidate_residuals;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral Galerkin toolkit for the damped Duffing-type evolution equation";

    py::register_exception<Error>(m, "DuffingError");

    py::class_<SpectralOperator>(m, "SpectralOperator")
        .def_property_readonly("eigenvalues", &SpectralOperator::eigenvalues)
        .def_property_readonly("lambda1", &SpectralOperator::lambda1)
        .def_property_readonly("lambda2", &SpectralOperator::lambda2)
        .def("__len__", &SpectralOperator::size);

    py::class_<ModelParams>(m, "ModelParams")
        .def_readonly("op", &ModelParams::op)
        .def_readonly("lambda_", &ModelParams::lambda)
        .def_readonly("sigma0", &ModelParams::sigma0)
        .def_readonly("gamma0", &ModelParams::gamma0)
        .def_property_readonly("dim", &ModelParams::dim);

    py::class_<PhaseState>(m, "PhaseState")
        .def(py::init([](Vec u, Vec v) { return PhaseState{std::move(u), std::move(v)}; }),
             py::arg("u"), py::arg("v"))
        .def_readwrite("u", &PhaseState::u)
        .def_readwrite("v", &PhaseState::v);

    py::class_<FourierTerm>(m, "FourierTerm")
        .def(py::init([](int freq, int mode, double c, double s) {
                 return FourierTerm{freq, mode, c, s};
             }),
             py::arg("freq_index"), py::arg("mode_index"), py::arg("cos_amp"),
             py::arg("sin_amp") = 0.0);

    py::class_<Forcing>(m, "Forcing")
        .def_static("zero", &Forcing::zero, py::arg("dim"))
        .def_static("constant", &Forcing::constant, py::arg("coeffs"))
        .def_static("periodic_fourier", &Forcing::periodic_fourier, py::arg("dim"),
                    py::arg("period"), py::arg("terms"))
        .def_static("decaying", &Forcing::decaying, py::arg("base"), py::arg("decay_rate"))
        .def_static("sampled", &Forcing::sampled, py::arg("times"), py::arg("values"))
        .def("evaluate", py::overload_cast<double>(&Forcing::evaluate, py::const_),
             py::arg("t"))
        .def("norm_at", &Forcing::norm_at, py::arg("t"))
        .def_property_readonly("dim", &Forcing::dim);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("states", &Trajectory::states)
        .def_readonly("dt", &Trajectory::dt)
        .def("__len__", &Trajectory::size);

    m.def("make_operator", &make_operator, py::arg("eigenvalues"));
    m.def("make_params", &make_params, py::arg("op"), py::arg("lambda_"));
    m.def("norms", [](const PhaseState& s, const SpectralOperator& op) {
        const StateNorms n = norms(s, op);
        return py::make_tuple(n.u, n.u_half, n.u_a, n.v);
    });
    m.def("apply_P", &apply_P, py::arg("u"));
    m.def("rhs", [](const PhaseState& s, double t, const Forcing& f, const ModelParams& p) {
        auto [du, dv] = rhs(s, t, f, p);
        return py::make_tuple(du, dv);
    });
    m.def("default_dt", &default_dt);
    m.def(
        "integrate",
        [](const PhaseState& initial, const Forcing& f, double t0, double t1, double dt,
           const std::string& method, const ModelParams& p, int record_every) {
            IntegrateOptions opt;
            opt.record_every = record_every;
            return integrate(initial, f, t0, t1, dt, method_from_string(method), p, opt);
        },
        py::arg("initial"), py::arg("forcing"), py::arg("t0"), py::arg("t1"), py::arg("dt"),
        py::arg("method"), py::arg("params"), py::arg("record_every") = 1);
    m.def("stationary_states", [](const ModelParams& p) {
        const auto s = stationary_states(p);
        return py::make_tuple(s[0], s[1], s[2]);
    });

    m.def("classical_energy", &classical_energy, py::arg("state"), py::arg("params"));
    m.def("corrected_energy", &corrected_energy, py::arg("state"), py::arg("params"));
    m.def("decompose_F", [](const PhaseState& s, const ModelParams& p) {
        const FDecomposition d = decompose_F(s, p);
        return py::make_tuple(d.F_minus, d.F_plus, d.I);
    });
    m.def("well_potential", &well_potential, py::arg("x"), py::arg("params"));
    m.def("well_energies", [](const PhaseState& s, const ModelParams& p, double g1) {
        const WellEnergies w = well_energies(s, p, g1);
        return py::make_tuple(w.W, w.R, w.S);
    });
    m.def("certify_energy_identity", &certify_energy_identity, py::arg("traj"),
          py::arg("forcing"), py::arg("params"));

    m.def("tail_limsup", [](const Vec& series, double frac) {
        return tail_limsup(series, frac);
    });
    m.def("regime_constants", [](const ModelParams& p, py::object beta) {
        const RegimeConstants c =
            beta.is_none() ? regime_constants(p) : regime_constants(p, beta.cast<double>());
        py::dict d;
        d["beta0"] = c.beta0;
        d["beta"] = c.beta;
        d["beta1"] = c.beta1;
        d["delta"] = c.delta;
        d["K1"] = c.K1;
        d["K2"] = c.K2;
        d["K3"] = c.K3;
        d["gamma1"] = c.gamma1;
        d["eta"] = c.eta;
        d["eps1"] = c.eps1;
        d["M1"] = c.M1;
        d["M2"] = c.M2;
        d["M3"] = c.M3;
        d["c7"] = c.c7;
        return d;
    }, py::arg("params"), py::arg("beta") = py::none());
    m.def(
        "classify",
        [](const Trajectory& traj, const Forcing& f, const ModelParams& p,
           const std::string& mode, double window_fraction) {
            const auto cmode = mode == "theoretical" ? ClassifierMode::Theoretical
                                                     : ClassifierMode::Pragmatic;
            return regime_dict(classify(traj, f, p, cmode, window_fraction));
        },
        py::arg("traj"), py::arg("forcing"), py::arg("params"), py::arg("mode") = "pragmatic",
        py::arg("window_fraction") = 0.5);
    m.def("verify_ultimate_bound", [](const Trajectory& traj, const Forcing& f,
                                      const ModelParams& p) {
        const UltimateBoundReport r = verify_ultimate_bound(traj, f, p);
        py::dict d;
        d["ok"] = r.ok;
        d["tail_F"] = r.tail_F;
        d["tail_f"] = r.tail_f;
        d["tail_state_sq"] = r.tail_state_sq;
        d["energy_margin"] = r.energy_margin;
        d["state_margin"] = r.state_margin;
        return d;
    });
    m.def("asymptotic_distance", [](const Trajectory& a, const Trajectory& b,
                                    const ModelParams& p) {
        const DistanceSeries s = asymptotic_distance(a, b, p);
        py::dict d;
        d["times"] = s.times;
        d["values"] = s.values;
        d["fitted_rate"] = s.fitted_rate ? py::cast(*s.fitted_rate) : py::none();
        return d;
    });
    m.def("ode_limsup_oracle", [](double mval, const std::function<double(double)>& psi,
                                  double horizon, double dt) {
        const OdeOracleReport r = ode_limsup_oracle(mval, psi, horizon, dt);
        py::dict d;
        d["ok"] = r.ok;
        d["tail_y"] = r.tail_y;
        d["tail_dy"] = r.tail_dy;
        d["tail_psi"] = r.tail_psi;
        d["ratio_y"] = r.ratio_y;
        d["ratio_dy"] = r.ratio_dy;
        return d;
    }, py::arg("m"), py::arg("psi"), py::arg("horizon"), py::arg("dt") = 1e-3);
    m.def("pde_limsup_oracle", [](const Vec& eigs, const Forcing& psi, double horizon,
                                  double dt) {
        const PdeOracleReport r = pde_limsup_oracle(eigs, psi, horizon, dt);
        py::dict d;
        d["ok"] = r.ok;
        d["tail_energy"] = r.tail_energy;
        d["tail_psi_sq"] = r.tail_psi_sq;
        d["bound"] = r.bound;
        d["ratio"] = r.ratio;
        return d;
    }, py::arg("eigenvalues"), py::arg("psi"), py::arg("horizon"), py::arg("dt") = 1e-3);

    py::class_<LinearizedOperator>(m, "LinearizedOperator")
        .def_readonly("sigma", &LinearizedOperator::sigma)
        .def_readonly("mu", &LinearizedOperator::mu)
        .def_readonly("coercivity", &LinearizedOperator::coercivity);
    m.def("linearize", &linearize, py::arg("sigma"), py::arg("params"));
    m.def("nonlinear_remainder", &nonlinear_remainder, py::arg("sigma"), py::arg("w"),
          py::arg("params"));

    py::class_<PeriodicSolution>(m, "PeriodicSolution")
        .def_readonly("sigma", &PeriodicSolution::sigma)
        .def_readonly("period", &PeriodicSolution::period)
        .def_readonly("harmonics", &PeriodicSolution::harmonics)
        .def_readonly("grid_size", &PeriodicSolution::grid_size)
        .def_readonly("orbit", &PeriodicSolution::orbit)
        .def_readonly("residual", &PeriodicSolution::residual)
        .def_readonly("iterations", &PeriodicSolution::iterations)
        .def("evaluate", &PeriodicSolution::evaluate, py::arg("t"), py::arg("params"));
    m.def(
        "solve_periodic",
        [](double sigma, const Forcing& f, const ModelParams& p, double tol, int max_iter) {
            return solve_periodic(sigma, f, p, tol, max_iter);
        },
        py::arg("sigma"), py::arg("forcing"), py::arg("params"), py::arg("tol") = 1e-12,
        py::arg("max_iter") = 200);
    m.def(
        "dichotomy_green_apply",
        [](double mu, const Vec& times, const Vec& h, const std::string& ext) {
            const Extension e = ext == "periodic" ? Extension::Periodic : Extension::Zero;
            return dichotomy_green_apply(mu, times, h, e);
        },
        py::arg("mu"), py::arg("times"), py::arg("h"), py::arg("extension") = "zero");
    m.def(
        "solve_bounded",
        [](double sigma, const Forcing& f, double t0, double t1, double dt,
           const ModelParams& p, double tol, const std::string& ext) {
            const Extension e = ext == "periodic" ? Extension::Periodic : Extension::Zero;
            const BoundedSolution sol = solve_bounded(sigma, f, t0, t1, dt, p, tol, e);
            py::dict d;
            d["traj"] = sol.traj;
            d["boundary_layer"] = sol.boundary_layer;
            d["residual_interior"] = sol.residual_interior;
            d["iterations"] = sol.iterations;
            return d;
        },
        py::arg("sigma"), py::arg("forcing"), py::arg("t0"), py::arg("t1"), py::arg("dt"),
        py::arg("params"), py::arg("tol") = 1e-10, py::arg("extension") = "zero");

    m.def(
        "bisect_boundary",
        [](const PhaseState& a, const PhaseState& b, const Forcing& f, const ModelParams& p,
           double horizon, double width_tol, double dt) {
            const BisectionResult r = bisect_boundary(a, b, f, p, horizon, width_tol, dt);
            py::dict d;
            d["endpoint_plus"] = r.endpoint_plus;
            d["endpoint_minus"] = r.endpoint_minus;
            d["boundary"] = r.boundary;
            d["width"] = r.width;
            d["boundary_dwell"] = r.boundary_dwell;
            d["boundary_tail_residual"] = r.boundary_tail_residual;
            d["steps"] = r.steps;
            return d;
        },
        py::arg("a"), py::arg("b"), py::arg("forcing"), py::arg("params"), py::arg("horizon"),
        py::arg("width_tol"), py::arg("dt") = 0.0);
    m.def("openness_probe", &openness_probe, py::arg("base"), py::arg("radius"),
          py::arg("samples"), py::arg("forcing"), py::arg("params"), py::arg("horizon"),
          py::arg("seed") = 0, py::arg("dt") = 0.0);
    m.def(
        "heteroclinic_demo",
        [](const ModelParams& p, double horizon, double delta, double dt) {
            const HeteroclinicReport r = heteroclinic_demo(p, horizon, delta, dt);
            py::dict d;
            d["traj"] = r.traj;
            d["delta"] = r.delta;
            d["sigma_target"] = r.sigma_target;
            d["dwell_time"] = r.dwell_time;
            d["tail_residual_target"] = r.tail_residual_target;
            d["tail_residual_zero"] = r.tail_residual_zero;
            return d;
        },
        py::arg("params"), py::arg("horizon"), py::arg("delta") = 1e-8, py::arg("dt") = 0.0);

    m.def("parse_scenario_text", &parse_scenario_text, py::arg("text"), py::arg("origin"));
    m.def(
        "run_scenario",
        [](const std::string& subcommand, const Scenario& sc, const std::string& out_dir,
           py::object seed, bool quiet) {
            RunOptions opt;
            opt.out_dir = out_dir;
            opt.quiet = quiet;
            if (!seed.is_none()) opt.seed_override = seed.cast<std::uint64_t>();
            return run_scenario(subcommand, sc, opt);
        },
        py::arg("subcommand"), py::arg("scenario"), py::arg("out_dir") = ".",
        py::arg("seed") = py::none(), py::arg("quiet") = true);
    py::class_<Scenario>(m, "Scenario");
}
