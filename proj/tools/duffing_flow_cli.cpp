#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "duffing/scenario.hpp"

namespace {

struct CliArgs {
    std::string scenario;
    std::string out_dir = ".";
    std::int64_t seed = -1;
    bool has_seed = false;
    bool quiet = false;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"duffing-flow: spectral Galerkin simulation and verification toolkit"};
    app.require_subcommand(1);

    CliArgs args;
    const std::vector<std::pair<std::string, std::string>> subs = {
        {"simulate", "integrate a scenario and write the trajectory CSV"},
        {"classify", "classify the asymptotic regime of a scenario run"},
        {"energies", "write the energy ledger CSV and certification report"},
        {"special", "solve for the periodic special solution"},
        {"basin", "basin geometry: bisect / probe / heteroclinic"},
        {"lemma-check", "run the bound-lemma oracle suite"},
    };
    for (const auto& [name, desc] : subs) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--scenario", args.scenario, "scenario file")->required();
        sub->add_option("--out", args.out_dir, "output directory (default: .)");
        sub->add_option("--seed", args.seed, "override the scenario seed")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--quiet", args.quiet, "suppress progress output");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string subcommand = app.get_subcommands().front()->get_name();
    args.has_seed = app.get_subcommands().front()->count("--seed") > 0;

    try {
        const duffing::Scenario sc = duffing::parse_scenario_file(args.scenario);
        duffing::RunOptions opt;
        opt.out_dir = args.out_dir;
        opt.quiet = args.quiet;
        if (args.has_seed) opt.seed_override = static_cast<std::uint64_t>(args.seed);
        return duffing::run_scenario(subcommand, sc, opt);
    } catch (const duffing::Error& e) {
        std::cerr << "error: " << e.name() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Unexpected: " << e.what() << '\n';
        return 1;
    }
}
