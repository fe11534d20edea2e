// Scenario runner: one simulation per seed, CSVs under the output directory.

#include <algorithm>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "pads/batch.hpp"
#include "pads/error.hpp"
#include "pads/scenario.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Collective attestation swarm simulator"};
    std::string scenario_path;
    std::vector<std::uint64_t> seeds;
    std::string out_dir;
    int verbosity = 0;
    bool baseline = false;
    bool trace = false;
    std::size_t jobs = 1;

    app.add_option("scenario", scenario_path, "Scenario JSON file")->required();
    app.add_option("-s,--seed", seeds, "Seed(s) to run instead of the scenario's list");
    app.add_option("-o,--out", out_dir, "Output directory (default: $PADS_OUTPUT_DIR, then the scenario's output_dir)");
    app.add_flag("-v,--verbose", verbosity, "More progress output (repeatable)");
    app.add_flag("--baseline", baseline, "Also run naive tree aggregation (static trees only)");
    app.add_flag("--trace", trace, "Write a per-run event trace");
    app.add_option("-j,--jobs", jobs, "Seeds simulated in parallel")->check(CLI::PositiveNumber);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    pads::ScenarioConfig cfg;
    try {
        std::vector<std::string> warnings;
        cfg = pads::parse_config_file(scenario_path, &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
        if (!seeds.empty()) {
            cfg.seeds.clear();
            for (auto s : seeds) {
                if (std::find(cfg.seeds.begin(), cfg.seeds.end(), s) == cfg.seeds.end()) cfg.seeds.push_back(s);
            }
        }
        if (baseline) cfg.baseline = pads::BaselineKind::NaiveTreeAggregation;
        if (out_dir.empty()) {
            const char* env = std::getenv("PADS_OUTPUT_DIR");
            out_dir = env && *env ? env : cfg.output_dir;
        }
        cfg.output_dir = out_dir;
        pads::validate(cfg);
    } catch (const pads::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }

    pads::BatchOptions options;
    options.out_dir = out_dir;
    options.jobs = jobs;
    options.trace = trace;
    options.log = verbosity > 0 ? &std::cerr : nullptr;

    try {
        const auto result = pads::run_batch(cfg, options);
        for (const auto& f : result.failures) std::cerr << "seed " << f.seed << " failed: " << f.what << '\n';
        if (result.baseline) {
            std::cout << "naive tree aggregation: " << pads::to_seconds(result.baseline->completion) << " s\n";
        }
        std::cout << result.completed.size() << "/" << cfg.seeds.size() << " runs completed, results in " << out_dir
                  << '\n';
        return result.ok() ? 0 : 2;
    } catch (const pads::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << '\n';
        return 2;
    }
}
