#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pads/baseline.hpp"
#include "pads/netsim/engine.hpp"
#include "pads/scenario.hpp"

namespace pads {

struct BatchOptions {
    std::filesystem::path out_dir = "out";
    std::size_t jobs = 1;
    /// Write runs/run_<seed>_trace.log next to the CSVs.
    bool trace = false;
    /// Progress lines; null for silence.
    std::ostream* log = nullptr;
};

struct RunFailure {
    std::uint64_t seed = 0;
    std::string what;
};

struct BatchResult {
    std::vector<std::uint64_t> completed;
    std::vector<RunFailure> failures;
    std::optional<baseline::TreeBaselineResult> baseline;
    bool ok() const { return failures.empty(); }
};

/// Column names shared by the CSV writers.
std::string coverage_csv_header();
std::string summary_csv_header();
std::string verifier_csv_header();
std::string aggregate_csv_header();

std::string coverage_csv(const netsim::RunResult& run);
std::string summary_csv(const ScenarioConfig& cfg, const netsim::RunResult& run);
std::string verifier_csv(const netsim::RunResult& run);

/// Mean and sample standard deviation of MCT per coverage target over every
/// (run, epoch) pair that reached it.
std::string aggregate_csv(const ScenarioConfig& cfg, const std::vector<netsim::RunResult>& runs);

/// Writes `content` to `path` through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// One simulation per seed. Per-run files land in <out>/runs/, the aggregate
/// in <out>/aggregate.csv. A failing seed is recorded and the others still
/// run; files of completed seeds are kept.
BatchResult run_batch(const ScenarioConfig& cfg, const BatchOptions& options);

}  // namespace pads
