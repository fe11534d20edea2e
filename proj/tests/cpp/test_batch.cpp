#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pads/batch.hpp"

using namespace pads;
using namespace std::chrono_literals;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("pads_batch_" + name);
    fs::remove_all(p);
    return p;
}

ScenarioConfig small() {
    ScenarioConfig c;
    c.n = 31;
    c.topology.kind = netsim::TopologyKind::StaticTree;
    c.seeds = {1, 2};
    c.coverage_targets = {{0.95, 0.95}, {1.0, 0.5}};
    c.verifier.queries = {500ms};
    c.baseline = BaselineKind::NaiveTreeAggregation;
    return c;
}

}  // namespace

TEST_CASE("batch writes every file and is byte-reproducible") {
    const auto cfg = small();
    const auto a = scratch("a"), b = scratch("b");
    REQUIRE(run_batch(cfg, {a, 1, false, nullptr}).ok());
    REQUIRE(run_batch(cfg, {b, 2, false, nullptr}).ok());
    for (const auto* name : {"config.json", "aggregate.csv", "baseline.csv", "runs/run_1_coverage.csv",
                             "runs/run_1_summary.csv", "runs/run_1_verifier.csv", "runs/run_2_coverage.csv"}) {
        INFO(name);
        REQUIRE(fs::exists(a / name));
        CHECK(slurp(a / name) == slurp(b / name));
    }
    const auto summary = slurp(a / "runs/run_1_summary.csv");
    CHECK(summary.rfind(summary_csv_header() + "\n", 0) == 0);
    // One row per (epoch, target).
    CHECK(std::count(summary.begin(), summary.end(), '\n') == 3);
    CHECK(summary.find("not-reached") == std::string::npos);
    CHECK(parse_config_file(a / "config.json") == cfg);
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("unreachable target is reported with a sentinel, not an error") {
    auto cfg = small();
    cfg.baseline = BaselineKind::None;
    cfg.adversary.com = adversary::ComPlan{.drop_rate = 1.0};
    cfg.horizon = 2s;
    const auto dir = scratch("drop");
    const auto r = run_batch(cfg, {dir, 1, false, nullptr});
    CHECK(r.ok());
    CHECK_FALSE(r.baseline.has_value());
    const auto summary = slurp(dir / "runs/run_1_summary.csv");
    CHECK(summary.find("not-reached") != std::string::npos);
    const auto agg = slurp(dir / "aggregate.csv");
    CHECK(agg.find("not-reached") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("trace option writes a per-run log") {
    auto cfg = small();
    cfg.seeds = {7};
    cfg.n = 3;
    const auto dir = scratch("trace");
    std::ostringstream log;
    REQUIRE(run_batch(cfg, {dir, 1, true, &log}).ok());
    CHECK(fs::file_size(dir / "runs/run_7_trace.log") > 0);
    CHECK(log.str().find("seed 7") != std::string::npos);
    fs::remove_all(dir);
}
