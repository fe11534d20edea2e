#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/metrics.hpp"
#include "pads/netsim/geometry.hpp"
#include "pads/prover.hpp"
#include "pads/scenario.hpp"
#include "pads/time.hpp"
#include "pads/verifier.hpp"

namespace pads::netsim {

/// Y(t) for one X value.
struct CoverageSeries {
    double x = 0.0;
    std::vector<metrics::CoverageSample> samples;
};

struct VerifierRecord {
    SimTime t_query;
    /// False when no prover was in range (query failed, no outcome).
    bool answered = false;
    verifier::VerificationOutcome outcome;
};

struct EpochResult {
    std::size_t index = 0;
    std::uint32_t t_att = 0;
    /// Nodes that exchanged at least one genuine message during the epoch.
    std::vector<NodeId> reachable;
    std::vector<CoverageSeries> coverage;
    /// One entry per configured coverage target, in config order.
    std::vector<std::optional<Duration>> mct;
    /// Self-attestation outcome per node at T_att; Unknown for inactive nodes.
    std::vector<CellStatus> ground_truth;
    std::vector<VerifierRecord> queries;
    /// Bitmasks at the end of the epoch.
    std::vector<ObservationBitmask> final_bitmasks;
};

struct MetricsLedger {
    std::vector<EpochResult> epochs;
    metrics::Counters counters;
    std::vector<metrics::EnergyAccount> energy;
    /// Cell-wise minimum over every active node's final bitmask.
    std::vector<metrics::Classification> final_classification;
};

struct RunResult {
    std::uint64_t seed = 0;
    MetricsLedger ledger;
    std::vector<ProverState> final_states;
    std::vector<bool> active;
    SimTime end;
    std::uint64_t events = 0;
};

/// Responsive nodes within `range` of node i, ascending id.
std::vector<NodeId> neighbors(std::span<const Vec2> positions, const std::vector<bool>& responsive, NodeId i,
                              double range);

/// Simulates one seed of the scenario. `trace` receives one line per event.
/// Throws ConfigError on an invalid scenario.
RunResult run(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* trace = nullptr);

/// Heuristic epoch length used for the default T_MAX.
Duration coverage_time_estimate(const ScenarioConfig& cfg);

}  // namespace pads::netsim
