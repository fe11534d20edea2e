#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pads/adversary.hpp"
#include "pads/crypto.hpp"
#include "pads/metrics.hpp"
#include "pads/netsim/geometry.hpp"
#include "pads/netsim/radio.hpp"
#include "pads/netsim/topology.hpp"
#include "pads/time.hpp"

namespace pads {

struct ArenaConfig {
    double base_side_m = 1000.0;   // side of the square hosting 128 provers
    std::optional<double> width_m;
    std::optional<double> height_m;
    friend bool operator==(const ArenaConfig&, const ArenaConfig&) = default;
};

struct MobilityConfig {
    netsim::SpeedRange speeds;
    Duration tick{std::chrono::milliseconds{100}};
    /// Nodes start moving this long before the first attestation.
    Duration warmup{0};
    friend bool operator==(const MobilityConfig&, const MobilityConfig&) = default;
};

struct ProtocolConfig {
    /// Defaults to 100 ms on static trees and 500 ms otherwise.
    std::optional<Duration> broadcast_period;
    std::uint32_t delta_t_max_s = 3600;
    /// dT; defaults to twice the broadcast period.
    std::optional<Duration> validity_window;
    std::size_t inbox_capacity = 4;
    std::size_t key_bits = 160;
    crypto::MacAlgorithm mac = crypto::MacAlgorithm::HmacSha1;
    std::size_t region_bytes = 256;
    /// |H|, number of provisioned good configurations.
    std::size_t good_configs = 1;
    friend bool operator==(const ProtocolConfig&, const ProtocolConfig&) = default;
};

struct DelayConfig {
    Duration mac{std::chrono::milliseconds{48}};
    Duration attest{std::chrono::milliseconds{187}};
    friend bool operator==(const DelayConfig&, const DelayConfig&) = default;
};

struct VerifierConfig {
    /// Query instants, relative to each epoch's T_att.
    std::vector<Duration> queries;
    std::optional<netsim::Vec2> position;
    /// T_MAX - T_att; defaults to 10x the scenario's coverage-time estimate.
    std::optional<Duration> t_max;
    bool conservative = false;
    friend bool operator==(const VerifierConfig&, const VerifierConfig&) = default;
};

struct CoverageTarget {
    double x = 0.95;
    double y = 0.95;
    friend bool operator==(const CoverageTarget&, const CoverageTarget&) = default;
};

enum class BaselineKind { None, NaiveTreeAggregation };

struct ScenarioConfig {
    std::size_t n = 128;
    netsim::TopologySpec topology;
    ArenaConfig arena;
    netsim::RadioModel radio;
    MobilityConfig mobility;
    ProtocolConfig protocol;
    DelayConfig delays;
    double compromised_fraction = 0.0;
    std::vector<NodeId> inactive_nodes;
    adversary::AdversaryPlan adversary;
    metrics::EnergyConstants energy;
    std::vector<CoverageTarget> coverage_targets{{0.95, 0.95}};
    VerifierConfig verifier;
    std::vector<std::uint64_t> seeds{1};
    /// Attestation epochs simulated; each but the last ends at the next T_att.
    std::size_t epochs = 1;
    /// How long the last simulated epoch is observed after its T_att.
    Duration horizon{std::chrono::seconds{300}};
    bool stop_when_covered = true;
    BaselineKind baseline = BaselineKind::None;
    std::string output_dir = "out";

    Duration broadcast_period() const;
    Duration validity_window() const;
    netsim::Arena arena_geometry() const;
    bool mobile() const { return topology.kind == netsim::TopologyKind::RandomMobility; }

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Throws ConfigError (with key path) on the first violated constraint.
void validate(const ScenarioConfig& cfg);

/// Strict parse: unknown keys and wrong types are errors, missing keys take
/// defaults. Duplicate seeds are dropped with a warning.
ScenarioConfig parse_config(const nlohmann::json& doc, std::vector<std::string>* warnings = nullptr);
ScenarioConfig parse_config_text(const std::string& text, std::vector<std::string>* warnings = nullptr);
ScenarioConfig parse_config_file(const std::filesystem::path& path,
                                 std::vector<std::string>* warnings = nullptr);

nlohmann::json to_json(const ScenarioConfig& cfg);

}  // namespace pads
