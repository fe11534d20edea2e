#pragma once

#include <cstdint>

#include "pads/scenario.hpp"
#include "pads/time.hpp"

namespace pads::baseline {

/// Naive tree aggregation: the root floods a MAC'd query down the tree; every
/// node verifies it, forwards it to its children and self-attests. Reports
/// travel back up, each parent verifying its children's reports one at a
/// time before signing its own. Same per-hop delay constants as the
/// consensus simulation; lossless.
struct TreeBaselineResult {
    /// From the root starting to sign the query until the root has verified
    /// every child report.
    Duration completion{0};
    std::uint64_t messages = 0;
    std::uint64_t frames = 0;
    std::size_t depth = 0;
};

/// Query frame: t_stamp || t_att || tag.
inline constexpr std::size_t kQueryBytes = 28;

/// Throws ConfigError unless the topology is a static tree.
TreeBaselineResult run_tree_baseline(const ScenarioConfig& cfg);

}  // namespace pads::baseline
