#pragma once

#include <cstddef>
#include <vector>

#include "pads/netsim/topology.hpp"
#include "pads/prover.hpp"
#include "pads/time.hpp"

namespace pads::netsim {

struct RoundsResult {
    /// Last round in which any bitmask changed (0 if nothing ever changed).
    std::size_t rounds = 0;
    /// True if a round without any change was observed before max_rounds.
    bool converged = false;
};

/// Lockstep lossless gossip on a static graph: every round each node
/// broadcasts its signed bitmask, then every node handles all messages from
/// its neighbours. Provers must already be self-attested for the same T_att.
/// Each round advances the clock by `period`.
RoundsResult run_synchronous_rounds(const StaticGraph& graph, std::vector<ProverState>& provers,
                                    std::size_t max_rounds, SimTime start,
                                    Duration period = std::chrono::milliseconds{100},
                                    ValidityWindow window = {});

}  // namespace pads::netsim
