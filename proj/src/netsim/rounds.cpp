#include "pads/netsim/rounds.hpp"

#include "pads/error.hpp"

namespace pads::netsim {

RoundsResult run_synchronous_rounds(const StaticGraph& graph, std::vector<ProverState>& provers,
                                    std::size_t max_rounds, SimTime start, Duration period,
                                    ValidityWindow window) {
    if (graph.size() != provers.size()) throw InvalidInput("graph and prover count differ");
    RoundsResult result;
    SimTime now = start;
    std::vector<AttestationMessage> outbox(provers.size());
    for (std::size_t round = 1; round <= max_rounds + 1; ++round) {
        for (std::size_t i = 0; i < provers.size(); ++i) outbox[i] = build_message(provers[i], now);
        bool changed = false;
        for (std::size_t i = 0; i < provers.size(); ++i) {
            const auto before = provers[i].bitmask;
            for (auto j : graph.neighbors(static_cast<NodeId>(i))) {
                if (handle_message(provers[i], outbox[j], now, window) != Verdict::Accepted) {
                    throw ProtocolError("honest message rejected in a lossless round");
                }
            }
            if (provers[i].bitmask != before) changed = true;
        }
        if (!changed) {
            result.converged = true;
            return result;
        }
        if (round > max_rounds) break;
        result.rounds = round;
        now += period;
    }
    return result;
}

}  // namespace pads::netsim
