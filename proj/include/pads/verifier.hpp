#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/crypto.hpp"
#include "pads/message.hpp"
#include "pads/metrics.hpp"
#include "pads/time.hpp"

namespace pads::verifier {

/// What the verifier knows: the shared key, the current T_att (it holds the
/// schedule seed) and the acceptance window [T_att - dT, T_MAX].
struct VerifierContext {
    crypto::SymKey key;
    crypto::MacAlgorithm mac_algorithm = crypto::MacAlgorithm::HmacSha1;
    std::size_t n = 0;
    std::uint32_t t_att = 0;
    SimTime window_start;
    SimTime t_max;
};

struct VerificationOutcome {
    bool r = false;
    double rho = 0.0;
    /// Empty unless r.
    std::vector<metrics::Classification> classification;
    NodeId queried_node = 0;
    SimTime t_query;
};

/// r = 1 iff the MAC verifies, the snapshot is bound to the current T_att and
/// its timestamp lies in the window. Cells map 10 -> Healthy,
/// 00 -> Compromised, 11 -> Unknown.
VerificationOutcome check_snapshot(const AttestationMessage& msg, const VerifierContext& ctx, NodeId from,
                                   SimTime t_query);

/// Picks a prover uniformly among `in_range`, pulls its current broadcast and
/// checks it. Throws QueryFailed when nobody is in range.
VerificationOutcome verify_query(std::span<const NodeId> in_range,
                                 const std::function<AttestationMessage(NodeId)>& pull,
                                 const VerifierContext& ctx, SimTime t_query, crypto::PrngState& chooser);

/// Healthy/Compromised claims that contradict `truth` (the per-node
/// self-attestation results at T_att). Unknown cells never count.
std::size_t false_claims(const VerificationOutcome& outcome, std::span<const CellStatus> truth);

/// Report label; the conservative policy treats Unknown as suspect.
std::string report_label(metrics::Classification c, bool conservative);

}  // namespace pads::verifier
