#include "pads/verifier.hpp"

#include "pads/error.hpp"

namespace pads::verifier {

VerificationOutcome check_snapshot(const AttestationMessage& msg, const VerifierContext& ctx, NodeId from,
                                   SimTime t_query) {
    VerificationOutcome out;
    out.queried_node = from;
    out.t_query = t_query;
    if (msg.bitmask.size() != ctx.n || !msg.bitmask.valid()) return out;
    if (!crypto::mac_verify(ctx.key, msg.tag, mac_payload(msg.bitmask, msg.t_stamp, msg.t_att),
                            ctx.mac_algorithm)) {
        return out;
    }
    if (msg.t_att != ctx.t_att) return out;
    const auto stamp = at_seconds(msg.t_stamp);
    // t_stamp has whole-second resolution; compare against the window start
    // rounded down to the same resolution.
    if (stamp < at_seconds(whole_seconds(ctx.window_start)) || stamp > ctx.t_max) return out;

    out.r = true;
    out.rho = metrics::representativity(msg.bitmask);
    out.classification.reserve(ctx.n);
    for (std::size_t j = 0; j < ctx.n; ++j) out.classification.push_back(metrics::classify(msg.bitmask.get(j)));
    return out;
}

VerificationOutcome verify_query(std::span<const NodeId> in_range,
                                 const std::function<AttestationMessage(NodeId)>& pull,
                                 const VerifierContext& ctx, SimTime t_query, crypto::PrngState& chooser) {
    if (in_range.empty()) throw QueryFailed("no responsive prover within verifier range");
    const auto chosen = in_range[chooser.below(in_range.size())];
    return check_snapshot(pull(chosen), ctx, chosen, t_query);
}

std::size_t false_claims(const VerificationOutcome& outcome, std::span<const CellStatus> truth) {
    std::size_t wrong = 0;
    for (std::size_t j = 0; j < outcome.classification.size(); ++j) {
        const auto c = outcome.classification[j];
        if (c == metrics::Classification::Unknown) continue;
        if (j >= truth.size() || metrics::classify(truth[j]) != c) ++wrong;
    }
    return wrong;
}

std::string report_label(metrics::Classification c, bool conservative) {
    if (c == metrics::Classification::Unknown && conservative) return "suspected_compromised";
    return metrics::to_string(c);
}

}  // namespace pads::verifier
