#include "pads/prover.hpp"

#include <algorithm>
#include <string>

#include "pads/error.hpp"

namespace pads {

GoodConfigs make_good_configs(std::vector<crypto::Measurement> digests) {
    std::sort(digests.begin(), digests.end());
    digests.erase(std::unique(digests.begin(), digests.end()), digests.end());
    return std::make_shared<const std::vector<crypto::Measurement>>(std::move(digests));
}

std::pair<std::uint32_t, crypto::PrngState> next_attestation_time(crypto::PrngState prng,
                                                                  std::uint32_t current_t_att_s,
                                                                  std::uint32_t delta_t_max_s) {
    if (delta_t_max_s == 0) throw ConfigError("delta_t_max must be positive");
    const auto [value, advanced] = crypto::prng_next(prng);
    const auto gap = 1 + value % delta_t_max_s;
    return {current_t_att_s + gap, advanced};
}

AttestationSchedule AttestationSchedule::generate(crypto::PrngState seed, std::uint32_t delta_t_max_s,
                                                  std::size_t count) {
    AttestationSchedule s;
    s.delta_t_max = delta_t_max_s;
    std::uint32_t t = 0;
    for (std::size_t k = 0; k < count; ++k) {
        std::tie(t, seed) = next_attestation_time(seed, t, delta_t_max_s);
        s.t_att_sequence.push_back(t);
    }
    return s;
}

ProverState make_prover(NodeId id, std::size_t n, crypto::SymKey key, GoodConfigs good,
                        std::vector<std::uint8_t> region, crypto::PrngState schedule_seed,
                        std::uint32_t delta_t_max_s) {
    if (id >= n) throw InvalidInput("prover id outside [0, n)");
    ProverState p;
    p.id = id;
    p.key = std::move(key);
    p.good_configs = std::move(good);
    p.bitmask = ObservationBitmask::all_unknown(n);
    p.region = std::move(region);
    p.delta_t_max = delta_t_max_s;
    std::tie(p.next_t_att, p.prng) = next_attestation_time(schedule_seed, 0, delta_t_max_s);
    return p;
}

void self_attest(ProverState& state, SimTime now) {
    if (now != at_seconds(state.next_t_att)) {
        throw ProtocolError("self-attestation triggered off schedule");
    }
    const auto h = crypto::measure(state.region);
    const auto& good = *state.good_configs;
    const bool ok = std::binary_search(good.begin(), good.end(), h);
    state.self_result = ok;
    state.bitmask.reset_all_unknown();
    state.bitmask.set(state.id, ok ? CellStatus::Healthy : CellStatus::Compromised);
    state.t_att = state.next_t_att;
    std::tie(state.next_t_att, state.prng) =
        next_attestation_time(state.prng, state.t_att, state.delta_t_max);
}

AttestationMessage build_message(const ProverState& state, SimTime now) {
    if (!state.attested()) throw ProtocolError("no self-attestation yet; nothing to broadcast");
    AttestationMessage msg;
    msg.bitmask = state.bitmask;
    msg.t_stamp = whole_seconds(now);
    msg.t_att = state.t_att;
    msg.tag = crypto::mac_sign(state.key, mac_payload(msg.bitmask, msg.t_stamp, msg.t_att),
                               state.mac_algorithm);
    return msg;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Accepted: return "accepted";
        case Verdict::LengthMismatch: return "length_mismatch";
        case Verdict::Malformed: return "malformed";
        case Verdict::BadMac: return "bad_mac";
        case Verdict::StaleEpoch: return "stale_epoch";
        case Verdict::OutsideWindow: return "outside_window";
        case Verdict::NotAttested: return "not_attested";
    }
    return "?";
}

Verdict handle_message(ProverState& state, const AttestationMessage& msg, SimTime now,
                       ValidityWindow window) {
    if (!state.attested()) return Verdict::NotAttested;
    if (msg.bitmask.size() != state.bitmask.size()) return Verdict::LengthMismatch;
    if (!msg.bitmask.valid()) return Verdict::Malformed;
    if (!crypto::mac_verify(state.key, msg.tag, mac_payload(msg.bitmask, msg.t_stamp, msg.t_att),
                            state.mac_algorithm)) {
        return Verdict::BadMac;
    }
    if (msg.t_att != state.t_att) return Verdict::StaleEpoch;
    const auto stamp = at_seconds(msg.t_stamp);
    const auto earliest = at_seconds(state.t_att) - window.before_t_att;
    if (stamp < earliest || msg.t_stamp > whole_seconds(now)) return Verdict::OutsideWindow;
    state.bitmask.and_with(msg.bitmask);
    return Verdict::Accepted;
}

}  // namespace pads
