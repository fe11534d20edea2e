#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/crypto.hpp"
#include "pads/message.hpp"
#include "pads/time.hpp"

namespace pads {

/// Accepted timestamps lie in [T_att - before_t_att, now].
struct ValidityWindow {
    Duration before_t_att{std::chrono::seconds{1}};
};

/// Provisioned set H of known-good configuration digests, kept sorted.
using GoodConfigs = std::shared_ptr<const std::vector<crypto::Measurement>>;
GoodConfigs make_good_configs(std::vector<crypto::Measurement> digests);

struct ProverState {
    NodeId id = 0;
    crypto::SymKey key;
    crypto::MacAlgorithm mac_algorithm = crypto::MacAlgorithm::HmacSha1;
    GoodConfigs good_configs;
    /// Schedule generator seeded with the shared secret s_att.
    crypto::PrngState prng;
    ObservationBitmask bitmask;
    /// Attested memory image.
    std::vector<std::uint8_t> region;
    std::optional<bool> self_result;
    /// T_att of the current epoch (valid once attested()).
    std::uint32_t t_att = 0;
    std::uint32_t next_t_att = 0;
    std::uint32_t delta_t_max = 1;
    /// Set by the software adversary when it rewrites the region.
    bool compromised = false;

    bool attested() const { return self_result.has_value(); }
    std::size_t network_size() const { return bitmask.size(); }
};

/// Fresh prover with all cells Unknown and next_t_att drawn from the shared
/// schedule seed.
ProverState make_prover(NodeId id, std::size_t n, crypto::SymKey key, GoodConfigs good,
                        std::vector<std::uint8_t> region, crypto::PrngState schedule_seed,
                        std::uint32_t delta_t_max_s);

/// gap = 1 + (prng mod delta_t_max), so 0 < gap <= delta_t_max seconds.
std::pair<std::uint32_t, crypto::PrngState> next_attestation_time(crypto::PrngState prng,
                                                                  std::uint32_t current_t_att_s,
                                                                  std::uint32_t delta_t_max_s);

/// Attestation times shared by every prover holding the same seed.
struct AttestationSchedule {
    std::vector<std::uint32_t> t_att_sequence;
    std::uint32_t delta_t_max = 1;

    static AttestationSchedule generate(crypto::PrngState seed, std::uint32_t delta_t_max_s,
                                        std::size_t count);
};

/// Clock-triggered self-attestation. Sets the own cell to Healthy iff the
/// region's digest is in H (Compromised otherwise), resets every other
/// cell to Unknown and advances next_t_att. Throws ProtocolError unless
/// now == next_t_att.
void self_attest(ProverState& state, SimTime now);

/// Throws ProtocolError before the first self-attestation.
AttestationMessage build_message(const ProverState& state, SimTime now);

enum class Verdict : std::uint8_t {
    Accepted,
    LengthMismatch,
    Malformed,
    BadMac,
    StaleEpoch,
    OutsideWindow,
    NotAttested,
};

const char* to_string(Verdict v);

/// Validates a received message and folds it into the prover's bitmask.
/// Any failed check leaves the state untouched.
Verdict handle_message(ProverState& state, const AttestationMessage& msg, SimTime now,
                       ValidityWindow window);

}  // namespace pads
