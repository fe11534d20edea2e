#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/time.hpp"

namespace pads::metrics {

/// Y achieved for a given X at time t (one row of the coverage series).
struct CoverageSample {
    SimTime t;
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const CoverageSample&, const CoverageSample&) = default;
};

/// C_X = Y. Ratios are taken over the reachable population R: for each
/// prover in R, (# non-Unknown cells belonging to R) / |R|; Y is the
/// ceil(X*|R|)-th largest ratio. Throws InvalidInput if R is empty or X is
/// outside (0, 1].
double coverage(std::span<const ObservationBitmask> masks, std::span<const NodeId> reachable,
                double x);

/// Incremental coverage over a fixed reachable set. Known-cell counts only
/// grow within an epoch, so Y(X) is tracked with a >=-count histogram.
class CoverageTracker {
public:
    CoverageTracker(std::size_t n, std::vector<bool> reachable, std::vector<double> xs);

    /// Node `node` now holds `known` non-Unknown cells (all belonging to R).
    /// Returns true if any tracked Y changed.
    bool update(NodeId node, std::size_t known);

    std::size_t reachable_count() const { return reachable_count_; }
    const std::vector<double>& xs() const { return xs_; }
    double y(std::size_t xi) const;

private:
    std::size_t n_;
    std::vector<bool> reachable_;
    std::size_t reachable_count_ = 0;
    std::vector<double> xs_;
    std::vector<std::size_t> required_;   // ceil(X*|R|) per X
    std::vector<std::size_t> level_;      // current Y numerator per X
    std::vector<std::size_t> known_;      // per node
    std::vector<std::size_t> at_least_;   // #reachable nodes with known >= c
};

/// Earliest sample time at which Y >= y_target, measured from `origin`.
/// std::nullopt means the target was not reached within the series.
std::optional<Duration> mct(std::span<const CoverageSample> series, double y_target, SimTime origin);

/// Fraction of cells that are not Unknown.
double representativity(const ObservationBitmask& bitmask);

/// Consensus message size in bits: 2n + 224.
std::uint64_t message_bits(std::uint64_t n);

/// Per-prover protocol memory: key + bitmask + 160-bit digests in H.
std::uint64_t memory_bits(std::uint64_t key_bits, std::uint64_t n, std::uint64_t h_size);

/// Energy constants. Send/receive are per byte, the rest per operation.
/// Defaults are placeholder radio/MCU magnitudes.
struct EnergyConstants {
    double send_per_byte_j = 0.6e-6;
    double recv_per_byte_j = 0.67e-6;
    double hmac_j = 480e-6;
    double min_j = 1e-6;
    double attest_j = 1870e-6;
    friend bool operator==(const EnergyConstants&, const EnergyConstants&) = default;
};

/// Bytes charged per message: 28 + 2n/8.
double message_energy_bytes(std::size_t n);

/// Per-node operation counts; energy follows from them exactly.
struct EnergyAccount {
    std::uint64_t attestations = 0;
    std::uint64_t sends = 0;           // signed + broadcast messages
    std::uint64_t receives = 0;        // messages reassembled at the radio
    std::uint64_t verifications = 0;   // MAC checks performed
    std::uint64_t combines = 0;        // accepted messages folded in

    struct Breakdown {
        double send = 0, recv = 0, hmac = 0, min = 0, attest = 0;
        double total() const { return send + recv + hmac + min + attest; }
    };

    Breakdown energy(std::size_t n, const EnergyConstants& c) const;
    double total(std::size_t n, const EnergyConstants& c) const { return energy(n, c).total(); }

    /// E_att + sum over sends (E_hmac + E_send^i) + sum over received
    /// neighbour messages (E_hmac + E_recv^i), plus E_min per combine.
    double bound(std::size_t n, const EnergyConstants& c) const;
};

enum class RejectCause : std::uint8_t {
    LengthMismatch,
    Malformed,
    BadMac,
    StaleEpoch,
    OutsideWindow,
    NotAttested,
    InboxOverflow,
    Superseded,
};
inline constexpr std::size_t kRejectCauseCount = 8;
const char* to_string(RejectCause c);

struct Counters {
    std::uint64_t messages_sent = 0;
    std::uint64_t frames_sent = 0;
    std::uint64_t bytes_sent = 0;     // frames_sent * frame_size
    std::uint64_t deliveries = 0;     // messages reassembled at a receiver
    std::uint64_t frames_lost = 0;
    std::uint64_t accepted = 0;
    std::array<std::uint64_t, kRejectCauseCount> rejected{};
    // adversary bookkeeping
    std::uint64_t dropped_by_adversary = 0;
    std::uint64_t forged_injected = 0;
    std::uint64_t forged_accepted = 0;
    std::uint64_t replays_injected = 0;
    std::uint64_t replays_prior_epoch_injected = 0;
    std::uint64_t replays_prior_epoch_accepted = 0;

    std::uint64_t rejected_total() const;
};

enum class Classification : std::uint8_t { Healthy, Compromised, Unknown };
const char* to_string(Classification c);
Classification classify(CellStatus s);

}  // namespace pads::metrics
