#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace pads::crypto {

inline constexpr std::size_t kTagBytes = 20;       // 160-bit tags
inline constexpr std::size_t kDigestBytes = 20;    // 160-bit measurements

/// Shared attestation key (k_att). All honest provers hold the same bytes.
struct SymKey {
    std::vector<std::uint8_t> bytes;

    std::size_t bits() const { return bytes.size() * 8; }
    friend bool operator==(const SymKey&, const SymKey&) = default;
};

struct MacTag {
    std::array<std::uint8_t, kTagBytes> bytes{};

    friend bool operator==(const MacTag&, const MacTag&) = default;
};

/// Configuration digest h over an attested memory region.
struct Measurement {
    std::array<std::uint8_t, kDigestBytes> digest{};

    friend auto operator<=>(const Measurement&, const Measurement&) = default;
};

enum class MacAlgorithm { HmacSha1, HmacSha256 };

/// Counter-based generator: output k is a pure function of (key, k), so a
/// stream is replayed exactly from its seed and step count. Independent
/// streams are split off by key derivation.
class PrngState {
public:
    PrngState() = default;
    explicit PrngState(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    bool bernoulli(double p);

    /// New independent stream derived from this state's key.
    PrngState fork(std::uint64_t stream) const;

    std::uint64_t key() const { return key_; }
    std::uint64_t counter() const { return counter_; }

    friend bool operator==(const PrngState&, const PrngState&) = default;

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

/// Returns the next 32-bit value and the advanced state.
std::pair<std::uint32_t, PrngState> prng_next(PrngState state);

/// security_bits in {128, 160, 256}; throws ConfigError otherwise.
SymKey mac_keygen(std::size_t security_bits, PrngState& rng);

MacTag mac_sign(const SymKey& key, std::span<const std::uint8_t> message,
                MacAlgorithm alg = MacAlgorithm::HmacSha1);

bool mac_verify(const SymKey& key, const MacTag& tag, std::span<const std::uint8_t> message,
                MacAlgorithm alg = MacAlgorithm::HmacSha1);

/// SHA-1 digest of the region. Throws InvalidInput on an empty region.
Measurement measure(std::span<const std::uint8_t> region);

}  // namespace pads::crypto
