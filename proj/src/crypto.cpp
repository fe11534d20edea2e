#include "pads/crypto.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <algorithm>
#include <string>

#include "pads/error.hpp"

namespace pads::crypto {
namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

PrngState::PrngState(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGamma) ^ (stream * 0xD1B54A32D192ED03ULL + 0x632BE59BD9B4E019ULL))) {}

std::uint64_t PrngState::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGamma);
}

std::uint32_t PrngState::next_u32() { return static_cast<std::uint32_t>(next_u64() >> 32); }

double PrngState::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double PrngState::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

__extension__ using u128 = unsigned __int128;

std::uint64_t PrngState::below(std::uint64_t bound) {
    // Lemire's multiply-shift with rejection.
    auto x = next_u64();
    auto m = static_cast<u128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = next_u64();
            m = static_cast<u128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

bool PrngState::bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return uniform() < p;
}

PrngState PrngState::fork(std::uint64_t stream) const {
    PrngState child;
    child.key_ = mix64(key_ ^ mix64(stream + 0x2545F4914F6CDD1DULL));
    return child;
}

std::pair<std::uint32_t, PrngState> prng_next(PrngState state) {
    const auto v = state.next_u32();
    return {v, state};
}

SymKey mac_keygen(std::size_t security_bits, PrngState& rng) {
    if (security_bits != 128 && security_bits != 160 && security_bits != 256) {
        throw ConfigError("unsupported key length " + std::to_string(security_bits) +
                          " bits (expected 128, 160 or 256)");
    }
    SymKey key;
    key.bytes.resize(security_bits / 8);
    for (auto& b : key.bytes) b = static_cast<std::uint8_t>(rng.next_u32() >> 24);
    return key;
}

MacTag mac_sign(const SymKey& key, std::span<const std::uint8_t> message, MacAlgorithm alg) {
    const EVP_MD* md = alg == MacAlgorithm::HmacSha1 ? EVP_sha1() : EVP_sha256();
    std::array<std::uint8_t, EVP_MAX_MD_SIZE> out{};
    unsigned int out_len = 0;
    // HMAC() tolerates a null data pointer only for zero-length input.
    static constexpr std::uint8_t kEmpty = 0;
    const auto* data = message.empty() ? &kEmpty : message.data();
    HMAC(md, key.bytes.data(), static_cast<int>(key.bytes.size()), data, message.size(), out.data(),
         &out_len);
    MacTag tag;
    std::copy_n(out.begin(), kTagBytes, tag.bytes.begin());
    return tag;
}

bool mac_verify(const SymKey& key, const MacTag& tag, std::span<const std::uint8_t> message,
                MacAlgorithm alg) {
    const auto expected = mac_sign(key, message, alg);
    return CRYPTO_memcmp(expected.bytes.data(), tag.bytes.data(), kTagBytes) == 0;
}

Measurement measure(std::span<const std::uint8_t> region) {
    if (region.empty()) throw InvalidInput("cannot measure an empty memory region");
    std::array<std::uint8_t, EVP_MAX_MD_SIZE> out{};
    unsigned int out_len = 0;
    EVP_Digest(region.data(), region.size(), out.data(), &out_len, EVP_sha1(), nullptr);
    Measurement m;
    std::copy_n(out.begin(), kDigestBytes, m.digest.begin());
    return m;
}

}  // namespace pads::crypto
