#include <set>
#include <string>

#include "doctest.h"
#include "pads/crypto.hpp"
#include "pads/error.hpp"

using namespace pads;
using namespace pads::crypto;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

std::string hex(std::span<const std::uint8_t> b) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (auto v : b) {
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 15]);
    }
    return out;
}

std::vector<std::uint8_t> random_bytes(PrngState& rng, std::size_t len) {
    std::vector<std::uint8_t> v(len);
    for (auto& b : v) b = static_cast<std::uint8_t>(rng.next_u32());
    return v;
}

}  // namespace

TEST_CASE("HMAC-SHA1 matches RFC 2202 vectors") {
    // Test case 1: key = 0x0b * 20, data = "Hi There".
    SymKey k1{std::vector<std::uint8_t>(20, 0x0b)};
    CHECK(hex(mac_sign(k1, bytes_of("Hi There")).bytes) == "b617318655057264e28bc0b6fb378c8ef146be00");
    // Test case 2: key = "Jefe".
    SymKey k2{bytes_of("Jefe")};
    CHECK(hex(mac_sign(k2, bytes_of("what do ya want for nothing?")).bytes) ==
          "effcdf6ae5eb2fa2d27416d5f184df9c259a7c79");
}

TEST_CASE("HMAC-SHA256 tags are the first 160 bits of the RFC 4231 value") {
    SymKey k{std::vector<std::uint8_t>(20, 0x0b)};
    CHECK(hex(mac_sign(k, bytes_of("Hi There"), MacAlgorithm::HmacSha256).bytes) ==
          "b0344c61d8db38535ca8afceaf0bf12b881dc200");
}

TEST_CASE("SHA-1 measurement of 'abc'") {
    CHECK(hex(measure(bytes_of("abc")).digest) == "a9993e364706816aba3e25717850c26c9cd0d89d");
}

TEST_CASE("measure rejects an empty region") {
    std::vector<std::uint8_t> empty;
    CHECK_THROWS_AS(measure(empty), InvalidInput);
}

TEST_CASE("measure: one flipped byte changes the digest at every position") {
    PrngState rng(7);
    auto region = random_bytes(rng, 256);
    const auto h = measure(region);
    for (std::size_t i = 0; i < region.size(); ++i) {
        region[i] ^= 0x01;
        CHECK(measure(region) != h);
        region[i] ^= 0x01;
    }
    CHECK(measure(region) == h);
}

TEST_CASE("mac_keygen lengths and errors") {
    PrngState rng(1);
    CHECK(mac_keygen(160, rng).bytes.size() == 20);
    CHECK(mac_keygen(128, rng).bytes.size() == 16);
    CHECK(mac_keygen(256, rng).bytes.size() == 32);
    CHECK_THROWS_AS(mac_keygen(64, rng), ConfigError);
    CHECK_THROWS_AS(mac_keygen(161, rng), ConfigError);
}

TEST_CASE("mac_keygen replays from the same seed") {
    PrngState a(42), b(42), c(43);
    const auto ka = mac_keygen(160, a);
    CHECK(ka == mac_keygen(160, b));
    CHECK(ka != mac_keygen(160, c));
}

TEST_CASE("mac round trip, determinism and tamper detection") {
    PrngState rng(3);
    const auto key = mac_keygen(160, rng);
    const auto m = random_bytes(rng, 60);
    const auto tag = mac_sign(key, m);
    CHECK(tag == mac_sign(key, m));
    CHECK(mac_verify(key, tag, m));
    // Every single-bit flip is rejected.
    auto flipped = m;
    for (std::size_t bit = 0; bit < m.size() * 8; ++bit) {
        flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        CHECK_FALSE(mac_verify(key, tag, flipped));
        flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
    }
    // A flipped tag bit is rejected too.
    auto bad = tag;
    bad.bytes[5] ^= 0x80;
    CHECK_FALSE(mac_verify(key, bad, m));
}

TEST_CASE("mac collision scan over 10^4 message pairs and key pairs") {
    PrngState rng(11);
    const auto key = mac_keygen(160, rng);
    std::size_t message_collisions = 0, key_collisions = 0, wrong_key_accepts = 0;
    for (int i = 0; i < 10000; ++i) {
        auto m1 = random_bytes(rng, 32);
        auto m2 = random_bytes(rng, 32);
        if (m1 == m2) m2[0] ^= 1;
        if (mac_sign(key, m1) == mac_sign(key, m2)) ++message_collisions;
        const auto other = mac_keygen(160, rng);
        const auto tag = mac_sign(key, m1);
        if (mac_sign(other, m1) == tag) ++key_collisions;
        if (mac_verify(other, tag, m1)) ++wrong_key_accepts;
    }
    CHECK(message_collisions == 0);
    CHECK(key_collisions == 0);
    CHECK(wrong_key_accepts == 0);
}

TEST_CASE("prng: replay, divergence and no immediate repeats") {
    PrngState a(99), b(99);
    for (int i = 0; i < 5; ++i) {
        auto [va, na] = prng_next(a);
        auto [vb, nb] = prng_next(b);
        CHECK(va == vb);
        a = na;
        b = nb;
    }
    CHECK(a == b);

    // Distinct seeds differ within the first 4 outputs (100 pairs).
    for (std::uint64_t s = 0; s < 100; ++s) {
        PrngState x(s), y(s + 1000);
        bool differ = false;
        for (int i = 0; i < 4; ++i) differ |= (x.next_u32() != y.next_u32());
        CHECK(differ);
    }

    PrngState r(5);
    auto prev = r.next_u32();
    std::size_t repeats = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto v = r.next_u32();
        if (v == prev) ++repeats;
        prev = v;
    }
    CHECK(repeats == 0);
}

TEST_CASE("prng: below stays in range and covers it") {
    PrngState r(8);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const auto v = r.below(7);
        CHECK(v < 7);
        seen.insert(v);
    }
    CHECK(seen.size() == 7);
    for (int i = 0; i < 1000; ++i) {
        const auto u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}

TEST_CASE("prng: forked streams are independent of the parent's position") {
    PrngState root(17);
    const auto f1 = root.fork(3);
    root.next_u64();
    CHECK(root.fork(3) == f1);
    CHECK(root.fork(4) != f1);
}
