#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/crypto.hpp"

namespace pads {

/// Wire unit broadcast during consensus.
///
/// Layout is a little-endian bit stream with no padding between fields:
///   bits [0, 2n)            bitmask, cell j at bits 2j (low), 2j+1 (high)
///   bits [2n, 2n+32)        t_stamp, whole seconds since scenario start
///   bits [2n+32, 2n+64)     t_att, whole seconds since scenario start
///   bits [2n+64, 2n+224)    160-bit MAC tag over the first 2n+64 bits
/// The encoded byte string is ceil((2n+224)/8) bytes; trailing pad bits are 0.
struct AttestationMessage {
    ObservationBitmask bitmask;
    std::uint32_t t_stamp = 0;
    std::uint32_t t_att = 0;
    crypto::MacTag tag;

    std::size_t bit_length() const;
    friend bool operator==(const AttestationMessage&, const AttestationMessage&) = default;
};

constexpr std::uint64_t message_bit_length(std::uint64_t n) { return 2 * n + 224; }
constexpr std::uint64_t message_byte_length(std::uint64_t n) { return (message_bit_length(n) + 7) / 8; }

/// Bytes covered by the MAC: bitmask || t_stamp || t_att, bit-packed as on
/// the wire (2n+64 bits, zero padded to a byte boundary).
std::vector<std::uint8_t> mac_payload(const ObservationBitmask& bitmask, std::uint32_t t_stamp,
                                      std::uint32_t t_att);

std::vector<std::uint8_t> encode(const AttestationMessage& msg);

/// Throws ProtocolError if the length does not match n or pad bits are set.
/// 01 cells are decoded as-is; receivers reject them as malformed.
AttestationMessage decode(std::span<const std::uint8_t> bytes, std::size_t n);

}  // namespace pads
