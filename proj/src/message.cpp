#include "pads/message.hpp"

#include "pads/error.hpp"

namespace pads {
namespace {

class BitWriter {
public:
    explicit BitWriter(std::size_t total_bits) : bytes_((total_bits + 7) / 8, 0) {}

    void put(std::uint64_t value, std::size_t bits) {
        for (std::size_t i = 0; i < bits;) {
            const auto byte = pos_ / 8;
            const auto offset = pos_ % 8;
            const auto take = std::min<std::size_t>(8 - offset, bits - i);
            const auto chunk = (value >> i) & ((1ULL << take) - 1);
            bytes_[byte] |= static_cast<std::uint8_t>(chunk << offset);
            pos_ += take;
            i += take;
        }
    }

    void put_bitmask(const ObservationBitmask& b) {
        auto remaining = 2 * b.size();
        for (auto w : b.words()) {
            const auto bits = std::min<std::size_t>(64, remaining);
            put(w, bits);
            remaining -= bits;
        }
    }

    std::vector<std::uint8_t> take() && { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint64_t get(std::size_t bits) {
        std::uint64_t value = 0;
        for (std::size_t i = 0; i < bits;) {
            const auto byte = pos_ / 8;
            const auto offset = pos_ % 8;
            const auto take = std::min<std::size_t>(8 - offset, bits - i);
            const auto chunk = (static_cast<std::uint64_t>(bytes_[byte]) >> offset) & ((1ULL << take) - 1);
            value |= chunk << i;
            pos_ += take;
            i += take;
        }
        return value;
    }

    std::size_t position() const { return pos_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

std::size_t AttestationMessage::bit_length() const { return message_bit_length(bitmask.size()); }

std::vector<std::uint8_t> mac_payload(const ObservationBitmask& bitmask, std::uint32_t t_stamp,
                                      std::uint32_t t_att) {
    BitWriter w(2 * bitmask.size() + 64);
    w.put_bitmask(bitmask);
    w.put(t_stamp, 32);
    w.put(t_att, 32);
    return std::move(w).take();
}

std::vector<std::uint8_t> encode(const AttestationMessage& msg) {
    BitWriter w(msg.bit_length());
    w.put_bitmask(msg.bitmask);
    w.put(msg.t_stamp, 32);
    w.put(msg.t_att, 32);
    for (auto b : msg.tag.bytes) w.put(b, 8);
    return std::move(w).take();
}

AttestationMessage decode(std::span<const std::uint8_t> bytes, std::size_t n) {
    if (bytes.size() != message_byte_length(n)) {
        throw ProtocolError("message length " + std::to_string(bytes.size()) + " B, expected " +
                            std::to_string(message_byte_length(n)) + " B for n=" + std::to_string(n));
    }
    BitReader r(bytes);
    std::vector<std::uint64_t> words((n + 31) / 32, 0);
    auto remaining = 2 * n;
    for (auto& w : words) {
        const auto bits = std::min<std::size_t>(64, remaining);
        w = r.get(bits);
        remaining -= bits;
    }
    AttestationMessage msg;
    msg.bitmask = ObservationBitmask::from_words(n, std::move(words));
    msg.t_stamp = static_cast<std::uint32_t>(r.get(32));
    msg.t_att = static_cast<std::uint32_t>(r.get(32));
    for (auto& b : msg.tag.bytes) b = static_cast<std::uint8_t>(r.get(8));
    const auto pad = bytes.size() * 8 - r.position();
    if (pad > 0 && r.get(pad) != 0) throw ProtocolError("nonzero padding bits");
    return msg;
}

}  // namespace pads
