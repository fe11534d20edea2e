#include "pads/bitmask.hpp"

#include <bit>
#include <utility>

#include "pads/error.hpp"

namespace pads {
namespace {

constexpr std::size_t kCellsPerWord = 32;
constexpr std::uint64_t kLowBits = 0x5555555555555555ULL;

std::size_t words_for(std::size_t n) { return (n + kCellsPerWord - 1) / kCellsPerWord; }

std::uint64_t used_mask(std::size_t n, std::size_t word) {
    const auto first = word * kCellsPerWord;
    const auto cells = std::min(kCellsPerWord, n - first);
    return cells == kCellsPerWord ? ~0ULL : ((1ULL << (2 * cells)) - 1);
}

}  // namespace

const char* to_string(CellStatus s) {
    switch (s) {
        case CellStatus::Compromised: return "compromised";
        case CellStatus::Healthy: return "healthy";
        case CellStatus::Unknown: return "unknown";
    }
    return "?";
}

ObservationBitmask ObservationBitmask::all_unknown(std::size_t n) {
    ObservationBitmask b;
    b.n_ = n;
    b.words_.assign(words_for(n), 0);
    b.reset_all_unknown();
    return b;
}

ObservationBitmask ObservationBitmask::from_cells(std::span<const CellStatus> cells) {
    auto b = all_unknown(cells.size());
    for (std::size_t j = 0; j < cells.size(); ++j) b.set(j, cells[j]);
    return b;
}

ObservationBitmask ObservationBitmask::from_words(std::size_t n, std::vector<std::uint64_t> words) {
    if (words.size() != words_for(n)) throw ProtocolError("bitmask word count does not match n");
    ObservationBitmask b;
    b.n_ = n;
    b.words_ = std::move(words);
    if (!b.words_.empty()) b.words_.back() &= used_mask(n, b.words_.size() - 1);
    return b;
}

std::uint8_t ObservationBitmask::raw(std::size_t j) const {
    return static_cast<std::uint8_t>((words_[j / kCellsPerWord] >> (2 * (j % kCellsPerWord))) & 0b11);
}

CellStatus ObservationBitmask::get(std::size_t j) const {
    if (j >= n_) throw InvalidInput("cell index out of range");
    return static_cast<CellStatus>(raw(j));
}

void ObservationBitmask::set(std::size_t j, CellStatus s) {
    if (j >= n_) throw InvalidInput("cell index out of range");
    auto& w = words_[j / kCellsPerWord];
    const auto shift = 2 * (j % kCellsPerWord);
    w = (w & ~(0b11ULL << shift)) | (static_cast<std::uint64_t>(s) << shift);
}

void ObservationBitmask::reset_all_unknown() {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = used_mask(n_, w);
}

std::size_t ObservationBitmask::count(CellStatus s) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        const auto lo = words_[w] & kLowBits;
        const auto hi = (words_[w] >> 1) & kLowBits;
        const auto valid = used_mask(n_, w) & kLowBits;
        std::uint64_t hits = 0;
        switch (s) {
            case CellStatus::Compromised: hits = ~lo & ~hi & valid; break;
            case CellStatus::Healthy: hits = ~lo & hi; break;
            case CellStatus::Unknown: hits = lo & hi; break;
        }
        total += static_cast<std::size_t>(std::popcount(hits));
    }
    return total;
}

bool ObservationBitmask::valid() const {
    for (auto w : words_) {
        const auto lo = w & kLowBits;
        const auto hi = (w >> 1) & kLowBits;
        if ((lo & ~hi) != 0) return false;
    }
    return true;
}

void ObservationBitmask::and_with(const ObservationBitmask& other) {
    if (other.n_ != n_) throw ProtocolError("bitmask length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
}

std::vector<CellStatus> ObservationBitmask::cells() const {
    std::vector<CellStatus> out(n_);
    for (std::size_t j = 0; j < n_; ++j) out[j] = static_cast<CellStatus>(raw(j));
    return out;
}

std::string ObservationBitmask::to_string() const {
    std::string s;
    s.reserve(n_ * 3);
    for (std::size_t j = 0; j < n_; ++j) {
        const auto v = raw(j);
        if (j) s.push_back(' ');
        s.push_back((v & 0b10) ? '1' : '0');
        s.push_back((v & 0b01) ? '1' : '0');
    }
    return s;
}

ObservationBitmask combine(const ObservationBitmask& own,
                           std::span<const ObservationBitmask> received) {
    if (!own.valid()) throw ProtocolError("malformed bitmask: 01 cell");
    ObservationBitmask out = own;
    for (const auto& r : received) {
        if (r.size() != own.size()) throw ProtocolError("bitmask length mismatch");
        if (!r.valid()) throw ProtocolError("malformed bitmask: 01 cell");
        out.and_with(r);
    }
    return out;
}

}  // namespace pads
