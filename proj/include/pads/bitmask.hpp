#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pads {

using NodeId = std::uint32_t;

/// Per-prover attestation status, 2 bits. Ordered 00 < 10 < 11, so the
/// minimum over observations is the most pessimistic known status, and the
/// set {00, 10, 11} is closed under bitwise AND. 01 never appears in honest
/// state.
enum class CellStatus : std::uint8_t {
    Compromised = 0b00,
    Healthy = 0b10,
    Unknown = 0b11,
};

constexpr bool is_valid_cell(std::uint8_t bits) { return bits == 0b00 || bits == 0b10 || bits == 0b11; }
const char* to_string(CellStatus s);

/// b_i(t): one 2-bit cell per prover, packed 32 cells per 64-bit word.
/// Cell j occupies bits 2j (low) and 2j+1 (high) of the little-endian bit
/// stream; unused bits of the last word stay zero.
class ObservationBitmask {
public:
    ObservationBitmask() = default;

    /// n cells, all Unknown.
    static ObservationBitmask all_unknown(std::size_t n);
    static ObservationBitmask from_cells(std::span<const CellStatus> cells);
    /// Raw construction used by the decoder; may hold 01 cells.
    static ObservationBitmask from_words(std::size_t n, std::vector<std::uint64_t> words);

    std::size_t size() const { return n_; }
    CellStatus get(std::size_t j) const;
    std::uint8_t raw(std::size_t j) const;
    void set(std::size_t j, CellStatus s);
    void reset_all_unknown();

    std::size_t count(CellStatus s) const;
    /// Cells that are not Unknown.
    std::size_t known_count() const { return n_ - count(CellStatus::Unknown); }
    /// True iff no cell holds the 01 pattern.
    bool valid() const;

    /// In-place cell-wise minimum, realised as bitwise AND. Throws
    /// ProtocolError on a length mismatch.
    void and_with(const ObservationBitmask& other);

    std::span<const std::uint64_t> words() const { return words_; }
    std::vector<CellStatus> cells() const;
    /// "10 11 00 ..." for diagnostics.
    std::string to_string() const;

    friend bool operator==(const ObservationBitmask&, const ObservationBitmask&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Minimum-consensus update: result[l] = min(own[l], min_r r[l]). Throws
/// ProtocolError on length mismatch or on any 01 cell in the inputs.
ObservationBitmask combine(const ObservationBitmask& own,
                           std::span<const ObservationBitmask> received);

}  // namespace pads
