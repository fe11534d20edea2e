#include "pads/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "pads/error.hpp"

namespace pads::metrics {
namespace {

// ceil(x * count) without 0.95*100 -> 96 style rounding surprises.
std::size_t required_provers(double x, std::size_t count) {
    const auto r = static_cast<std::size_t>(std::ceil(x * static_cast<double>(count) - 1e-9));
    return std::clamp<std::size_t>(r, 1, count);
}

void check_fraction(double x) {
    if (!(x > 0.0 && x <= 1.0)) throw InvalidInput("coverage fraction X must be in (0, 1]");
}

}  // namespace

double coverage(std::span<const ObservationBitmask> masks, std::span<const NodeId> reachable,
                double x) {
    check_fraction(x);
    if (reachable.empty()) throw InvalidInput("coverage undefined for an empty reachable set");
    std::vector<double> ratios;
    ratios.reserve(reachable.size());
    for (auto i : reachable) {
        std::size_t known = 0;
        for (auto j : reachable) {
            if (masks[i].get(j) != CellStatus::Unknown) ++known;
        }
        ratios.push_back(static_cast<double>(known) / static_cast<double>(reachable.size()));
    }
    std::sort(ratios.begin(), ratios.end(), std::greater<>());
    return ratios[required_provers(x, reachable.size()) - 1];
}

CoverageTracker::CoverageTracker(std::size_t n, std::vector<bool> reachable, std::vector<double> xs)
    : n_(n), reachable_(std::move(reachable)), xs_(std::move(xs)), known_(n, 0), at_least_(n + 2, 0) {
    if (reachable_.size() != n) throw InvalidInput("reachable mask size must equal n");
    reachable_count_ = static_cast<std::size_t>(std::count(reachable_.begin(), reachable_.end(), true));
    at_least_[0] = reachable_count_;
    for (auto x : xs_) {
        check_fraction(x);
        required_.push_back(reachable_count_ == 0 ? 1 : required_provers(x, reachable_count_));
    }
    level_.assign(xs_.size(), 0);
}

bool CoverageTracker::update(NodeId node, std::size_t known) {
    const auto old = known_[node];
    if (known <= old) return false;
    known_[node] = std::min(known, n_);
    if (!reachable_[node]) return false;
    for (auto c = old + 1; c <= known_[node]; ++c) ++at_least_[c];
    bool changed = false;
    for (std::size_t k = 0; k < xs_.size(); ++k) {
        while (level_[k] + 1 <= n_ && at_least_[level_[k] + 1] >= required_[k]) {
            ++level_[k];
            changed = true;
        }
    }
    return changed;
}

double CoverageTracker::y(std::size_t xi) const {
    if (reachable_count_ == 0) return 0.0;
    return static_cast<double>(level_[xi]) / static_cast<double>(reachable_count_);
}

std::optional<Duration> mct(std::span<const CoverageSample> series, double y_target, SimTime origin) {
    for (const auto& s : series) {
        if (s.y + 1e-12 >= y_target) return std::max(Duration{0}, s.t - origin);
    }
    return std::nullopt;
}

double representativity(const ObservationBitmask& bitmask) {
    if (bitmask.size() == 0) return 0.0;
    return static_cast<double>(bitmask.known_count()) / static_cast<double>(bitmask.size());
}

std::uint64_t message_bits(std::uint64_t n) {
    if (n < 1) throw InvalidInput("network size must be >= 1");
    return 2 * n + 224;
}

std::uint64_t memory_bits(std::uint64_t key_bits, std::uint64_t n, std::uint64_t h_size) {
    if (key_bits < 1 || n < 1 || h_size < 1) throw InvalidInput("memory_bits arguments must be >= 1");
    return key_bits + 2 * n + 160 * h_size;
}

double message_energy_bytes(std::size_t n) { return 28.0 + 2.0 * static_cast<double>(n) / 8.0; }

EnergyAccount::Breakdown EnergyAccount::energy(std::size_t n, const EnergyConstants& c) const {
    const auto bytes = message_energy_bytes(n);
    Breakdown b;
    b.send = static_cast<double>(sends) * c.send_per_byte_j * bytes;
    b.recv = static_cast<double>(receives) * c.recv_per_byte_j * bytes;
    b.hmac = static_cast<double>(sends + verifications) * c.hmac_j;
    b.min = static_cast<double>(combines) * c.min_j;
    b.attest = static_cast<double>(attestations) * c.attest_j;
    return b;
}

double EnergyAccount::bound(std::size_t n, const EnergyConstants& c) const {
    const auto bytes = message_energy_bytes(n);
    return static_cast<double>(attestations) * c.attest_j +
           static_cast<double>(sends) * (c.hmac_j + c.send_per_byte_j * bytes) +
           static_cast<double>(receives) * (c.hmac_j + c.recv_per_byte_j * bytes) +
           static_cast<double>(combines) * c.min_j;
}

const char* to_string(RejectCause c) {
    switch (c) {
        case RejectCause::LengthMismatch: return "length_mismatch";
        case RejectCause::Malformed: return "malformed";
        case RejectCause::BadMac: return "bad_mac";
        case RejectCause::StaleEpoch: return "stale_epoch";
        case RejectCause::OutsideWindow: return "outside_window";
        case RejectCause::NotAttested: return "not_attested";
        case RejectCause::InboxOverflow: return "inbox_overflow";
        case RejectCause::Superseded: return "superseded";
    }
    return "?";
}

std::uint64_t Counters::rejected_total() const {
    std::uint64_t t = 0;
    for (auto r : rejected) t += r;
    return t;
}

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Healthy: return "healthy";
        case Classification::Compromised: return "compromised";
        case Classification::Unknown: return "unknown";
    }
    return "?";
}

Classification classify(CellStatus s) {
    switch (s) {
        case CellStatus::Healthy: return Classification::Healthy;
        case CellStatus::Compromised: return Classification::Compromised;
        case CellStatus::Unknown: return Classification::Unknown;
    }
    return Classification::Unknown;
}

}  // namespace pads::metrics
