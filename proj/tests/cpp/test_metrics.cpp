#include <algorithm>

#include "doctest.h"
#include "pads/crypto.hpp"
#include "pads/error.hpp"
#include "pads/metrics.hpp"

using namespace pads;
using namespace pads::metrics;

namespace {

// Oracle straight from the definition, with X given as the exact fraction
// num/den: the largest k/|R| such that at least ceil(X|R|) reachable provers
// each know at least k reachable provers.
double coverage_oracle(const std::vector<ObservationBitmask>& masks, const std::vector<NodeId>& r, std::size_t num,
                       std::size_t den) {
    const std::size_t need = (num * r.size() + den - 1) / den;
    double best = 0;
    for (std::size_t k = 0; k <= r.size(); ++k) {
        std::size_t holders = 0;
        for (auto i : r) {
            std::size_t known = 0;
            for (auto j : r) known += masks[i].get(j) != CellStatus::Unknown;
            if (known >= k) ++holders;
        }
        if (holders >= need) best = static_cast<double>(k) / static_cast<double>(r.size());
    }
    return best;
}

}  // namespace

TEST_CASE("coverage: 80% of the 90 reachable provers know 90% of them") {
    const std::size_t n = 100;
    std::vector<NodeId> reachable;
    for (NodeId i = 0; i < 90; ++i) reachable.push_back(i);
    std::vector<ObservationBitmask> masks(n, ObservationBitmask::all_unknown(n));
    // Provers 0..71 (72 = 80% of 90) know 81 reachable provers (90%); the rest know 40.
    for (NodeId i = 0; i < 90; ++i) {
        const std::size_t known = i < 72 ? 81 : 40;
        for (NodeId j = 0; j < known; ++j) masks[i].set((i + j) % 90, CellStatus::Healthy);
    }
    CHECK(coverage(masks, reachable, 0.8) == doctest::Approx(0.9));
    CHECK(coverage(masks, reachable, 0.8) == coverage_oracle(masks, reachable, 8, 10));
    // Asking for more holders than know 90% falls back to the weaker group.
    CHECK(coverage(masks, reachable, 0.9) == doctest::Approx(40.0 / 90.0));
}

TEST_CASE("coverage: self-knowledge only gives 1/|R|, full knowledge gives 1") {
    const std::size_t n = 10;
    std::vector<NodeId> r{0, 1, 2, 3, 4, 5, 6, 7};
    std::vector<ObservationBitmask> masks(n, ObservationBitmask::all_unknown(n));
    for (NodeId i = 0; i < n; ++i) masks[i].set(i, CellStatus::Healthy);
    for (double x : {0.1, 0.5, 1.0}) CHECK(coverage(masks, r, x) == doctest::Approx(1.0 / 8));
    for (auto& m : masks) {
        for (NodeId j = 0; j < n; ++j) m.set(j, CellStatus::Healthy);
    }
    for (double x : {0.1, 0.5, 1.0}) CHECK(coverage(masks, r, x) == 1.0);
    CHECK_THROWS_AS(coverage(masks, {}, 0.5), InvalidInput);
    CHECK_THROWS_AS(coverage(masks, r, 0.0), InvalidInput);
    CHECK_THROWS_AS(coverage(masks, r, 1.5), InvalidInput);
}

TEST_CASE("coverage and tracker agree with the definition oracle on random states") {
    crypto::PrngState rng(31);
    const std::pair<std::size_t, std::size_t> fractions[] = {{1, 2}, {4, 5}, {19, 20}, {1, 1}, {1, 10}};
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(60);
        std::vector<bool> in_r(n);
        std::vector<NodeId> r;
        for (NodeId i = 0; i < n; ++i) {
            in_r[i] = rng.bernoulli(0.8);
            if (in_r[i]) r.push_back(i);
        }
        if (r.empty()) continue;
        std::vector<double> xs;
        for (auto [a, b] : fractions) xs.push_back(static_cast<double>(a) / static_cast<double>(b));
        CoverageTracker tracker(n, in_r, xs);
        std::vector<ObservationBitmask> masks(n, ObservationBitmask::all_unknown(n));
        // Grow knowledge step by step (only of reachable provers, as in a run).
        for (int step = 0; step < 40; ++step) {
            const auto i = r[rng.below(r.size())];
            const auto j = r[rng.below(r.size())];
            masks[i].set(j, CellStatus::Healthy);
            tracker.update(i, masks[i].known_count());
            for (std::size_t k = 0; k < xs.size(); ++k) {
                const auto expect = coverage_oracle(masks, r, fractions[k].first, fractions[k].second);
                CHECK(coverage(masks, r, xs[k]) == doctest::Approx(expect));
                CHECK(tracker.y(k) == doctest::Approx(expect));
            }
        }
    }
}

TEST_CASE("mct: first crossing, zero at the origin, not-reached, monotone in the target") {
    const auto t0 = at_seconds(10);
    std::vector<CoverageSample> s{{t0, 0.95, 0.1},
                                  {t0 + std::chrono::seconds{2}, 0.95, 0.5},
                                  {t0 + std::chrono::seconds{5}, 0.95, 0.9}};
    CHECK(mct(s, 0.1, t0) == Duration{0});
    CHECK(mct(s, 0.5, t0) == std::chrono::seconds{2});
    CHECK(mct(s, 0.6, t0) == std::chrono::seconds{5});
    CHECK_FALSE(mct(s, 0.95, t0).has_value());
    Duration prev{0};
    for (double y = 0.05; y <= 0.9; y += 0.05) {
        const auto m = mct(s, y, t0);
        REQUIRE(m.has_value());
        CHECK(*m >= prev);
        prev = *m;
    }
}

TEST_CASE("representativity") {
    auto b = ObservationBitmask::all_unknown(8);
    b.set(3, CellStatus::Healthy);
    CHECK(representativity(b) == doctest::Approx(1.0 / 8));
    for (NodeId j : {0u, 1u, 2u, 4u}) b.set(j, CellStatus::Compromised);
    CHECK(representativity(b) == doctest::Approx(0.625));
    for (NodeId j = 0; j < 8; ++j) b.set(j, CellStatus::Healthy);
    CHECK(representativity(b) == 1.0);
}

TEST_CASE("message and memory overhead formulas") {
    CHECK(message_bits(128) == 480);
    CHECK(message_bits(1) == 226);
    CHECK(message_bits(16384) == 32992);
    CHECK_THROWS_AS(message_bits(0), InvalidInput);
    CHECK(memory_bits(160, 128, 1) == 576);
    CHECK(memory_bits(160, 128, 50) == 8416);
    CHECK(memory_bits(160, 1, 1) == 322);
    CHECK_THROWS_AS(memory_bits(0, 1, 1), InvalidInput);
    CHECK_THROWS_AS(memory_bits(160, 1, 0), InvalidInput);
}

TEST_CASE("energy accounting") {
    const EnergyConstants c;
    CHECK(message_energy_bytes(128) == 60.0);
    EnergyAccount one_send;
    one_send.sends = 1;
    CHECK(one_send.energy(128, c).send == doctest::Approx(36e-6));

    EnergyAccount idle;
    idle.attestations = 1;
    CHECK(idle.total(128, c) == doctest::Approx(c.attest_j));
    CHECK(idle.bound(128, c) == doctest::Approx(c.attest_j));

    EnergyAccount a;
    a.attestations = 2;
    a.sends = 10;
    a.receives = 25;
    a.verifications = 20;
    a.combines = 18;
    const auto e = a.energy(128, c);
    const double expect = 2 * c.attest_j + 10 * 60 * c.send_per_byte_j + 25 * 60 * c.recv_per_byte_j +
                          30 * c.hmac_j + 18 * c.min_j;
    CHECK(e.total() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(a.total(128, c) <= a.bound(128, c));
}
