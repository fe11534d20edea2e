#include "doctest.h"
#include "pads/baseline.hpp"
#include "pads/error.hpp"
#include "pads/message.hpp"

using namespace pads;
using namespace std::chrono_literals;

namespace {

ScenarioConfig tree(std::size_t n, std::size_t br) {
    ScenarioConfig c;
    c.n = n;
    c.topology.kind = netsim::TopologyKind::StaticTree;
    c.topology.branching = br;
    c.baseline = BaselineKind::NaiveTreeAggregation;
    return c;
}

}  // namespace

TEST_CASE("single node: completion is one attestation") {
    const auto r = baseline::run_tree_baseline(tree(1, 2));
    CHECK(r.completion == 187ms);
    CHECK(r.messages == 0);
    CHECK(r.depth == 0);
}

TEST_CASE("three nodes, hand trace") {
    const auto c = tree(3, 2);
    const auto r = baseline::run_tree_baseline(c);
    // root signs (48), children verify (48), attest (187), sign report (48),
    // root verifies two reports back to back (96).
    const auto tx_q = c.radio.tx_time(baseline::kQueryBytes);
    const auto tx_r = c.radio.tx_time(message_byte_length(3));
    CHECK(r.completion == 427ms + tx_q + tx_r);
    CHECK(r.messages == 4);
    CHECK(r.depth == 1);
}

TEST_CASE("completion grows with n and a wider tree is faster at scale") {
    Duration prev{0};
    for (std::size_t n : {7, 63, 255, 1023}) {
        const auto r = baseline::run_tree_baseline(tree(n, 2));
        CHECK(r.completion > prev);
        CHECK(r.messages == 2 * (n - 1));
        prev = r.completion;
    }
    CHECK(baseline::run_tree_baseline(tree(1024, 3)).completion <
          baseline::run_tree_baseline(tree(1024, 2)).completion);
}

TEST_CASE("baseline needs a static tree") {
    auto c = tree(10, 2);
    c.topology.kind = netsim::TopologyKind::RandomMobility;
    c.baseline = BaselineKind::None;
    CHECK_THROWS_AS(baseline::run_tree_baseline(c), ConfigError);
}
