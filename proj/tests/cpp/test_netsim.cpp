#include <algorithm>
#include <limits>
#include <sstream>

#include "doctest.h"
#include "pads/batch.hpp"
#include "pads/error.hpp"
#include "pads/netsim/engine.hpp"
#include "pads/netsim/event_queue.hpp"
#include "pads/netsim/radio.hpp"
#include "pads/netsim/rounds.hpp"
#include "pads/netsim/topology.hpp"

using namespace pads;
using namespace pads::netsim;
using namespace std::chrono_literals;

TEST_CASE("neighbors by distance") {
    std::vector<Vec2> pos{{0, 0}, {50, 0}, {130, 0}};
    std::vector<bool> up{true, true, true};
    CHECK(neighbors(pos, up, 0, 75) == std::vector<NodeId>{1});
    CHECK(neighbors(pos, up, 1, 75) == std::vector<NodeId>{0});
    CHECK(neighbors(pos, up, 2, 75).empty());   // 80 m from node 1
    up[1] = false;
    CHECK(neighbors(pos, up, 0, 75).empty());
}

TEST_CASE("spatial index matches brute force") {
    crypto::PrngState rng(3);
    const auto arena = Arena::scaled(300);
    std::vector<Vec2> pos;
    std::vector<bool> up;
    for (int i = 0; i < 300; ++i) {
        pos.push_back(arena.random_point(rng));
        up.push_back(rng.bernoulli(0.9));
    }
    SpatialIndex index(arena, 75);
    index.rebuild(pos, up);
    std::vector<NodeId> got;
    for (NodeId i = 0; i < 300; ++i) {
        if (!up[i]) continue;
        index.within_range(i, pos, got);
        CHECK(got == neighbors(pos, up, i, 75));
    }
    index.within_range(Vec2{arena.width / 2, arena.height / 2}, pos, got);
    for (auto j : got) CHECK(distance(pos[j], {arena.width / 2, arena.height / 2}) <= 75);
}

TEST_CASE("arena scaling keeps 1000x1000 m2 per 128 provers") {
    CHECK(Arena::scaled(128).area() == doctest::Approx(1e6));
    CHECK(Arena::scaled(1024).area() == doctest::Approx(8e6));
    CHECK(Arena::scaled(16384).area() == doctest::Approx(128e6));
}

TEST_CASE("random waypoint: kinematics, arrival and bounds") {
    crypto::PrngState rng(5);
    const Arena arena{1000, 1000};
    NodePose p;
    p.position = {0, 0};
    p.waypoint = {100, 0};
    p.velocity = {10, 0};
    auto q = mobility_step(p, 1s, rng, arena, {});
    CHECK(q.position.x == doctest::Approx(10));
    CHECK(q.position.y == doctest::Approx(0));

    NodePose arrived;
    arrived.position = arrived.waypoint = {500, 500};
    q = mobility_step(arrived, 100ms, rng, arena, {1, 15});
    CHECK(distance(q.waypoint, {500, 500}) > 0);
    CHECK(q.speed() >= 1.0);
    CHECK(q.speed() <= 15.0);

    CHECK_THROWS_AS(mobility_step(p, Duration{0}, rng, arena, {}), InvalidInput);

    auto pose = random_pose(arena, rng);
    for (int i = 0; i < 10000; ++i) {
        pose = mobility_step(pose, 100ms, rng, arena, {1, 15});
        CHECK(arena.contains(pose.position));
    }
}

TEST_CASE("radio timing and fragmentation") {
    const RadioModel r;
    CHECK(r.frame_time() == 4064us);
    CHECK(r.frames_for(60) == 1);
    CHECK(r.frames_for(284) == 3);
    CHECK(r.frames_for(102) == 1);
    CHECK(r.frames_for(103) == 2);
    const auto t = plan_broadcast(r, 284, 48ms);
    CHECK(t.frames == 3);
    CHECK(t.delivery_offset() == 48ms + 3 * 4064us);
}

TEST_CASE("static topologies") {
    const auto tree = StaticGraph::complete_tree(7, 2);
    CHECK(tree.neighbors(0).size() == 2);
    CHECK(tree.neighbors(1).size() == 3);
    CHECK(tree.neighbors(6).size() == 1);
    CHECK(tree.is_tree());
    CHECK(tree.diameter() == 4);
    const auto t3 = StaticGraph::complete_tree(13, 3);
    CHECK(t3.neighbors(0).size() == 3);
    CHECK(t3.diameter() == 4);

    std::vector<std::pair<NodeId, NodeId>> ring{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const auto g = StaticGraph::from_edges(4, ring);
    CHECK_FALSE(g.is_tree());
    CHECK(g.diameter() == 2);
    std::vector<std::pair<NodeId, NodeId>> split{{0, 1}};
    CHECK_FALSE(StaticGraph::from_edges(3, split).diameter().has_value());
    std::vector<std::pair<NodeId, NodeId>> bad{{0, 5}};
    CHECK_THROWS_AS(StaticGraph::from_edges(3, bad), ConfigError);
    std::vector<std::pair<NodeId, NodeId>> loop{{1, 1}};
    CHECK_THROWS_AS(StaticGraph::from_edges(3, loop), ConfigError);
}

TEST_CASE("event queue orders by time, then insertion") {
    EventQueue<int> q;
    q.push(at_us(5), 1);
    q.push(at_us(3), 2);
    q.push(at_us(5), 3);
    q.push(at_us(3), 4);
    std::vector<int> order;
    while (!q.empty()) order.push_back(q.pop().payload);
    CHECK(order == std::vector<int>{2, 4, 1, 3});
}

namespace {

ScenarioConfig two_node_static() {
    ScenarioConfig c;
    c.n = 2;
    c.topology.kind = TopologyKind::StaticGraph;
    c.topology.edges = {{0, 1}};
    c.protocol.broadcast_period = 500ms;
    c.coverage_targets = {{1.0, 1.0}};
    c.horizon = 10s;
    return c;
}

}  // namespace

TEST_CASE("two nodes in range exchange once and converge to [10, 10]") {
    auto cfg = two_node_static();
    const auto r = run(cfg, 1);
    REQUIRE(r.ledger.epochs.size() == 1);
    const auto& ep = r.ledger.epochs[0];
    for (const auto& s : r.final_states) CHECK(s.bitmask.to_string() == "10 10");
    REQUIRE(ep.mct[0].has_value());
    // Lower bound: attest, sign, one frame, verify. Upper bound adds the
    // largest phase and one sign slot the receiver may be busy with.
    const auto frame = 4064us;
    CHECK(*ep.mct[0] >= 187ms + 48ms + frame + 48ms);
    CHECK(*ep.mct[0] <= 187ms + 500ms + 48ms + frame + 48ms + 48ms);
    CHECK(ep.reachable == std::vector<NodeId>{0, 1});

    // Same exchange between mobile nodes sharing a tiny arena.
    ScenarioConfig m = cfg;
    m.topology = {};
    m.arena.width_m = 20;
    m.arena.height_m = 20;
    const auto rm = run(m, 1);
    for (const auto& s : rm.final_states) CHECK(s.bitmask.to_string() == "10 10");
    CHECK(rm.ledger.epochs[0].mct[0].has_value());
}

TEST_CASE("single node covers itself at the attestation instant") {
    ScenarioConfig c;
    c.n = 1;
    c.topology.kind = TopologyKind::StaticGraph;
    c.coverage_targets = {{1.0, 1.0}};
    const auto r = run(c, 4);
    REQUIRE(r.ledger.epochs.size() == 1);
    CHECK(r.ledger.epochs[0].mct[0] == Duration{0});
    CHECK(r.end == at_seconds(r.ledger.epochs[0].t_att));
}

TEST_CASE("first coverage sample is 1/|R| at T_att") {
    ScenarioConfig c;
    c.n = 64;
    c.topology.kind = TopologyKind::StaticTree;
    c.coverage_targets = {{0.5, 1.0 / 64}, {0.95, 0.95}};
    c.stop_when_covered = false;
    c.horizon = 10s;
    const auto r = run(c, 2);
    const auto& ep = r.ledger.epochs[0];
    REQUIRE(ep.reachable.size() == 64);
    CHECK(ep.mct[0] == Duration{0});
    const auto& first = ep.coverage[0].samples.front();
    CHECK(first.t == at_seconds(ep.t_att));
    CHECK(first.y == doctest::Approx(1.0 / 64));
    // Lossless static tree converges completely.
    for (const auto& s : r.final_states) CHECK(s.bitmask.count(CellStatus::Healthy) == 64);
}

TEST_CASE("unreachable node stays Unknown everywhere") {
    ScenarioConfig c;
    c.n = 15;
    c.topology.kind = TopologyKind::StaticGraph;
    for (NodeId i = 0; i + 1 < 15; ++i) c.topology.edges.push_back({i, i + 1});
    c.inactive_nodes = {14};
    c.horizon = 30s;
    const auto r = run(c, 5);
    for (NodeId i = 0; i < 14; ++i) {
        CHECK(r.final_states[i].bitmask.get(14) == CellStatus::Unknown);
        CHECK(r.final_states[i].bitmask.count(CellStatus::Healthy) == 14);
    }
    CHECK(r.ledger.epochs[0].reachable.size() == 14);
    CHECK(r.ledger.final_classification[14] == metrics::Classification::Unknown);
}

TEST_CASE("loss probability 1 delivers nothing") {
    ScenarioConfig c;
    c.n = 16;
    c.topology.kind = TopologyKind::StaticTree;
    c.radio.loss_prob = 1.0;
    c.horizon = 5s;
    const auto r = run(c, 6);
    CHECK(r.ledger.counters.deliveries == 0);
    CHECK(r.ledger.counters.frames_lost > 0);
    CHECK(r.ledger.epochs[0].reachable.empty());
    CHECK_FALSE(r.ledger.epochs[0].mct[0].has_value());
    for (NodeId i = 0; i < 16; ++i) CHECK(r.final_states[i].bitmask.known_count() == 1);
}

TEST_CASE("counters, fragmentation and energy accounting stay consistent") {
    ScenarioConfig c;
    c.n = 1024;
    c.topology.kind = TopologyKind::StaticTree;
    c.horizon = 3s;
    c.stop_when_covered = false;
    const auto r = run(c, 7);
    const auto& k = r.ledger.counters;
    CHECK(k.messages_sent > 0);
    CHECK(k.frames_sent == 3 * k.messages_sent);
    CHECK(k.bytes_sent == 127 * k.frames_sent);
    std::uint64_t sends = 0, receives = 0;
    for (const auto& e : r.ledger.energy) {
        sends += e.sends;
        receives += e.receives;
        CHECK(e.attestations == 1);
        CHECK(e.verifications <= e.receives);
        CHECK(e.combines <= e.verifications);
        CHECK(e.total(c.n, c.energy) <= e.bound(c.n, c.energy) + 1e-15);
    }
    CHECK(sends >= k.messages_sent);
    CHECK(receives == k.deliveries);
}

TEST_CASE("same seed, identical CSV; different seed, different CSV") {
    ScenarioConfig c;
    c.n = 64;
    c.coverage_targets = {{0.95, 0.5}, {0.95, 0.95}};
    c.verifier.queries = {0s, 2s, 20s};
    const auto a = run(c, 11);
    const auto b = run(c, 11);
    CHECK(coverage_csv(a) == coverage_csv(b));
    CHECK(summary_csv(c, a) == summary_csv(c, b));
    CHECK(verifier_csv(a) == verifier_csv(b));
    std::ostringstream ta, tb;
    run(c, 11, &ta);
    run(c, 11, &tb);
    CHECK(ta.str() == tb.str());
    CHECK_FALSE(ta.str().empty());
    CHECK(coverage_csv(run(c, 12)) != coverage_csv(a));
}

TEST_CASE("coverage series is nondecreasing and ends at the tracked MCT") {
    ScenarioConfig c;
    c.n = 128;
    c.coverage_targets = {{0.95, 0.95}};
    const auto r = run(c, 3);
    for (const auto& ep : r.ledger.epochs) {
        for (const auto& series : ep.coverage) {
            for (std::size_t i = 1; i < series.samples.size(); ++i) {
                CHECK(series.samples[i].y >= series.samples[i - 1].y);
                CHECK(series.samples[i].t > series.samples[i - 1].t);
            }
        }
    }
}

TEST_CASE("final coverage equals the definition recomputed from bitmasks") {
    ScenarioConfig c;
    c.n = 96;
    c.coverage_targets = {{0.5, 0.5}, {0.9, 0.3}};
    c.horizon = 20s;
    const auto r = run(c, 8);
    const auto& ep = r.ledger.epochs[0];
    REQUIRE_FALSE(ep.reachable.empty());
    for (std::size_t k = 0; k < ep.coverage.size(); ++k) {
        const double y = metrics::coverage(ep.final_bitmasks, ep.reachable, ep.coverage[k].x);
        CHECK(ep.coverage[k].samples.back().y == doctest::Approx(y));
    }
    // Representativity of each prover equals its known share of n.
    for (const auto& s : r.final_states) {
        CHECK(metrics::representativity(s.bitmask) ==
              doctest::Approx(static_cast<double>(s.bitmask.known_count()) / c.n));
    }
}

TEST_CASE("epoch soundness: every known cell traces back to its owner's self-attestation") {
    ScenarioConfig c;
    c.n = 80;
    c.compromised_fraction = 0.25;
    c.epochs = 3;
    c.protocol.delta_t_max_s = 20;
    c.horizon = 20s;
    const auto r = run(c, 9);
    REQUIRE(r.ledger.epochs.size() == 3);
    for (const auto& ep : r.ledger.epochs) {
        for (const auto& mask : ep.final_bitmasks) {
            for (NodeId j = 0; j < c.n; ++j) {
                const auto cell = mask.get(j);
                if (cell != CellStatus::Unknown) CHECK(cell == ep.ground_truth[j]);
            }
        }
    }
    CHECK(r.ledger.counters.rejected[static_cast<std::size_t>(metrics::RejectCause::BadMac)] == 0);
}

TEST_CASE("synchronous rounds on a path converge in diameter rounds") {
    const std::size_t n = 6;
    StaticGraph g(n);
    for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    crypto::PrngState rng(1);
    const auto key = crypto::mac_keygen(160, rng);
    std::vector<std::uint8_t> image(32, 1);
    const auto good = make_good_configs({crypto::measure(image)});
    std::vector<ProverState> ps;
    crypto::PrngState sched(2);
    for (NodeId i = 0; i < n; ++i) ps.push_back(make_prover(i, n, key, good, image, sched, 5));
    const auto t = at_seconds(ps[0].next_t_att);
    for (auto& p : ps) self_attest(p, t);
    const auto res = run_synchronous_rounds(g, ps, 50, t);
    CHECK(res.converged);
    CHECK(res.rounds == 5);
    for (const auto& p : ps) CHECK(p.bitmask.count(CellStatus::Healthy) == n);
}
