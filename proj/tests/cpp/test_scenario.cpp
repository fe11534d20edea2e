#include "doctest.h"
#include "json.hpp"
#include "pads/error.hpp"
#include "pads/scenario.hpp"

using namespace pads;
using namespace std::chrono_literals;

namespace {

std::string key_of(const std::string& text) {
    try {
        parse_config_text(text);
    } catch (const ConfigError& e) {
        return e.key_path();
    }
    return "<none>";
}

}  // namespace

TEST_CASE("minimal config takes the documented defaults") {
    std::vector<std::string> warnings;
    const auto c = parse_config_text(R"({"n": 128, "seeds": [1]})", &warnings);
    CHECK(warnings.empty());
    CHECK(c.n == 128);
    CHECK(c.mobile());
    CHECK(c.broadcast_period() == 500ms);
    CHECK(c.validity_window() == 1s);
    CHECK(c.radio.range_m == 75.0);
    CHECK(c.radio.data_rate_bps == 250000.0);
    CHECK(c.radio.frame_size_bytes == 127);
    CHECK(c.delays.mac == 48ms);
    CHECK(c.delays.attest == 187ms);
    CHECK(c.arena_geometry().width == doctest::Approx(1000));
    CHECK(c.protocol.key_bits == 160);
}

TEST_CASE("static trees default to a 100 ms period") {
    const auto c = parse_config_text(R"({"n": 15, "topology": {"kind": "static_tree", "branching": 3}})");
    CHECK(c.broadcast_period() == 100ms);
    CHECK(c.topology.branching == 3);
}

TEST_CASE("validation errors name the offending key") {
    CHECK(key_of(R"({"n": 0})") == "n");
    CHECK(key_of(R"({"n": 4, "bogus": 1})") == "bogus");
    CHECK(key_of(R"({"radio": {"range": 75}})") == "radio.range");
    CHECK(key_of(R"({"radio": {"loss_prob": 1.5}})") == "radio.loss_prob");
    CHECK(key_of(R"({"n": "ten"})") == "n");
    CHECK(key_of(R"({"n": -3})") == "n");
    CHECK(key_of(R"({"compromised_fraction": -0.1})") == "compromised_fraction");
    CHECK(key_of(R"({"protocol": {"key_bits": 100}})") == "protocol.key_bits");
    CHECK(key_of(R"({"protocol": {"broadcast_period_ms": 0}})") == "protocol.broadcast_period_ms");
    CHECK(key_of(R"({"delays": {"mac_ms": 0}})") == "delays.mac_ms");
    CHECK(key_of(R"({"n": 4, "adversary": {"soft": {"victims": [4]}}})") == "adversary.soft.victims");
    CHECK(key_of(R"({"adversary": {"com": {"drop_rate": 2}}})") == "adversary.com.drop_rate");
    CHECK(key_of(R"({"adversary": {"com": {"drops": 1}}})") == "adversary.com.drops");
    CHECK(key_of(R"({"coverage_targets": [[0.5, 0]]})") == "coverage_targets[0]");
    CHECK(key_of(R"({"seeds": []})") == "seeds");
    CHECK(key_of(R"({"seeds": [1, "x"]})") == "seeds[1]");
    CHECK(key_of(R"({"baseline": "naive_tree_aggregation"})") == "baseline");
    CHECK(key_of(R"({"baseline": "fastest"})") == "baseline");
    CHECK(key_of(R"({"topology": {"kind": "ring"}})") == "topology.kind");
    CHECK(key_of(R"({"n": 3, "topology": {"kind": "static_graph", "edges": [[0, 3]]}})") == "topology.edges[0]");
    CHECK(key_of(R"({"mobility": {"speed_min_mps": 5, "speed_max_mps": 2}})") == "mobility.speed_max_mps");
    CHECK(key_of(R"({"horizon_s": 0})") == "horizon_s");
    CHECK(key_of(R"({"n": 4, "topology": {"kind": "static_tree"}, "adversary": {"mob": {"victims": [1]}}})") ==
          "adversary.mob");
    CHECK(key_of("{not json") == "<root>");
}

TEST_CASE("duplicate seeds are dropped with a warning") {
    std::vector<std::string> warnings;
    const auto c = parse_config_text(R"({"seeds": [3, 1, 3, 2, 1]})", &warnings);
    CHECK(c.seeds == std::vector<std::uint64_t>{3, 1, 2});
    CHECK(warnings.size() == 2);
}

TEST_CASE("parse -> serialize -> parse is the identity") {
    const char* text = R"({
        "n": 200,
        "topology": {"kind": "static_graph", "edges": [[0, 1], [1, 2], [5, 199]]},
        "arena": {"base_side_m": 800, "width_m": 1234.5},
        "radio": {"range_m": 60, "loss_prob": 0.125, "frame_payload_bytes": 100},
        "mobility": {"speed_min_mps": 2, "speed_max_mps": 9, "tick_ms": 50, "warmup_s": 12.5},
        "protocol": {"broadcast_period_ms": 250, "delta_t_max_s": 77, "validity_window_ms": 750,
                     "inbox_capacity": 6, "key_bits": 256, "mac": "hmac-sha256", "region_bytes": 512,
                     "good_configs": 50},
        "delays": {"mac_ms": 12.5, "attest_ms": 300},
        "compromised_fraction": 0.6,
        "inactive_nodes": [7, 8],
        "adversary": {"com": {"drop_rate": 0.1, "replay": true, "forge": true, "inject_rate": 0.25,
                              "tamper_verifier": true},
                      "soft": {"victims": [1, 2], "tamper_offset_s": -3}},
        "energy": {"send_uj_per_byte": 0.5, "hmac_uj": 100},
        "coverage_targets": [[0.95, 0.95], [0.8, 0.5]],
        "verifier": {"queries_s": [0, 1.5], "position": [10, 20], "t_max_s": 90, "conservative": true},
        "seeds": [9, 4],
        "epochs": 2,
        "horizon_s": 42,
        "stop_when_covered": false,
        "output_dir": "out/x"
    })";
    const auto a = parse_config_text(text);
    const auto b = parse_config(to_json(a));
    CHECK(a == b);
    CHECK(to_json(a) == to_json(b));
    CHECK(a.protocol.mac == crypto::MacAlgorithm::HmacSha256);
    CHECK(a.energy.send_per_byte_j == doctest::Approx(0.5e-6));
    CHECK(a.verifier.queries[1] == 1500ms);

    const auto d = parse_config_text("{}");
    CHECK(parse_config(to_json(d)) == d);
}
