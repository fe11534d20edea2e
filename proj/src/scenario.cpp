#include "pads/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "pads/error.hpp"

namespace pads {

using nlohmann::json;

namespace {

double from_uj(double uj) { return uj / 1e6; }

// Microjoule value that maps back to exactly `j` through from_uj.
double to_uj(double j) {
    double u = j * 1e6;
    for (int i = 0; i < 8 && from_uj(u) != j; ++i) {
        u = std::nextafter(u, from_uj(u) < j ? HUGE_VAL : -HUGE_VAL);
    }
    return u;
}

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

/// Walks one JSON object, remembers which keys were consumed and rejects the
/// rest when finished.
class ObjectReader {
public:
    ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
        if (!obj_.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
    }

    ~ObjectReader() noexcept(false) {
        if (std::uncaught_exceptions() > 0) return;
        for (const auto& [key, _] : obj_.items()) {
            if (!seen_.contains(key)) throw ConfigError(join(path_, key), "unknown key");
        }
    }

    const json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = obj_.find(key);
        if (it == obj_.end() || it->is_null()) return nullptr;
        return &*it;
    }

    std::string path(const std::string& key) const { return join(path_, key); }

    void number(const std::string& key, double& out) {
        if (const auto* v = find(key)) {
            if (!v->is_number()) throw ConfigError(path(key), "expected a number");
            out = v->get<double>();
        }
    }
    void number(const std::string& key, std::optional<double>& out) {
        if (const auto* v = find(key)) {
            if (!v->is_number()) throw ConfigError(path(key), "expected a number");
            out = v->get<double>();
        }
    }
    template <class Int>
    void integer(const std::string& key, Int& out) {
        if (const auto* v = find(key)) {
            if (!v->is_number_integer()) throw ConfigError(path(key), "expected an integer");
            if (v->is_number_unsigned() || v->get<std::int64_t>() >= 0) {
                out = static_cast<Int>(v->get<std::uint64_t>());
            } else {
                throw ConfigError(path(key), "must be non-negative");
            }
        }
    }
    void boolean(const std::string& key, bool& out) {
        if (const auto* v = find(key)) {
            if (!v->is_boolean()) throw ConfigError(path(key), "expected true or false");
            out = v->get<bool>();
        }
    }
    void string(const std::string& key, std::string& out) {
        if (const auto* v = find(key)) {
            if (!v->is_string()) throw ConfigError(path(key), "expected a string");
            out = v->get<std::string>();
        }
    }
    void millis(const std::string& key, Duration& out) {
        std::optional<double> ms;
        number(key, ms);
        if (ms) out = from_millis(*ms);
    }
    void millis(const std::string& key, std::optional<Duration>& out) {
        std::optional<double> ms;
        number(key, ms);
        if (ms) out = from_millis(*ms);
    }
    void seconds(const std::string& key, Duration& out) {
        std::optional<double> s;
        number(key, s);
        if (s) out = from_seconds(*s);
    }
    void seconds(const std::string& key, std::optional<Duration>& out) {
        std::optional<double> s;
        number(key, s);
        if (s) out = from_seconds(*s);
    }
    void node_list(const std::string& key, std::vector<NodeId>& out) {
        if (const auto* v = find(key)) {
            if (!v->is_array()) throw ConfigError(path(key), "expected an array of node ids");
            out.clear();
            for (std::size_t i = 0; i < v->size(); ++i) {
                const auto& e = (*v)[i];
                if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<std::int64_t>() >= 0)) {
                    throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected a node id");
                }
                out.push_back(e.get<NodeId>());
            }
        }
    }

private:
    const json& obj_;
    std::string path_;
    std::set<std::string> seen_;
};

double ms_of(Duration d) { return static_cast<double>(d.count()) / 1e3; }
double s_of(Duration d) { return static_cast<double>(d.count()) / 1e6; }

const char* topology_name(netsim::TopologyKind k) {
    switch (k) {
        case netsim::TopologyKind::RandomMobility: return "random_mobility";
        case netsim::TopologyKind::StaticTree: return "static_tree";
        case netsim::TopologyKind::StaticGraph: return "static_graph";
    }
    return "?";
}

void parse_topology(const json& node, netsim::TopologySpec& t) {
    ObjectReader r(node, "topology");
    std::string kind = topology_name(t.kind);
    r.string("kind", kind);
    if (kind == "random_mobility") {
        t.kind = netsim::TopologyKind::RandomMobility;
    } else if (kind == "static_tree") {
        t.kind = netsim::TopologyKind::StaticTree;
    } else if (kind == "static_graph") {
        t.kind = netsim::TopologyKind::StaticGraph;
    } else {
        throw ConfigError("topology.kind", "expected random_mobility, static_tree or static_graph");
    }
    r.integer("branching", t.branching);
    if (const auto* edges = r.find("edges")) {
        if (!edges->is_array()) throw ConfigError("topology.edges", "expected an array of [a, b] pairs");
        t.edges.clear();
        for (std::size_t i = 0; i < edges->size(); ++i) {
            const auto& e = (*edges)[i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
                throw ConfigError("topology.edges[" + std::to_string(i) + "]", "expected [a, b]");
            }
            t.edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
        }
    }
}

void parse_adversary(const json& node, adversary::AdversaryPlan& plan) {
    ObjectReader r(node, "adversary");
    if (const auto* com = r.find("com")) {
        adversary::ComPlan c;
        ObjectReader cr(*com, "adversary.com");
        cr.number("drop_rate", c.drop_rate);
        cr.boolean("replay", c.replay);
        cr.boolean("forge", c.forge);
        cr.boolean("modify", c.modify);
        cr.number("inject_rate", c.inject_rate);
        cr.boolean("tamper_verifier", c.tamper_verifier);
        cr.boolean("key_compromised", c.key_compromised);
        plan.com = c;
    }
    if (const auto* soft = r.find("soft")) {
        adversary::SoftPlan s;
        ObjectReader sr(*soft, "adversary.soft");
        sr.node_list("victims", s.victims);
        sr.seconds("tamper_offset_s", s.tamper_offset);
        plan.soft = s;
    }
    if (const auto* mob = r.find("mob")) {
        adversary::MobPlan m;
        ObjectReader mr(*mob, "adversary.mob");
        mr.node_list("victims", m.victims);
        mr.number("speed_mps", m.speed_mps);
        plan.mob = m;
    }
}

void require(bool ok, const std::string& key, const std::string& what) {
    if (!ok) throw ConfigError(key, what);
}

void check_nodes(const std::vector<NodeId>& ids, std::size_t n, const std::string& key) {
    for (auto id : ids) require(id < n, key, "node id " + std::to_string(id) + " outside [0, n)");
}

}  // namespace

Duration ScenarioConfig::broadcast_period() const {
    if (protocol.broadcast_period) return *protocol.broadcast_period;
    return topology.kind == netsim::TopologyKind::StaticTree ? Duration{std::chrono::milliseconds{100}}
                                                            : Duration{std::chrono::milliseconds{500}};
}

Duration ScenarioConfig::validity_window() const {
    return protocol.validity_window ? *protocol.validity_window : 2 * broadcast_period();
}

netsim::Arena ScenarioConfig::arena_geometry() const {
    auto a = netsim::Arena::scaled(n, arena.base_side_m);
    if (arena.width_m) a.width = *arena.width_m;
    if (arena.height_m) a.height = *arena.height_m;
    return a;
}

void validate(const ScenarioConfig& c) {
    require(c.n >= 1, "n", "must be >= 1");
    require(c.n <= (1u << 24), "n", "too large");
    switch (c.topology.kind) {
        case netsim::TopologyKind::StaticTree:
            require(c.topology.branching >= 1, "topology.branching", "must be >= 1");
            break;
        case netsim::TopologyKind::StaticGraph:
            for (std::size_t i = 0; i < c.topology.edges.size(); ++i) {
                const auto [a, b] = c.topology.edges[i];
                const auto key = "topology.edges[" + std::to_string(i) + "]";
                require(a < c.n && b < c.n, key, "endpoint outside [0, n)");
                require(a != b, key, "self loop");
            }
            break;
        case netsim::TopologyKind::RandomMobility: break;
    }
    require(c.arena.base_side_m > 0, "arena.base_side_m", "must be > 0");
    require(!c.arena.width_m || *c.arena.width_m > 0, "arena.width_m", "must be > 0");
    require(!c.arena.height_m || *c.arena.height_m > 0, "arena.height_m", "must be > 0");
    require(c.radio.range_m > 0, "radio.range_m", "must be > 0");
    require(c.radio.data_rate_bps > 0, "radio.data_rate_bps", "must be > 0");
    require(c.radio.frame_payload_bytes > 0, "radio.frame_payload_bytes", "must be > 0");
    require(c.radio.frame_payload_bytes < c.radio.frame_size_bytes, "radio.frame_payload_bytes",
            "must be smaller than radio.frame_size_bytes");
    require(c.radio.loss_prob >= 0 && c.radio.loss_prob <= 1, "radio.loss_prob", "must be in [0, 1]");
    require(c.mobility.speeds.min_mps > 0, "mobility.speed_min_mps", "must be > 0");
    require(c.mobility.speeds.max_mps >= c.mobility.speeds.min_mps, "mobility.speed_max_mps",
            "must be >= mobility.speed_min_mps");
    require(c.mobility.tick > Duration{0}, "mobility.tick_ms", "must be > 0");
    require(c.mobility.warmup >= Duration{0}, "mobility.warmup_s", "must be >= 0");
    require(c.broadcast_period() > Duration{0}, "protocol.broadcast_period_ms", "must be > 0");
    require(c.validity_window() > Duration{0}, "protocol.validity_window_ms", "must be > 0");
    require(c.protocol.delta_t_max_s >= 1, "protocol.delta_t_max_s", "must be >= 1");
    require(c.protocol.inbox_capacity >= 1, "protocol.inbox_capacity", "must be >= 1");
    require(c.protocol.key_bits == 128 || c.protocol.key_bits == 160 || c.protocol.key_bits == 256,
            "protocol.key_bits", "must be 128, 160 or 256");
    require(c.protocol.region_bytes >= 1, "protocol.region_bytes", "must be >= 1");
    require(c.protocol.good_configs >= 1, "protocol.good_configs", "must be >= 1");
    require(c.delays.mac > Duration{0}, "delays.mac_ms", "must be > 0");
    require(c.delays.attest > Duration{0}, "delays.attest_ms", "must be > 0");
    require(c.compromised_fraction >= 0 && c.compromised_fraction <= 1, "compromised_fraction",
            "must be in [0, 1]");
    check_nodes(c.inactive_nodes, c.n, "inactive_nodes");
    if (c.adversary.com) {
        const auto& com = *c.adversary.com;
        require(com.drop_rate >= 0 && com.drop_rate <= 1, "adversary.com.drop_rate", "must be in [0, 1]");
        require(com.inject_rate >= 0 && com.inject_rate <= 1, "adversary.com.inject_rate", "must be in [0, 1]");
    }
    if (c.adversary.soft) check_nodes(c.adversary.soft->victims, c.n, "adversary.soft.victims");
    if (c.adversary.mob) {
        check_nodes(c.adversary.mob->victims, c.n, "adversary.mob.victims");
        require(c.adversary.mob->speed_mps > 0, "adversary.mob.speed_mps", "must be > 0");
        require(c.mobile() || c.adversary.mob->victims.empty(), "adversary.mob",
                "requires topology.kind = random_mobility");
    }
    const auto& e = c.energy;
    require(e.send_per_byte_j >= 0 && e.recv_per_byte_j >= 0 && e.hmac_j >= 0 && e.min_j >= 0 && e.attest_j >= 0,
            "energy", "constants must be >= 0");
    require(!c.coverage_targets.empty(), "coverage_targets", "at least one target required");
    for (std::size_t i = 0; i < c.coverage_targets.size(); ++i) {
        const auto& t = c.coverage_targets[i];
        const auto key = "coverage_targets[" + std::to_string(i) + "]";
        require(t.x > 0 && t.x <= 1 && t.y > 0 && t.y <= 1, key, "X and Y must be in (0, 1]");
    }
    for (std::size_t i = 0; i < c.verifier.queries.size(); ++i) {
        require(c.verifier.queries[i] >= Duration{0}, "verifier.queries_s[" + std::to_string(i) + "]",
                "must be >= 0 (relative to T_att)");
    }
    require(!c.verifier.t_max || *c.verifier.t_max > Duration{0}, "verifier.t_max_s", "must be > 0");
    require(!c.seeds.empty(), "seeds", "at least one seed required");
    require(c.epochs >= 1, "epochs", "must be >= 1");
    require(c.horizon > Duration{0}, "horizon_s", "must be > 0");
    require(c.baseline == BaselineKind::None || c.topology.kind == netsim::TopologyKind::StaticTree, "baseline",
            "naive_tree_aggregation requires topology.kind = static_tree");
}

ScenarioConfig parse_config(const json& doc, std::vector<std::string>* warnings) {
    ScenarioConfig c;
    {
        ObjectReader r(doc, "");
        r.integer("n", c.n);
        if (const auto* t = r.find("topology")) parse_topology(*t, c.topology);
        if (const auto* a = r.find("arena")) {
            ObjectReader ar(*a, "arena");
            ar.number("base_side_m", c.arena.base_side_m);
            ar.number("width_m", c.arena.width_m);
            ar.number("height_m", c.arena.height_m);
        }
        if (const auto* radio = r.find("radio")) {
            ObjectReader rr(*radio, "radio");
            rr.number("range_m", c.radio.range_m);
            rr.number("data_rate_bps", c.radio.data_rate_bps);
            rr.integer("frame_size_bytes", c.radio.frame_size_bytes);
            rr.integer("frame_payload_bytes", c.radio.frame_payload_bytes);
            rr.number("loss_prob", c.radio.loss_prob);
        }
        if (const auto* m = r.find("mobility")) {
            ObjectReader mr(*m, "mobility");
            mr.number("speed_min_mps", c.mobility.speeds.min_mps);
            mr.number("speed_max_mps", c.mobility.speeds.max_mps);
            mr.millis("tick_ms", c.mobility.tick);
            mr.seconds("warmup_s", c.mobility.warmup);
        }
        if (const auto* p = r.find("protocol")) {
            ObjectReader pr(*p, "protocol");
            pr.millis("broadcast_period_ms", c.protocol.broadcast_period);
            pr.integer("delta_t_max_s", c.protocol.delta_t_max_s);
            pr.millis("validity_window_ms", c.protocol.validity_window);
            pr.integer("inbox_capacity", c.protocol.inbox_capacity);
            pr.integer("key_bits", c.protocol.key_bits);
            std::string mac = c.protocol.mac == crypto::MacAlgorithm::HmacSha1 ? "hmac-sha1" : "hmac-sha256";
            pr.string("mac", mac);
            if (mac == "hmac-sha1") {
                c.protocol.mac = crypto::MacAlgorithm::HmacSha1;
            } else if (mac == "hmac-sha256") {
                c.protocol.mac = crypto::MacAlgorithm::HmacSha256;
            } else {
                throw ConfigError("protocol.mac", "expected hmac-sha1 or hmac-sha256");
            }
            pr.integer("region_bytes", c.protocol.region_bytes);
            pr.integer("good_configs", c.protocol.good_configs);
        }
        if (const auto* d = r.find("delays")) {
            ObjectReader dr(*d, "delays");
            dr.millis("mac_ms", c.delays.mac);
            dr.millis("attest_ms", c.delays.attest);
        }
        r.number("compromised_fraction", c.compromised_fraction);
        r.node_list("inactive_nodes", c.inactive_nodes);
        if (const auto* a = r.find("adversary")) parse_adversary(*a, c.adversary);
        if (const auto* e = r.find("energy")) {
            ObjectReader er(*e, "energy");
            double send = to_uj(c.energy.send_per_byte_j), recv = to_uj(c.energy.recv_per_byte_j);
            double hmac = to_uj(c.energy.hmac_j), min = to_uj(c.energy.min_j), att = to_uj(c.energy.attest_j);
            er.number("send_uj_per_byte", send);
            er.number("recv_uj_per_byte", recv);
            er.number("hmac_uj", hmac);
            er.number("min_uj", min);
            er.number("attest_uj", att);
            c.energy = {from_uj(send), from_uj(recv), from_uj(hmac), from_uj(min), from_uj(att)};
        }
        if (const auto* targets = r.find("coverage_targets")) {
            if (!targets->is_array()) throw ConfigError("coverage_targets", "expected an array of [X, Y] pairs");
            c.coverage_targets.clear();
            for (std::size_t i = 0; i < targets->size(); ++i) {
                const auto& t = (*targets)[i];
                if (!t.is_array() || t.size() != 2 || !t[0].is_number() || !t[1].is_number()) {
                    throw ConfigError("coverage_targets[" + std::to_string(i) + "]", "expected [X, Y]");
                }
                c.coverage_targets.push_back({t[0].get<double>(), t[1].get<double>()});
            }
        }
        if (const auto* v = r.find("verifier")) {
            ObjectReader vr(*v, "verifier");
            if (const auto* q = vr.find("queries_s")) {
                if (!q->is_array()) throw ConfigError("verifier.queries_s", "expected an array of seconds");
                c.verifier.queries.clear();
                for (std::size_t i = 0; i < q->size(); ++i) {
                    if (!(*q)[i].is_number()) {
                        throw ConfigError("verifier.queries_s[" + std::to_string(i) + "]", "expected a number");
                    }
                    c.verifier.queries.push_back(from_seconds((*q)[i].get<double>()));
                }
            }
            if (const auto* pos = vr.find("position")) {
                if (!pos->is_array() || pos->size() != 2 || !(*pos)[0].is_number() || !(*pos)[1].is_number()) {
                    throw ConfigError("verifier.position", "expected [x, y]");
                }
                c.verifier.position = netsim::Vec2{(*pos)[0].get<double>(), (*pos)[1].get<double>()};
            }
            vr.seconds("t_max_s", c.verifier.t_max);
            vr.boolean("conservative", c.verifier.conservative);
        }
        if (const auto* seeds = r.find("seeds")) {
            if (!seeds->is_array()) throw ConfigError("seeds", "expected an array of integers");
            c.seeds.clear();
            std::set<std::uint64_t> seen;
            for (std::size_t i = 0; i < seeds->size(); ++i) {
                const auto& s = (*seeds)[i];
                if (!s.is_number_unsigned()) {
                    throw ConfigError("seeds[" + std::to_string(i) + "]", "expected a non-negative integer");
                }
                const auto v = s.get<std::uint64_t>();
                if (!seen.insert(v).second) {
                    if (warnings) warnings->push_back("seeds: duplicate seed " + std::to_string(v) + " dropped");
                    continue;
                }
                c.seeds.push_back(v);
            }
        }
        r.integer("epochs", c.epochs);
        r.seconds("horizon_s", c.horizon);
        r.boolean("stop_when_covered", c.stop_when_covered);
        std::string baseline = c.baseline == BaselineKind::None ? "none" : "naive_tree_aggregation";
        r.string("baseline", baseline);
        if (baseline == "none") {
            c.baseline = BaselineKind::None;
        } else if (baseline == "naive_tree_aggregation") {
            c.baseline = BaselineKind::NaiveTreeAggregation;
        } else {
            throw ConfigError("baseline", "expected none or naive_tree_aggregation");
        }
        r.string("output_dir", c.output_dir);
    }
    validate(c);
    return c;
}

ScenarioConfig parse_config_text(const std::string& text, std::vector<std::string>* warnings) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    return parse_config(doc, warnings);
}

ScenarioConfig parse_config_file(const std::filesystem::path& path, std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open scenario file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str(), warnings);
}

json to_json(const ScenarioConfig& c) {
    json j;
    j["n"] = c.n;
    json topo{{"kind", topology_name(c.topology.kind)}, {"branching", c.topology.branching}};
    json edges = json::array();
    for (auto [a, b] : c.topology.edges) edges.push_back({a, b});
    topo["edges"] = edges;
    j["topology"] = topo;
    json arena{{"base_side_m", c.arena.base_side_m}};
    if (c.arena.width_m) arena["width_m"] = *c.arena.width_m;
    if (c.arena.height_m) arena["height_m"] = *c.arena.height_m;
    j["arena"] = arena;
    j["radio"] = {{"range_m", c.radio.range_m},
                  {"data_rate_bps", c.radio.data_rate_bps},
                  {"frame_size_bytes", c.radio.frame_size_bytes},
                  {"frame_payload_bytes", c.radio.frame_payload_bytes},
                  {"loss_prob", c.radio.loss_prob}};
    j["mobility"] = {{"speed_min_mps", c.mobility.speeds.min_mps},
                     {"speed_max_mps", c.mobility.speeds.max_mps},
                     {"tick_ms", ms_of(c.mobility.tick)},
                     {"warmup_s", s_of(c.mobility.warmup)}};
    json proto{{"delta_t_max_s", c.protocol.delta_t_max_s},
               {"inbox_capacity", c.protocol.inbox_capacity},
               {"key_bits", c.protocol.key_bits},
               {"mac", c.protocol.mac == crypto::MacAlgorithm::HmacSha1 ? "hmac-sha1" : "hmac-sha256"},
               {"region_bytes", c.protocol.region_bytes},
               {"good_configs", c.protocol.good_configs}};
    if (c.protocol.broadcast_period) proto["broadcast_period_ms"] = ms_of(*c.protocol.broadcast_period);
    if (c.protocol.validity_window) proto["validity_window_ms"] = ms_of(*c.protocol.validity_window);
    j["protocol"] = proto;
    j["delays"] = {{"mac_ms", ms_of(c.delays.mac)}, {"attest_ms", ms_of(c.delays.attest)}};
    j["compromised_fraction"] = c.compromised_fraction;
    j["inactive_nodes"] = c.inactive_nodes;
    json adv = json::object();
    if (c.adversary.com) {
        const auto& com = *c.adversary.com;
        adv["com"] = {{"drop_rate", com.drop_rate},         {"replay", com.replay},
                      {"forge", com.forge},                 {"modify", com.modify},
                      {"inject_rate", com.inject_rate},     {"tamper_verifier", com.tamper_verifier},
                      {"key_compromised", com.key_compromised}};
    }
    if (c.adversary.soft) {
        adv["soft"] = {{"victims", c.adversary.soft->victims},
                       {"tamper_offset_s", s_of(c.adversary.soft->tamper_offset)}};
    }
    if (c.adversary.mob) {
        adv["mob"] = {{"victims", c.adversary.mob->victims}, {"speed_mps", c.adversary.mob->speed_mps}};
    }
    j["adversary"] = adv;
    j["energy"] = {{"send_uj_per_byte", to_uj(c.energy.send_per_byte_j)},
                   {"recv_uj_per_byte", to_uj(c.energy.recv_per_byte_j)},
                   {"hmac_uj", to_uj(c.energy.hmac_j)},
                   {"min_uj", to_uj(c.energy.min_j)},
                   {"attest_uj", to_uj(c.energy.attest_j)}};
    json targets = json::array();
    for (const auto& t : c.coverage_targets) targets.push_back({t.x, t.y});
    j["coverage_targets"] = targets;
    json ver{{"conservative", c.verifier.conservative}};
    json queries = json::array();
    for (auto q : c.verifier.queries) queries.push_back(s_of(q));
    ver["queries_s"] = queries;
    if (c.verifier.position) ver["position"] = {c.verifier.position->x, c.verifier.position->y};
    if (c.verifier.t_max) ver["t_max_s"] = s_of(*c.verifier.t_max);
    j["verifier"] = ver;
    j["seeds"] = c.seeds;
    j["epochs"] = c.epochs;
    j["horizon_s"] = s_of(c.horizon);
    j["stop_when_covered"] = c.stop_when_covered;
    j["baseline"] = c.baseline == BaselineKind::None ? "none" : "naive_tree_aggregation";
    j["output_dir"] = c.output_dir;
    return j;
}

}  // namespace pads
