#include "pads/netsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <variant>

#include "pads/adversary.hpp"
#include "pads/error.hpp"
#include "pads/netsim/event_queue.hpp"
#include "pads/netsim/radio.hpp"
#include "pads/netsim/topology.hpp"

namespace pads::netsim {

std::vector<NodeId> neighbors(std::span<const Vec2> positions, const std::vector<bool>& responsive, NodeId i,
                              double range) {
    std::vector<NodeId> out;
    if (!responsive[i]) return out;
    for (NodeId j = 0; j < positions.size(); ++j) {
        if (j != i && responsive[j] && distance(positions[i], positions[j]) <= range) out.push_back(j);
    }
    return out;
}

namespace {

constexpr std::uint64_t kKeyStream = 1;
constexpr std::uint64_t kScheduleStream = 2;
constexpr std::uint64_t kDeployStream = 3;
constexpr std::uint64_t kPhaseStream = 4;
constexpr std::uint64_t kChannelStream = 5;
constexpr std::uint64_t kAdversaryStream = 6;
constexpr std::uint64_t kVerifierStream = 7;
constexpr std::uint64_t kCompromiseStream = 8;
constexpr std::uint64_t kImageStream = 9;
constexpr std::uint64_t kMobilityStreamBase = 100;

StaticGraph build_graph(const ScenarioConfig& cfg) {
    switch (cfg.topology.kind) {
        case TopologyKind::StaticTree: return StaticGraph::complete_tree(cfg.n, cfg.topology.branching);
        case TopologyKind::StaticGraph: return StaticGraph::from_edges(cfg.n, cfg.topology.edges);
        case TopologyKind::RandomMobility: break;
    }
    return StaticGraph(cfg.n);
}

metrics::RejectCause cause_of(Verdict v) {
    switch (v) {
        case Verdict::LengthMismatch: return metrics::RejectCause::LengthMismatch;
        case Verdict::Malformed: return metrics::RejectCause::Malformed;
        case Verdict::BadMac: return metrics::RejectCause::BadMac;
        case Verdict::StaleEpoch: return metrics::RejectCause::StaleEpoch;
        case Verdict::OutsideWindow: return metrics::RejectCause::OutsideWindow;
        case Verdict::NotAttested:
        case Verdict::Accepted: break;
    }
    return metrics::RejectCause::NotAttested;
}

const char* origin_name(adversary::Origin o) {
    switch (o) {
        case adversary::Origin::Genuine: return "genuine";
        case adversary::Origin::Replay: return "replay";
        case adversary::Origin::Forged: return "forged";
        case adversary::Origin::Modified: return "modified";
    }
    return "?";
}

struct InFlight {
    AttestationMessage msg;
    /// Link-layer source; the attacker transmits under its own address n.
    NodeId link_src = 0;
    adversary::Origin origin = adversary::Origin::Genuine;
    bool prior_epoch = false;
};

enum class Job : std::uint8_t { None, Attest, Sign, Verify };

struct NodeRuntime {
    std::uint64_t generation = 0;
    Job job = Job::None;
    bool sign_pending = false;
    std::deque<InFlight> inbox;
    InFlight current;
    AttestationMessage outgoing;
};

struct EpochStart {
    std::size_t epoch;
};
struct SoftTamper {};
struct BroadcastStart {
    NodeId node;
};
struct JobDone {
    NodeId node;
    std::uint64_t generation;
};
struct FrameDelivery {
    NodeId receiver;
    InFlight frame;
};
struct MobilityTick {};
struct VerifierQuery {
    std::size_t epoch;
};
struct EndOfRun {};

using Event =
    std::variant<EpochStart, SoftTamper, BroadcastStart, JobDone, FrameDelivery, MobilityTick, VerifierQuery, EndOfRun>;

struct CoverageLogEntry {
    SimTime t;
    NodeId node;
    std::size_t known;
};

class Simulation {
public:
    Simulation(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* trace)
        : cfg_(cfg), seed_(seed), trace_(trace), root_(seed), arena_(cfg.arena_geometry()),
          index_(arena_, cfg.radio.range_m) {}

    RunResult run();

private:
    void setup();
    void handle(const SimTime now, EpochStart e);
    void handle(const SimTime now, SoftTamper);
    void handle(const SimTime now, BroadcastStart e);
    void handle(const SimTime now, JobDone e);
    void handle(const SimTime now, FrameDelivery& e);
    void handle(const SimTime now, MobilityTick);
    void handle(const SimTime now, VerifierQuery e);
    void handle(const SimTime now, EndOfRun);

    void start_next_job(NodeId i, SimTime now);
    void transmit(NodeId i, SimTime now);
    void deliver(NodeId j, InFlight frame, SimTime at, SimTime now);
    void note_known(NodeId i, SimTime now);
    void mark_reached(NodeId i);
    void check_stop(SimTime now);
    void finalize_epoch();
    std::vector<NodeId> receivers_of(NodeId i) const;
    bool is_last_epoch() const { return current_epoch_ + 1 == schedule_.size(); }

    template <class... Args>
    void log(SimTime now, const char* what, const Args&... args) {
        if (!trace_) return;
        *trace_ << to_us(now) << ' ' << what;
        ((*trace_ << ' ' << args), ...);
        *trace_ << '\n';
    }

    const ScenarioConfig& cfg_;
    std::uint64_t seed_;
    std::ostream* trace_;
    crypto::PrngState root_;
    Arena arena_;
    SpatialIndex index_;

    std::size_t n_ = 0;
    Duration period_{};
    ValidityWindow window_{};
    BroadcastTiming timing_{};
    Duration t_max_offset_{};
    std::vector<std::uint32_t> schedule_;
    SimTime t0_{};
    SimTime horizon_end_{};

    crypto::SymKey key_;
    std::vector<ProverState> states_;
    std::vector<NodeRuntime> runtime_;
    std::vector<bool> active_;
    std::size_t active_count_ = 0;
    StaticGraph graph_;
    std::vector<NodePose> poses_;
    std::vector<Vec2> positions_;
    std::vector<crypto::PrngState> mobility_rng_;
    std::vector<bool> evader_;
    crypto::PrngState channel_rng_;
    crypto::PrngState adversary_rng_;
    crypto::PrngState verifier_rng_;
    std::optional<adversary::ComAdversary> com_;

    EventQueue<Event> queue_;
    bool stopped_ = false;
    SimTime now_{};
    std::uint64_t events_ = 0;

    // Per-epoch bookkeeping.
    std::size_t current_epoch_ = 0;
    bool in_epoch_ = false;
    std::vector<bool> reached_;
    std::size_t reached_count_ = 0;
    std::vector<CoverageLogEntry> coverage_log_;
    std::vector<double> xs_;
    std::vector<std::size_t> target_x_index_;
    std::optional<metrics::CoverageTracker> live_;
    std::size_t queries_left_ = 0;
    EpochResult epoch_;

    MetricsLedger ledger_;
};

Duration shared_estimate(const ScenarioConfig& cfg, std::size_t hops) {
    const auto timing = plan_broadcast(cfg.radio, message_byte_length(cfg.n), cfg.delays.mac);
    const auto per_hop = cfg.broadcast_period() + 2 * cfg.delays.mac + timing.tx_time;
    return cfg.delays.attest + static_cast<std::int64_t>(hops) * per_hop;
}

void Simulation::setup() {
    n_ = cfg_.n;
    period_ = cfg_.broadcast_period();
    window_.before_t_att = cfg_.validity_window();
    timing_ = plan_broadcast(cfg_.radio, message_byte_length(n_), cfg_.delays.mac);
    t_max_offset_ = cfg_.verifier.t_max ? *cfg_.verifier.t_max : 10 * coverage_time_estimate(cfg_);

    // Shared attestation schedule; the last simulated epoch is observed for
    // the horizon.
    const auto schedule_seed = root_.fork(kScheduleStream);
    {
        auto prng = schedule_seed;
        std::uint32_t t = 0;
        for (std::size_t k = 0; k < cfg_.epochs; ++k) {
            std::tie(t, prng) = next_attestation_time(prng, t, cfg_.protocol.delta_t_max_s);
            schedule_.push_back(t);
        }
        t0_ = at_seconds(schedule_.front());
        horizon_end_ = at_seconds(schedule_.back()) + cfg_.horizon;
    }

    auto key_rng = root_.fork(kKeyStream);
    key_ = crypto::mac_keygen(cfg_.protocol.key_bits, key_rng);

    // Known-good images; node i runs image i mod |H|.
    auto image_rng = root_.fork(kImageStream);
    std::vector<std::vector<std::uint8_t>> images(cfg_.protocol.good_configs);
    std::vector<crypto::Measurement> digests;
    for (auto& img : images) {
        img.resize(cfg_.protocol.region_bytes);
        for (auto& b : img) b = static_cast<std::uint8_t>(image_rng.next_u32());
        digests.push_back(crypto::measure(img));
    }
    const auto good = make_good_configs(std::move(digests));

    states_.reserve(n_);
    for (NodeId i = 0; i < n_; ++i) {
        auto p = make_prover(i, n_, key_, good, images[i % images.size()], schedule_seed,
                             cfg_.protocol.delta_t_max_s);
        p.mac_algorithm = cfg_.protocol.mac;
        states_.push_back(std::move(p));
    }
    runtime_.resize(n_);

    active_.assign(n_, true);
    for (auto id : cfg_.inactive_nodes) active_[id] = false;
    active_count_ = static_cast<std::size_t>(std::count(active_.begin(), active_.end(), true));

    adversary_rng_ = root_.fork(kAdversaryStream);
    channel_rng_ = root_.fork(kChannelStream);
    verifier_rng_ = root_.fork(kVerifierStream);

    // Nodes compromised before deployment.
    if (cfg_.compromised_fraction > 0) {
        auto rng = root_.fork(kCompromiseStream);
        std::vector<NodeId> order(n_);
        for (NodeId i = 0; i < n_; ++i) order[i] = i;
        for (std::size_t i = n_; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        const auto k = static_cast<std::size_t>(std::llround(cfg_.compromised_fraction * static_cast<double>(n_)));
        for (std::size_t i = 0; i < k; ++i) adversary::soft_compromise(states_[order[i]], rng);
    }

    if (cfg_.adversary.com) {
        std::optional<crypto::SymKey> stolen;
        if (cfg_.adversary.com->key_compromised) stolen = key_;
        com_.emplace(*cfg_.adversary.com, adversary_rng_.fork(1), stolen);
    }

    evader_.assign(n_, false);
    if (cfg_.adversary.mob) {
        for (auto v : cfg_.adversary.mob->victims) evader_[v] = true;
    }

    if (cfg_.mobile()) {
        auto deploy = root_.fork(kDeployStream);
        poses_.reserve(n_);
        for (NodeId i = 0; i < n_; ++i) {
            poses_.push_back(random_pose(arena_, deploy));
            positions_.push_back(poses_.back().position);
            mobility_rng_.push_back(root_.fork(kMobilityStreamBase + i));
        }
        index_.rebuild(positions_, active_);
    } else {
        graph_ = build_graph(cfg_);
    }

    for (const auto& t : cfg_.coverage_targets) {
        auto it = std::find(xs_.begin(), xs_.end(), t.x);
        if (it == xs_.end()) {
            xs_.push_back(t.x);
            it = xs_.end() - 1;
        }
        target_x_index_.push_back(static_cast<std::size_t>(it - xs_.begin()));
    }

    ledger_.energy.resize(n_);

    // Initial events.
    SimTime start = std::max(SimTime{}, t0_ - cfg_.mobility.warmup);
    if (cfg_.adversary.soft && !cfg_.adversary.soft->victims.empty()) {
        const auto tamper = std::max(SimTime{}, t0_ + cfg_.adversary.soft->tamper_offset);
        start = std::min(start, tamper);
        queue_.push(tamper, SoftTamper{});
    }
    for (std::size_t k = 0; k < schedule_.size(); ++k) queue_.push(at_seconds(schedule_[k]), EpochStart{k});
    auto phase_rng = root_.fork(kPhaseStream);
    for (NodeId i = 0; i < n_; ++i) {
        const auto phase = Duration{static_cast<std::int64_t>(phase_rng.below(static_cast<std::uint64_t>(period_.count())))};
        if (active_[i]) queue_.push(t0_ + cfg_.delays.attest + phase, BroadcastStart{i});
    }
    if (cfg_.mobile()) queue_.push(start + cfg_.mobility.tick, MobilityTick{});
    queue_.push(horizon_end_, EndOfRun{});
    now_ = start;
}

std::vector<NodeId> Simulation::receivers_of(NodeId i) const {
    std::vector<NodeId> out;
    if (cfg_.mobile()) {
        index_.within_range(i, positions_, out);
    } else {
        for (auto j : graph_.neighbors(i)) {
            if (active_[j]) out.push_back(j);
        }
    }
    return out;
}

void Simulation::handle(const SimTime now, EpochStart e) {
    if (in_epoch_) finalize_epoch();
    current_epoch_ = e.epoch;
    in_epoch_ = true;
    epoch_ = EpochResult{};
    epoch_.index = e.epoch;
    epoch_.t_att = schedule_[e.epoch];
    epoch_.ground_truth.assign(n_, CellStatus::Unknown);
    reached_.assign(n_, false);
    reached_count_ = 0;
    coverage_log_.clear();
    std::vector<bool> live_mask = active_;
    live_.emplace(n_, std::move(live_mask), xs_);
    log(now, "attest", "epoch", e.epoch, "t_att", epoch_.t_att);

    // Verifier queries for this epoch.
    const SimTime epoch_end =
        e.epoch + 1 < schedule_.size() ? at_seconds(schedule_[e.epoch + 1]) : horizon_end_;
    queries_left_ = 0;
    for (auto q : cfg_.verifier.queries) {
        const auto t = now + q;
        if (t < epoch_end) {
            queue_.push(t, VerifierQuery{e.epoch});
            ++queries_left_;
        }
    }


    for (NodeId i = 0; i < n_; ++i) {
        if (!active_[i]) continue;
        auto& rt = runtime_[i];
        ++rt.generation;
        rt.inbox.clear();
        rt.sign_pending = false;
        self_attest(states_[i], now);
        ++ledger_.energy[i].attestations;
        epoch_.ground_truth[i] = states_[i].bitmask.get(i);
        rt.job = Job::Attest;
        queue_.push(now + cfg_.delays.attest, JobDone{i, rt.generation});
        note_known(i, now);
    }
    if (n_ == 1 && active_[0]) mark_reached(0);

    check_stop(now);
}

void Simulation::handle(const SimTime now, SoftTamper) {
    for (auto v : cfg_.adversary.soft->victims) {
        adversary::soft_compromise(states_[v], adversary_rng_);
        log(now, "tamper", v);
    }
}

void Simulation::handle(const SimTime now, BroadcastStart e) {
    auto& rt = runtime_[e.node];
    queue_.push(now + period_, BroadcastStart{e.node});
    if (!states_[e.node].attested()) return;
    rt.sign_pending = true;
    start_next_job(e.node, now);
}

void Simulation::start_next_job(NodeId i, SimTime now) {
    auto& rt = runtime_[i];
    if (rt.job != Job::None) return;
    if (rt.sign_pending) {
        rt.sign_pending = false;
        rt.job = Job::Sign;
        rt.outgoing = build_message(states_[i], now);
        ++ledger_.energy[i].sends;
        queue_.push(now + cfg_.delays.mac, JobDone{i, rt.generation});
    } else if (!rt.inbox.empty()) {
        rt.current = std::move(rt.inbox.front());
        rt.inbox.pop_front();
        rt.job = Job::Verify;
        queue_.push(now + cfg_.delays.mac, JobDone{i, rt.generation});
    }
}

void Simulation::handle(const SimTime now, JobDone e) {
    auto& rt = runtime_[e.node];
    if (e.generation != rt.generation) return;
    switch (rt.job) {
        case Job::Sign: transmit(e.node, now); break;
        case Job::Verify: {
            auto& state = states_[e.node];
            const auto before = state.bitmask.known_count();
            const auto verdict = handle_message(state, rt.current.msg, now, window_);
            ++ledger_.energy[e.node].verifications;
            log(now, "verify", e.node, "from", rt.current.link_src, origin_name(rt.current.origin), to_string(verdict));
            if (verdict == Verdict::Accepted) {
                ++ledger_.energy[e.node].combines;
                ++ledger_.counters.accepted;
                if (rt.current.origin == adversary::Origin::Forged) ++ledger_.counters.forged_accepted;
                if (rt.current.prior_epoch) ++ledger_.counters.replays_prior_epoch_accepted;
                if (state.bitmask.known_count() != before) note_known(e.node, now);
            } else {
                ++ledger_.counters.rejected[static_cast<std::size_t>(cause_of(verdict))];
            }
            break;
        }
        case Job::Attest:
        case Job::None: break;
    }
    rt.job = Job::None;
    start_next_job(e.node, now);
}

void Simulation::transmit(NodeId i, SimTime now) {
    auto& c = ledger_.counters;
    const auto& msg = runtime_[i].outgoing;
    ++c.messages_sent;
    c.frames_sent += timing_.frames;
    c.bytes_sent += timing_.frames * cfg_.radio.frame_size_bytes;
    const auto at = now + timing_.tx_time;
    const auto receivers = receivers_of(i);
    log(now, "broadcast", i, "receivers", receivers.size());
    for (auto j : receivers) {
        bool lost = false;
        if (cfg_.radio.loss_prob > 0) {
            for (std::size_t f = 0; f < timing_.frames; ++f) {
                if (channel_rng_.bernoulli(cfg_.radio.loss_prob)) {
                    ++c.frames_lost;
                    lost = true;
                }
            }
        }
        if (lost) continue;
        InFlight frame{msg, i, adversary::Origin::Genuine, false};
        if (!com_) {
            deliver(j, std::move(frame), at, now);
            continue;
        }
        auto action = com_->intercept(msg, now, i);
        if (std::holds_alternative<adversary::Drop>(action)) {
            ++c.dropped_by_adversary;
        } else if (auto* rep = std::get_if<adversary::Replace>(&action)) {
            deliver(j, InFlight{rep->frame.msg, i, rep->frame.origin, rep->frame.prior_epoch}, at, now);
        } else {
            deliver(j, std::move(frame), at, now);
            if (auto* inj = std::get_if<adversary::Inject>(&action)) {
                for (auto& extra : inj->extra) {
                    if (extra.origin == adversary::Origin::Forged) ++c.forged_injected;
                    if (extra.origin == adversary::Origin::Replay) {
                        ++c.replays_injected;
                        if (extra.prior_epoch) ++c.replays_prior_epoch_injected;
                    }
                    deliver(j, InFlight{extra.msg, static_cast<NodeId>(n_), extra.origin, extra.prior_epoch}, at, now);
                }
            }
        }
    }
}

void Simulation::deliver(NodeId j, InFlight frame, SimTime at, SimTime) {
    queue_.push(at, FrameDelivery{j, std::move(frame)});
}

void Simulation::handle(const SimTime now, FrameDelivery& e) {
    const auto j = e.receiver;
    if (!active_[j]) return;
    auto& c = ledger_.counters;
    ++c.deliveries;
    ++ledger_.energy[j].receives;
    const auto& state = states_[j];
    if (in_epoch_ && e.frame.origin == adversary::Origin::Genuine && state.attested() &&
        e.frame.msg.t_att == epoch_.t_att) {
        mark_reached(e.frame.link_src);
        mark_reached(j);
    }
    auto& rt = runtime_[j];
    auto same = std::find_if(rt.inbox.begin(), rt.inbox.end(),
                             [&](const InFlight& f) { return f.link_src == e.frame.link_src; });
    if (same != rt.inbox.end()) {
        ++c.rejected[static_cast<std::size_t>(metrics::RejectCause::Superseded)];
        *same = std::move(e.frame);
    } else {
        if (rt.inbox.size() >= cfg_.protocol.inbox_capacity) {
            ++c.rejected[static_cast<std::size_t>(metrics::RejectCause::InboxOverflow)];
            rt.inbox.pop_front();
        }
        rt.inbox.push_back(std::move(e.frame));
    }
    start_next_job(j, now);
}

void Simulation::handle(const SimTime now, MobilityTick) {
    const auto dt = cfg_.mobility.tick;
    std::vector<Vec2> honest;
    if (cfg_.adversary.mob && !cfg_.adversary.mob->victims.empty()) {
        for (NodeId i = 0; i < n_; ++i) {
            if (active_[i] && !evader_[i]) honest.push_back(positions_[i]);
        }
    }
    for (NodeId i = 0; i < n_; ++i) {
        if (!active_[i]) continue;
        if (evader_[i]) {
            poses_[i] = adversary::mob_evade(poses_[i], honest, cfg_.adversary.mob->speed_mps, dt, arena_);
        } else {
            poses_[i] = mobility_step(poses_[i], dt, mobility_rng_[i], arena_, cfg_.mobility.speeds);
        }
        positions_[i] = poses_[i].position;
    }
    index_.rebuild(positions_, active_);
    queue_.push(now + dt, MobilityTick{});
}

void Simulation::handle(const SimTime now, VerifierQuery e) {
    if (e.epoch != current_epoch_) return;
    --queries_left_;
    std::vector<NodeId> in_range;
    if (cfg_.mobile()) {
        const auto pos = cfg_.verifier.position.value_or(Vec2{arena_.width / 2, arena_.height / 2});
        index_.within_range(pos, positions_, in_range);
    } else {
        for (NodeId i = 0; i < n_; ++i) {
            if (active_[i]) in_range.push_back(i);
        }
    }
    verifier::VerifierContext ctx;
    ctx.key = key_;
    ctx.mac_algorithm = cfg_.protocol.mac;
    ctx.n = n_;
    ctx.t_att = epoch_.t_att;
    ctx.window_start = at_seconds(epoch_.t_att) - window_.before_t_att;
    ctx.t_max = at_seconds(epoch_.t_att) + t_max_offset_;
    VerifierRecord rec;
    rec.t_query = now;
    try {
        rec.outcome = verifier::verify_query(
            in_range,
            [&](NodeId i) {
                auto msg = build_message(states_[i], now);
                if (com_ && com_->plan().tamper_verifier) com_->corrupt(msg);
                return msg;
            },
            ctx, now, verifier_rng_);
        rec.answered = true;
        log(now, "query", "node", rec.outcome.queried_node, "r", rec.outcome.r, "rho", rec.outcome.rho);
    } catch (const QueryFailed&) {
        log(now, "query", "failed");
    }
    epoch_.queries.push_back(std::move(rec));
    check_stop(now);
}

void Simulation::handle(const SimTime now, EndOfRun) {
    log(now, "end", "horizon");
    stopped_ = true;
}

void Simulation::note_known(NodeId i, SimTime now) {
    const auto known = states_[i].bitmask.known_count();
    coverage_log_.push_back({now, i, known});
    if (live_ && live_->update(i, known)) check_stop(now);
}

void Simulation::mark_reached(NodeId i) {
    if (i >= n_ || reached_[i]) return;
    reached_[i] = true;
    ++reached_count_;
    check_stop(now_);
}

void Simulation::check_stop(SimTime now) {
    if (!cfg_.stop_when_covered || stopped_ || !in_epoch_ || !is_last_epoch()) return;
    if (queries_left_ > 0 || reached_count_ < active_count_) return;
    for (std::size_t k = 0; k < cfg_.coverage_targets.size(); ++k) {
        if (live_->y(target_x_index_[k]) + 1e-12 < cfg_.coverage_targets[k].y) return;
    }
    log(now, "end", "covered");
    stopped_ = true;
}

void Simulation::finalize_epoch() {
    const auto t_att = at_seconds(epoch_.t_att);
    for (NodeId i = 0; i < n_; ++i) {
        if (reached_[i]) epoch_.reachable.push_back(i);
    }
    epoch_.coverage.resize(xs_.size());
    for (std::size_t k = 0; k < xs_.size(); ++k) epoch_.coverage[k].x = xs_[k];
    if (!epoch_.reachable.empty()) {
        metrics::CoverageTracker tracker(n_, reached_, xs_);
        for (std::size_t k = 0; k < xs_.size(); ++k) epoch_.coverage[k].samples.push_back({t_att, xs_[k], 0.0});
        for (const auto& entry : coverage_log_) {
            if (!tracker.update(entry.node, entry.known)) continue;
            for (std::size_t k = 0; k < xs_.size(); ++k) {
                auto& s = epoch_.coverage[k].samples;
                const double y = tracker.y(k);
                if (s.back().y == y) continue;
                if (s.back().t == entry.t) {
                    s.back().y = y;
                } else {
                    s.push_back({entry.t, xs_[k], y});
                }
            }
        }
    }
    for (std::size_t k = 0; k < cfg_.coverage_targets.size(); ++k) {
        const auto& series = epoch_.coverage[target_x_index_[k]].samples;
        epoch_.mct.push_back(metrics::mct(series, cfg_.coverage_targets[k].y, t_att));
    }
    epoch_.final_bitmasks.reserve(n_);
    for (const auto& s : states_) epoch_.final_bitmasks.push_back(s.bitmask);
    ledger_.epochs.push_back(std::move(epoch_));
    in_epoch_ = false;
}

RunResult Simulation::run() {
    setup();
    while (!stopped_ && !queue_.empty()) {
        auto entry = queue_.pop();
        now_ = entry.time;
        ++events_;
        std::visit([&](auto& ev) { handle(entry.time, ev); }, entry.payload);
    }
    if (in_epoch_) finalize_epoch();

    RunResult result;
    result.seed = seed_;
    result.end = now_;
    result.events = events_;
    result.active = active_;
    auto& fc = ledger_.final_classification;
    fc.assign(n_, metrics::Classification::Unknown);
    if (!ledger_.epochs.empty()) {
        auto view = ObservationBitmask::all_unknown(n_);
        for (NodeId i = 0; i < n_; ++i) {
            if (active_[i]) view.and_with(states_[i].bitmask);
        }
        for (NodeId j = 0; j < n_; ++j) fc[j] = metrics::classify(view.get(j));
    }
    result.ledger = std::move(ledger_);
    result.final_states = std::move(states_);
    return result;
}

}  // namespace

Duration coverage_time_estimate(const ScenarioConfig& cfg) {
    std::size_t hops = 1;
    if (cfg.mobile()) {
        const auto arena = cfg.arena_geometry();
        hops = static_cast<std::size_t>(std::ceil(arena.diagonal() / cfg.radio.range_m));
    } else {
        const auto d = build_graph(cfg).diameter();
        hops = std::max<std::size_t>(1, d.value_or(cfg.n));
    }
    return shared_estimate(cfg, hops);
}

RunResult run(const ScenarioConfig& cfg, std::uint64_t seed, std::ostream* trace) {
    validate(cfg);
    Simulation sim(cfg, seed, trace);
    return sim.run();
}

}  // namespace pads::netsim
