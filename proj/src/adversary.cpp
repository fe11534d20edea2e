#include "pads/adversary.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pads::adversary {
namespace {

constexpr std::size_t kCapturedPerEpoch = 64;
constexpr std::size_t kEpochsRemembered = 4;

double nearest_distance(netsim::Vec2 p, std::span<const netsim::Vec2> honest) {
    double best = std::numeric_limits<double>::infinity();
    for (auto h : honest) best = std::min(best, netsim::distance(p, h));
    return best;
}

}  // namespace

ComAdversary::ComAdversary(ComPlan plan, crypto::PrngState rng, std::optional<crypto::SymKey> stolen_key)
    : plan_(plan), rng_(rng), stolen_key_(std::move(stolen_key)) {}

void ComAdversary::capture(const AttestationMessage& frame, NodeId sender) {
    auto& bucket = captured_[frame.t_att];
    if (bucket.size() >= kCapturedPerEpoch) bucket.pop_front();
    bucket.emplace_back(sender, frame);
    while (captured_.size() > kEpochsRemembered) captured_.erase(captured_.begin());
}

AttestationMessage ComAdversary::forge(std::size_t n, std::uint32_t t_att, std::uint32_t t_stamp) {
    AttestationMessage m;
    m.bitmask = ObservationBitmask::all_unknown(n);
    for (std::size_t j = 0; j < n; ++j) m.bitmask.set(j, CellStatus::Healthy);
    m.t_att = t_att;
    m.t_stamp = t_stamp;
    if (plan_.key_compromised && stolen_key_) {
        m.tag = crypto::mac_sign(*stolen_key_, mac_payload(m.bitmask, m.t_stamp, m.t_att));
    } else {
        for (auto& b : m.tag.bytes) b = static_cast<std::uint8_t>(rng_.next_u32() >> 24);
    }
    return m;
}

void ComAdversary::corrupt(AttestationMessage& msg) {
    const auto bit = rng_.below(crypto::kTagBytes * 8);
    msg.tag.bytes[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
}

Action ComAdversary::intercept(const AttestationMessage& frame, SimTime, NodeId sender) {
    capture(frame, sender);
    if (rng_.bernoulli(plan_.drop_rate)) return Drop{};

    if (plan_.modify) {
        auto altered = frame;
        const auto j = rng_.below(frame.bitmask.size());
        altered.bitmask.set(j, CellStatus::Healthy);
        if (altered.bitmask == frame.bitmask) altered.bitmask.set(j, CellStatus::Compromised);
        return Replace{AdversarialMessage{std::move(altered), Origin::Modified, false}};
    }

    std::vector<AdversarialMessage> extra;
    if (plan_.forge && rng_.bernoulli(plan_.inject_rate)) {
        extra.push_back({forge(frame.bitmask.size(), frame.t_att, frame.t_stamp), Origin::Forged, false});
    }
    if (plan_.replay && rng_.bernoulli(plan_.inject_rate)) {
        // Prefer a message from an earlier epoch; fall back to a current one.
        std::vector<const AttestationMessage*> prior;
        for (const auto& [t_att, bucket] : captured_) {
            if (t_att == frame.t_att) continue;
            for (const auto& entry : bucket) prior.push_back(&entry.second);
        }
        if (!prior.empty()) {
            extra.push_back({*prior[rng_.below(prior.size())], Origin::Replay, true});
        } else {
            // The frame just captured guarantees a match.
            for (const auto& [from, m] : captured_[frame.t_att]) {
                if (from == sender) {
                    extra.push_back({m, Origin::Replay, false});
                    break;
                }
            }
        }
    }
    if (extra.empty()) return Deliver{};
    return Inject{std::move(extra)};
}

Action com_intercept(ComAdversary& adversary, const AttestationMessage& frame, SimTime t, NodeId sender) {
    return adversary.intercept(frame, t, sender);
}

void soft_compromise(ProverState& victim, crypto::PrngState& rng) {
    if (victim.region.empty()) return;
    const auto pos = rng.below(victim.region.size());
    const auto flip = static_cast<std::uint8_t>(1 + rng.below(255));
    victim.region[pos] ^= flip;
    victim.compromised = true;
}

netsim::NodePose mob_evade(netsim::NodePose pose, std::span<const netsim::Vec2> honest, double speed_mps,
                           Duration dt, const netsim::Arena& arena) {
    if (honest.empty()) return pose;
    const double step = speed_mps * to_seconds(dt);

    netsim::Vec2 nearest = honest.front();
    for (auto h : honest) {
        if (netsim::distance(pose.position, h) < netsim::distance(pose.position, nearest)) nearest = h;
    }

    std::vector<netsim::Vec2> headings;
    const auto away = pose.position - nearest;
    if (away.norm() > 1e-9) headings.push_back(away * (1.0 / away.norm()));
    for (int k = 0; k < 16; ++k) {
        const double a = 2.0 * std::numbers::pi * k / 16.0;
        headings.push_back({std::cos(a), std::sin(a)});
    }

    auto best_pos = pose.position;
    double best_gap = nearest_distance(pose.position, honest);
    netsim::Vec2 best_dir{};
    for (auto h : headings) {
        const auto candidate = arena.clamp(pose.position + h * step);
        const double gap = nearest_distance(candidate, honest);
        if (gap > best_gap + 1e-12) {
            best_gap = gap;
            best_pos = candidate;
            best_dir = h;
        }
    }
    pose.position = best_pos;
    pose.velocity = best_dir * speed_mps;
    pose.waypoint = best_pos;
    return pose;
}

}  // namespace pads::adversary
