#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "pads/crypto.hpp"
#include "pads/message.hpp"
#include "pads/netsim/geometry.hpp"
#include "pads/prover.hpp"
#include "pads/time.hpp"

namespace pads::adversary {

/// Dolev-Yao channel attacker. It lacks k_att unless key_compromised is set
/// (a demonstration toggle, never part of acceptance runs).
struct ComPlan {
    double drop_rate = 0.0;
    bool replay = false;
    bool forge = false;
    /// Rewrite a cell of genuine frames in flight (tag left as is).
    bool modify = false;
    /// Probability per genuine delivery of injecting a forgery / a replay.
    double inject_rate = 1.0;
    /// Corrupt the tag of snapshots pulled by the verifier.
    bool tamper_verifier = false;
    bool key_compromised = false;
    friend bool operator==(const ComPlan&, const ComPlan&) = default;
};

/// Remote malware injection: victims' attested regions are rewritten at
/// first T_att + tamper_offset (negative = before the attestation).
struct SoftPlan {
    std::vector<NodeId> victims;
    Duration tamper_offset{-std::chrono::seconds{1}};
    friend bool operator==(const SoftPlan&, const SoftPlan&) = default;
};

/// Victims keep away from honest provers.
struct MobPlan {
    std::vector<NodeId> victims;
    double speed_mps = 15.0;
    friend bool operator==(const MobPlan&, const MobPlan&) = default;
};

struct AdversaryPlan {
    std::optional<ComPlan> com;
    std::optional<SoftPlan> soft;
    std::optional<MobPlan> mob;

    bool empty() const { return !com && !soft && !mob; }
    friend bool operator==(const AdversaryPlan&, const AdversaryPlan&) = default;
};

enum class Origin : std::uint8_t { Genuine, Replay, Forged, Modified };

struct AdversarialMessage {
    AttestationMessage msg;
    Origin origin = Origin::Forged;
    /// Replays only: the message belongs to an earlier epoch.
    bool prior_epoch = false;
};

struct Deliver {};
struct Drop {};
struct Replace {
    AdversarialMessage frame;
};
/// Deliver the original plus extra frames.
struct Inject {
    std::vector<AdversarialMessage> extra;
};
using Action = std::variant<Deliver, Drop, Replace, Inject>;

class ComAdversary {
public:
    ComAdversary(ComPlan plan, crypto::PrngState rng, std::optional<crypto::SymKey> stolen_key = {});

    const ComPlan& plan() const { return plan_; }

    /// Decide the fate of one genuine frame from `sender` on its way to one
    /// receiver. Replays prefer frames from an earlier epoch; otherwise the
    /// oldest frame captured from the same sender in this epoch is re-sent,
    /// so the channel attacker never relays fresh information between
    /// distant provers.
    Action intercept(const AttestationMessage& frame, SimTime t, NodeId sender = 0);

    /// Frame with an attacker-chosen bitmask (every prover Healthy) and a
    /// random tag (a valid one if the key was stolen).
    AttestationMessage forge(std::size_t n, std::uint32_t t_att, std::uint32_t t_stamp);

    /// Flip one tag bit.
    void corrupt(AttestationMessage& msg);

private:
    void capture(const AttestationMessage& frame, NodeId sender);

    ComPlan plan_;
    crypto::PrngState rng_;
    std::optional<crypto::SymKey> stolen_key_;
    std::map<std::uint32_t, std::deque<std::pair<NodeId, AttestationMessage>>> captured_;
};

/// Free-function form of ComAdversary::intercept.
Action com_intercept(ComAdversary& adversary, const AttestationMessage& frame, SimTime t, NodeId sender = 0);

/// Rewrite bytes of the victim's attested region. The key and protocol code
/// stay out of reach, so later messages are still honestly MAC'd.
void soft_compromise(ProverState& victim, crypto::PrngState& rng);

/// Evasion move: among the heading directly away from the nearest honest
/// prover and 16 compass headings, take the one maximising the distance to
/// the nearest honest prover after a step of speed*dt (clamped to the arena).
netsim::NodePose mob_evade(netsim::NodePose pose, std::span<const netsim::Vec2> honest, double speed_mps,
                           Duration dt, const netsim::Arena& arena);

}  // namespace pads::adversary
