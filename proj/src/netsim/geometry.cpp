#include "pads/netsim/geometry.hpp"

#include <algorithm>

#include "pads/error.hpp"

namespace pads::netsim {

Arena Arena::scaled(std::size_t n, double base_side) {
    const double side = base_side * std::sqrt(static_cast<double>(n) / 128.0);
    return Arena{side, side};
}

Vec2 Arena::clamp(Vec2 p) const {
    return {std::clamp(p.x, 0.0, width), std::clamp(p.y, 0.0, height)};
}

Vec2 Arena::random_point(crypto::PrngState& rng) const {
    const double x = rng.uniform(0.0, width);
    const double y = rng.uniform(0.0, height);
    return {x, y};
}

NodePose random_pose(const Arena& arena, crypto::PrngState& rng) {
    NodePose p;
    p.position = arena.random_point(rng);
    p.waypoint = p.position;
    return p;
}

NodePose mobility_step(NodePose pose, Duration dt, crypto::PrngState& rng, const Arena& arena,
                       SpeedRange speeds) {
    if (dt <= Duration{0}) throw InvalidInput("mobility step needs dt > 0");
    constexpr double kArrived = 1e-9;
    auto to_target = pose.waypoint - pose.position;
    if (to_target.norm() <= kArrived) {
        pose.waypoint = arena.random_point(rng);
        const double speed = rng.uniform(speeds.min_mps, speeds.max_mps);
        to_target = pose.waypoint - pose.position;
        const double len = to_target.norm();
        pose.velocity = len > kArrived ? to_target * (speed / len) : Vec2{};
    }
    const double remaining = to_target.norm();
    const double step = pose.speed() * to_seconds(dt);
    if (step >= remaining) {
        pose.position = pose.waypoint;
    } else if (remaining > 0) {
        pose.position = pose.position + to_target * (step / remaining);
    }
    pose.position = arena.clamp(pose.position);
    return pose;
}

}  // namespace pads::netsim
