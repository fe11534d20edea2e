#pragma once

#include <cmath>
#include <cstddef>

#include "pads/crypto.hpp"
#include "pads/time.hpp"

namespace pads::netsim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(Vec2, Vec2) = default;
    double norm() const { return std::hypot(x, y); }
};

inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }

/// Rectangular deployment area [0, width] x [0, height].
struct Arena {
    double width = 1000.0;
    double height = 1000.0;

    /// Square arena with area base_side^2 * n / 128.
    static Arena scaled(std::size_t n, double base_side = 1000.0);

    double area() const { return width * height; }
    double diagonal() const { return std::hypot(width, height); }
    bool contains(Vec2 p) const { return p.x >= 0 && p.y >= 0 && p.x <= width && p.y <= height; }
    Vec2 clamp(Vec2 p) const;
    Vec2 random_point(crypto::PrngState& rng) const;
    friend bool operator==(const Arena&, const Arena&) = default;
};

struct SpeedRange {
    double min_mps = 1.0;
    double max_mps = 15.0;
    friend bool operator==(const SpeedRange&, const SpeedRange&) = default;
};

struct NodePose {
    Vec2 position;
    Vec2 velocity;
    Vec2 waypoint;

    double speed() const { return velocity.norm(); }
};

/// Initial pose: uniform position, waypoint set to the position so the first
/// step draws a fresh leg.
NodePose random_pose(const Arena& arena, crypto::PrngState& rng);

/// Random-waypoint update. On arrival (position == waypoint) a new uniform
/// waypoint and speed in [min, max] are drawn; otherwise the node moves
/// speed*dt toward the waypoint, stopping on it. Result is clamped to the
/// arena. Throws InvalidInput unless dt > 0.
NodePose mobility_step(NodePose pose, Duration dt, crypto::PrngState& rng, const Arena& arena,
                       SpeedRange speeds);

}  // namespace pads::netsim
