#pragma once

#include <chrono>
#include <cstdint>

namespace pads {

/// Simulation clock. Integer microseconds since scenario start, so event
/// ordering never depends on floating-point rounding.
struct SimClock {
    using rep = std::int64_t;
    using period = std::micro;
    using duration = std::chrono::microseconds;
    using time_point = std::chrono::time_point<SimClock>;
    static constexpr bool is_steady = true;
};

using Duration = SimClock::duration;
using SimTime = SimClock::time_point;

constexpr SimTime at_us(std::int64_t us) { return SimTime{Duration{us}}; }
constexpr SimTime at_seconds(std::uint32_t s) { return SimTime{std::chrono::seconds{s}}; }
constexpr std::int64_t to_us(SimTime t) { return t.time_since_epoch().count(); }
constexpr std::int64_t to_us(Duration d) { return d.count(); }

/// Whole seconds since scenario start, as carried on the wire.
constexpr std::uint32_t whole_seconds(SimTime t) {
    return static_cast<std::uint32_t>(to_us(t) / 1'000'000);
}

constexpr double to_seconds(Duration d) { return static_cast<double>(d.count()) / 1e6; }
constexpr double to_seconds(SimTime t) { return to_seconds(t.time_since_epoch()); }

inline Duration from_seconds(double s) {
    return Duration{static_cast<std::int64_t>(s * 1e6 + (s >= 0 ? 0.5 : -0.5))};
}
inline Duration from_millis(double ms) { return from_seconds(ms / 1e3); }

}  // namespace pads
