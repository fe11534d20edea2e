#pragma once

#include <cstddef>
#include <cstdint>

#include "pads/time.hpp"

namespace pads::netsim {

/// IEEE 802.15.4-like link: fixed frames, no contention, independent
/// per-frame loss.
struct RadioModel {
    double range_m = 75.0;
    double data_rate_bps = 250'000.0;
    std::size_t frame_size_bytes = 127;
    std::size_t frame_payload_bytes = 102;
    double loss_prob = 0.0;

    /// On-air time of one full frame (127 B at 250 kb/s = 4.064 ms).
    Duration frame_time() const;
    std::size_t frames_for(std::size_t payload_bytes) const;
    Duration tx_time(std::size_t payload_bytes) const { return frame_time() * frames_for(payload_bytes); }

    friend bool operator==(const RadioModel&, const RadioModel&) = default;
};

/// Timing of one broadcast started at t: MAC computation, then the frames
/// back to back. Receivers get the message when the last frame lands.
struct BroadcastTiming {
    std::size_t frames = 0;
    Duration mac_delay{0};
    Duration tx_time{0};

    Duration delivery_offset() const { return mac_delay + tx_time; }
};

BroadcastTiming plan_broadcast(const RadioModel& radio, std::size_t payload_bytes, Duration mac_delay);

}  // namespace pads::netsim
