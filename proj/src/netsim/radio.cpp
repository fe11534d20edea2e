#include "pads/netsim/radio.hpp"

#include <cmath>

namespace pads::netsim {

Duration RadioModel::frame_time() const {
    const double us = static_cast<double>(frame_size_bytes) * 8.0 / data_rate_bps * 1e6;
    return Duration{static_cast<std::int64_t>(std::llround(us))};
}

std::size_t RadioModel::frames_for(std::size_t payload_bytes) const {
    return (payload_bytes + frame_payload_bytes - 1) / frame_payload_bytes;
}

BroadcastTiming plan_broadcast(const RadioModel& radio, std::size_t payload_bytes, Duration mac_delay) {
    BroadcastTiming t;
    t.frames = radio.frames_for(payload_bytes);
    t.mac_delay = mac_delay;
    t.tx_time = radio.frame_time() * t.frames;
    return t;
}

}  // namespace pads::netsim
