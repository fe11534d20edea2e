#pragma once

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "pads/time.hpp"

namespace pads::netsim {

/// Min-heap of timestamped events. Ties are broken by insertion sequence,
/// so processing order is a pure function of the push order.
template <class Payload>
class EventQueue {
public:
    struct Entry {
        SimTime time;
        std::uint64_t seq;
        Payload payload;
    };

    void push(SimTime t, Payload p) { heap_.push(Entry{t, next_seq_++, std::move(p)}); }

    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }
    SimTime next_time() const { return heap_.top().time; }

    Entry pop() {
        Entry e = std::move(const_cast<Entry&>(heap_.top()));
        heap_.pop();
        return e;
    }

private:
    struct Later {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.time != b.time) return a.time > b.time;
            return a.seq > b.seq;
        }
    };

    std::priority_queue<Entry, std::vector<Entry>, Later> heap_;
    std::uint64_t next_seq_ = 0;
};

}  // namespace pads::netsim
