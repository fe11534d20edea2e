#include "pads/baseline.hpp"

#include <deque>
#include <functional>

#include "pads/error.hpp"
#include "pads/message.hpp"
#include "pads/netsim/event_queue.hpp"
#include "pads/netsim/radio.hpp"

namespace pads::baseline {
namespace {

struct Cpu {
    bool busy = false;
    std::deque<std::pair<Duration, std::function<void(SimTime)>>> jobs;
};

class TreeRun {
public:
    explicit TreeRun(const ScenarioConfig& cfg)
        : cfg_(cfg), n_(cfg.n), br_(cfg.topology.branching), cpu_(cfg.n), pending_reports_(cfg.n, 0),
          attested_(cfg.n, false) {
        query_tx_ = cfg.radio.tx_time(kQueryBytes);
        report_tx_ = cfg.radio.tx_time(message_byte_length(n_));
        query_frames_ = cfg.radio.frames_for(kQueryBytes);
        report_frames_ = cfg.radio.frames_for(message_byte_length(n_));
    }

    TreeBaselineResult run() {
        for (std::size_t i = 0; i < n_; ++i) pending_reports_[i] = children(i).second - children(i).first;
        start_node(0, SimTime{});
        while (!queue_.empty()) {
            auto e = queue_.pop();
            e.payload(e.time);
        }
        for (std::size_t d = 0, span = 1, total = 1; total < n_; ++d) {
            span *= br_;
            total += span;
            result_.depth = d + 1;
        }
        return result_;
    }

private:
    std::pair<std::size_t, std::size_t> children(std::size_t i) const {
        const auto first = std::min(n_, i * br_ + 1);
        const auto last = std::min(n_, i * br_ + br_ + 1);
        return {first, last};
    }

    void submit(std::size_t node, Duration d, std::function<void(SimTime)> done, SimTime now) {
        cpu_[node].jobs.emplace_back(d, std::move(done));
        pump(node, now);
    }

    void pump(std::size_t node, SimTime now) {
        auto& cpu = cpu_[node];
        if (cpu.busy || cpu.jobs.empty()) return;
        auto [d, done] = std::move(cpu.jobs.front());
        cpu.jobs.pop_front();
        cpu.busy = true;
        queue_.push(now + d, [this, node, done = std::move(done)](SimTime t) {
            cpu_[node].busy = false;
            done(t);
            pump(node, t);
        });
    }

    void send(std::size_t frames, Duration tx, SimTime now, std::function<void(SimTime)> arrive) {
        ++result_.messages;
        result_.frames += frames;
        queue_.push(now + tx, std::move(arrive));
    }

    // Node holds a valid query: forward it, then self-attest.
    void start_node(std::size_t i, SimTime now) {
        const auto [first, last] = children(i);
        if (first < last) {
            submit(i, cfg_.delays.mac, [this, i, first, last](SimTime t) {
                for (auto c = first; c < last; ++c) {
                    send(query_frames_, query_tx_, t, [this, c](SimTime at) { receive_query(c, at); });
                }
            }, now);
        }
        submit(i, cfg_.delays.attest, [this, i](SimTime t) {
            attested_[i] = true;
            maybe_report(i, t);
        }, now);
    }

    void receive_query(std::size_t i, SimTime now) {
        submit(i, cfg_.delays.mac, [this, i](SimTime t) { start_node(i, t); }, now);
    }

    void receive_report(std::size_t parent, SimTime now) {
        submit(parent, cfg_.delays.mac, [this, parent](SimTime t) {
            --pending_reports_[parent];
            maybe_report(parent, t);
        }, now);
    }

    void maybe_report(std::size_t i, SimTime now) {
        if (!attested_[i] || pending_reports_[i] > 0) return;
        if (i == 0) {
            result_.completion = now - SimTime{};
            return;
        }
        submit(i, cfg_.delays.mac, [this, i](SimTime t) {
            const auto parent = (i - 1) / br_;
            send(report_frames_, report_tx_, t, [this, parent](SimTime at) { receive_report(parent, at); });
        }, now);
    }

    const ScenarioConfig& cfg_;
    std::size_t n_;
    std::size_t br_;
    std::vector<Cpu> cpu_;
    std::vector<std::size_t> pending_reports_;
    std::vector<bool> attested_;
    Duration query_tx_{};
    Duration report_tx_{};
    std::size_t query_frames_ = 0;
    std::size_t report_frames_ = 0;
    netsim::EventQueue<std::function<void(SimTime)>> queue_;
    TreeBaselineResult result_;
};

}  // namespace

TreeBaselineResult run_tree_baseline(const ScenarioConfig& cfg) {
    validate(cfg);
    if (cfg.topology.kind != netsim::TopologyKind::StaticTree) {
        throw ConfigError("topology.kind", "naive tree aggregation needs a static tree");
    }
    TreeRun run(cfg);
    return run.run();
}

}  // namespace pads::baseline
