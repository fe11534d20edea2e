#include "pads/batch.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "pads/error.hpp"

namespace pads {
namespace {

std::string fixed(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, v);
    return buf;
}

std::string run_id(std::uint64_t seed) { return "seed" + std::to_string(seed); }

}  // namespace

std::string coverage_csv_header() { return "run_id,epoch,t_us,x,y"; }

std::string summary_csv_header() {
    std::string h =
        "run_id,epoch,t_att_s,target_x,target_y,reachable,mct_us,messages,frames,bytes,deliveries,accepted,"
        "energy_total_j,energy_bound_j";
    for (std::size_t c = 0; c < metrics::kRejectCauseCount; ++c) {
        h += ",rejected_";
        h += metrics::to_string(static_cast<metrics::RejectCause>(c));
    }
    h += ",forged_injected,forged_accepted,replays_prior_epoch_injected,replays_prior_epoch_accepted";
    return h;
}

std::string verifier_csv_header() {
    return "run_id,epoch,t_query_us,answered,node,r,rho,healthy,compromised,unknown,false_claims";
}

std::string aggregate_csv_header() { return "target_x,target_y,runs,reached,mean_mct_s,stddev_mct_s"; }

std::string coverage_csv(const netsim::RunResult& run) {
    std::ostringstream out;
    out << coverage_csv_header() << '\n';
    for (const auto& ep : run.ledger.epochs) {
        const auto t_att = at_seconds(ep.t_att);
        for (const auto& series : ep.coverage) {
            for (const auto& s : series.samples) {
                out << run_id(run.seed) << ',' << ep.index << ',' << to_us(s.t - t_att) << ',' << fixed(s.x, 4) << ','
                    << fixed(s.y, 6) << '\n';
            }
        }
    }
    return out.str();
}

std::string summary_csv(const ScenarioConfig& cfg, const netsim::RunResult& run) {
    const auto& c = run.ledger.counters;
    double energy = 0, bound = 0;
    for (const auto& e : run.ledger.energy) {
        energy += e.total(cfg.n, cfg.energy);
        bound += e.bound(cfg.n, cfg.energy);
    }
    std::ostringstream out;
    out << summary_csv_header() << '\n';
    for (const auto& ep : run.ledger.epochs) {
        for (std::size_t k = 0; k < cfg.coverage_targets.size(); ++k) {
            const auto& t = cfg.coverage_targets[k];
            out << run_id(run.seed) << ',' << ep.index << ',' << ep.t_att << ',' << fixed(t.x, 4) << ','
                << fixed(t.y, 4) << ',' << ep.reachable.size() << ',';
            if (ep.mct[k]) {
                out << to_us(*ep.mct[k]);
            } else {
                out << "not-reached";
            }
            out << ',' << c.messages_sent << ',' << c.frames_sent << ',' << c.bytes_sent << ',' << c.deliveries << ','
                << c.accepted << ',' << fixed(energy, 9) << ',' << fixed(bound, 9);
            for (auto r : c.rejected) out << ',' << r;
            out << ',' << c.forged_injected << ',' << c.forged_accepted << ',' << c.replays_prior_epoch_injected << ','
                << c.replays_prior_epoch_accepted << '\n';
        }
    }
    return out.str();
}

std::string verifier_csv(const netsim::RunResult& run) {
    std::ostringstream out;
    out << verifier_csv_header() << '\n';
    for (const auto& ep : run.ledger.epochs) {
        for (const auto& q : ep.queries) {
            out << run_id(run.seed) << ',' << ep.index << ',' << to_us(q.t_query - at_seconds(ep.t_att)) << ','
                << (q.answered ? 1 : 0) << ',';
            if (!q.answered) {
                out << ",,,,,,\n";
                continue;
            }
            std::size_t counts[3] = {0, 0, 0};
            for (auto cl : q.outcome.classification) ++counts[static_cast<std::size_t>(cl)];
            out << q.outcome.queried_node << ',' << (q.outcome.r ? 1 : 0) << ',' << fixed(q.outcome.rho, 6) << ','
                << counts[0] << ',' << counts[1] << ',' << counts[2] << ','
                << verifier::false_claims(q.outcome, ep.ground_truth) << '\n';
        }
    }
    return out.str();
}

std::string aggregate_csv(const ScenarioConfig& cfg, const std::vector<netsim::RunResult>& runs) {
    std::ostringstream out;
    out << aggregate_csv_header() << '\n';
    for (std::size_t k = 0; k < cfg.coverage_targets.size(); ++k) {
        std::size_t total = 0;
        std::vector<double> values;
        for (const auto& run : runs) {
            for (const auto& ep : run.ledger.epochs) {
                ++total;
                if (ep.mct[k]) values.push_back(to_seconds(*ep.mct[k]));
            }
        }
        double mean = 0, sd = 0;
        for (auto v : values) mean += v;
        if (!values.empty()) mean /= static_cast<double>(values.size());
        if (values.size() > 1) {
            for (auto v : values) sd += (v - mean) * (v - mean);
            sd = std::sqrt(sd / static_cast<double>(values.size() - 1));
        }
        const auto& t = cfg.coverage_targets[k];
        out << fixed(t.x, 4) << ',' << fixed(t.y, 4) << ',' << total << ',' << values.size() << ',';
        if (values.empty()) {
            out << "not-reached,";
        } else {
            out << fixed(mean, 6) << ',' << fixed(sd, 6);
        }
        out << '\n';
    }
    return out.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp.string());
        f << content;
        if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

BatchResult run_batch(const ScenarioConfig& cfg, const BatchOptions& options) {
    validate(cfg);
    BatchResult result;
    const auto runs_dir = options.out_dir / "runs";
    std::filesystem::create_directories(runs_dir);
    write_atomic(options.out_dir / "config.json", to_json(cfg).dump(2) + "\n");

    std::vector<std::optional<netsim::RunResult>> runs(cfg.seeds.size());
    std::vector<std::optional<std::string>> errors(cfg.seeds.size());
    std::mutex log_mutex;
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (auto i = next++; i < cfg.seeds.size(); i = next++) {
            const auto seed = cfg.seeds[i];
            try {
                std::ostringstream trace;
                auto run = netsim::run(cfg, seed, options.trace ? &trace : nullptr);
                const auto stem = "run_" + std::to_string(seed);
                write_atomic(runs_dir / (stem + "_coverage.csv"), coverage_csv(run));
                write_atomic(runs_dir / (stem + "_summary.csv"), summary_csv(cfg, run));
                write_atomic(runs_dir / (stem + "_verifier.csv"), verifier_csv(run));
                if (options.trace) write_atomic(runs_dir / (stem + "_trace.log"), trace.str());
                if (options.log) {
                    std::lock_guard lock(log_mutex);
                    *options.log << "seed " << seed << ": " << run.events << " events, ended at "
                                 << fixed(to_seconds(run.end), 3) << " s\n";
                }
                runs[i] = std::move(run);
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const auto jobs = std::max<std::size_t>(1, std::min(options.jobs, cfg.seeds.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<netsim::RunResult> done;
    for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
        if (runs[i]) {
            result.completed.push_back(cfg.seeds[i]);
            done.push_back(std::move(*runs[i]));
        } else {
            result.failures.push_back({cfg.seeds[i], errors[i].value_or("unknown failure")});
        }
    }
    write_atomic(options.out_dir / "aggregate.csv", aggregate_csv(cfg, done));

    if (cfg.baseline == BaselineKind::NaiveTreeAggregation) {
        const auto b = baseline::run_tree_baseline(cfg);
        result.baseline = b;
        std::ostringstream out;
        out << "n,branching,depth,completion_us,messages,frames\n"
            << cfg.n << ',' << cfg.topology.branching << ',' << b.depth << ',' << to_us(b.completion) << ','
            << b.messages << ',' << b.frames << '\n';
        write_atomic(options.out_dir / "baseline.csv", out.str());
    }
    return result;
}

}  // namespace pads
