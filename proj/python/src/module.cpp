// Python bindings. Cells cross the boundary as ints (0 Compromised,
// 2 Healthy, 3 Unknown); configs as JSON text or dicts serialized by the
// Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pads/baseline.hpp"
#include "pads/batch.hpp"
#include "pads/bitmask.hpp"
#include "pads/crypto.hpp"
#include "pads/error.hpp"
#include "pads/message.hpp"
#include "pads/metrics.hpp"
#include "pads/netsim/engine.hpp"
#include "pads/scenario.hpp"

namespace py = pybind11;
using namespace pads;

namespace {

ObservationBitmask to_mask(const std::vector<int>& cells) {
    std::vector<CellStatus> out;
    out.reserve(cells.size());
    for (int c : cells) {
        if (c < 0 || c > 3 || !is_valid_cell(static_cast<std::uint8_t>(c))) {
            throw py::value_error("cell values must be 0, 2 or 3");
        }
        out.push_back(static_cast<CellStatus>(c));
    }
    return ObservationBitmask::from_cells(out);
}

std::vector<int> from_mask(const ObservationBitmask& m) {
    std::vector<int> out;
    for (auto c : m.cells()) out.push_back(static_cast<int>(c));
    return out;
}

crypto::MacAlgorithm mac_alg(const std::string& name) {
    if (name == "hmac-sha1") return crypto::MacAlgorithm::HmacSha1;
    if (name == "hmac-sha256") return crypto::MacAlgorithm::HmacSha256;
    throw py::value_error("unknown MAC algorithm " + name);
}

std::vector<std::uint8_t> bytes_of(const py::bytes& b) {
    const std::string s = b;
    return {s.begin(), s.end()};
}

py::bytes to_bytes(std::span<const std::uint8_t> v) {
    return py::bytes(reinterpret_cast<const char*>(v.data()), v.size());
}

py::object mct_seconds(const std::optional<Duration>& d) {
    if (!d) return py::none();
    return py::float_(to_seconds(*d));
}

py::dict run_to_dict(const ScenarioConfig& cfg, const netsim::RunResult& r) {
    py::list epochs;
    for (const auto& ep : r.ledger.epochs) {
        py::dict e;
        e["index"] = ep.index;
        e["t_att"] = ep.t_att;
        e["reachable"] = ep.reachable.size();
        py::list mct;
        for (const auto& m : ep.mct) mct.append(mct_seconds(m));
        e["mct_s"] = mct;
        py::dict cov;
        for (const auto& s : ep.coverage) {
            py::list pts;
            for (const auto& p : s.samples) {
                pts.append(py::make_tuple(to_seconds(p.t - at_seconds(ep.t_att)), p.y));
            }
            cov[py::float_(s.x)] = pts;
        }
        e["coverage"] = cov;
        py::list queries;
        for (const auto& q : ep.queries) {
            py::dict d;
            d["t_s"] = to_seconds(q.t_query - at_seconds(ep.t_att));
            d["answered"] = q.answered;
            d["r"] = q.outcome.r;
            d["rho"] = q.outcome.rho;
            queries.append(d);
        }
        e["queries"] = queries;
        epochs.append(e);
    }
    const auto& c = r.ledger.counters;
    py::dict counters;
    counters["messages_sent"] = c.messages_sent;
    counters["frames_sent"] = c.frames_sent;
    counters["bytes_sent"] = c.bytes_sent;
    counters["deliveries"] = c.deliveries;
    counters["accepted"] = c.accepted;
    counters["rejected"] = c.rejected_total();
    counters["forged_accepted"] = c.forged_accepted;
    counters["replays_prior_epoch_accepted"] = c.replays_prior_epoch_accepted;

    py::dict out;
    out["seed"] = r.seed;
    out["epochs"] = epochs;
    out["counters"] = counters;
    out["end_s"] = to_seconds(r.end);
    out["events"] = r.events;
    out["summary_csv"] = summary_csv(cfg, r);
    out["coverage_csv"] = coverage_csv(r);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Collective attestation simulator core";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);

    m.def("combine", [](const std::vector<int>& own, const std::vector<std::vector<int>>& received) {
        std::vector<ObservationBitmask> rx;
        for (const auto& r : received) rx.push_back(to_mask(r));
        return from_mask(combine(to_mask(own), rx));
    }, py::arg("own"), py::arg("received"));

    m.def("message_bits", &metrics::message_bits, py::arg("n"));
    m.def("memory_bits", &metrics::memory_bits, py::arg("key_bits"), py::arg("n"), py::arg("h_size"));
    m.def("representativity", [](const std::vector<int>& cells) { return metrics::representativity(to_mask(cells)); },
          py::arg("cells"));
    m.def("coverage", [](const std::vector<std::vector<int>>& masks, const std::vector<NodeId>& reachable, double x) {
        std::vector<ObservationBitmask> ms;
        for (const auto& c : masks) ms.push_back(to_mask(c));
        return metrics::coverage(ms, reachable, x);
    }, py::arg("masks"), py::arg("reachable"), py::arg("x"));

    m.def("mac_sign", [](const py::bytes& key, const py::bytes& msg, const std::string& alg) {
        crypto::SymKey k{bytes_of(key)};
        const auto tag = crypto::mac_sign(k, bytes_of(msg), mac_alg(alg));
        return to_bytes(tag.bytes);
    }, py::arg("key"), py::arg("message"), py::arg("alg") = "hmac-sha1");

    m.def("encode_message", [](const std::vector<int>& cells, std::uint32_t t_stamp, std::uint32_t t_att,
                               const py::bytes& key) {
        AttestationMessage msg;
        msg.bitmask = to_mask(cells);
        msg.t_stamp = t_stamp;
        msg.t_att = t_att;
        msg.tag = crypto::mac_sign(crypto::SymKey{bytes_of(key)}, mac_payload(msg.bitmask, t_stamp, t_att));
        return to_bytes(encode(msg));
    }, py::arg("cells"), py::arg("t_stamp"), py::arg("t_att"), py::arg("key"));

    m.def("decode_message", [](const py::bytes& wire, std::size_t n) {
        const auto msg = decode(bytes_of(wire), n);
        py::dict d;
        d["cells"] = from_mask(msg.bitmask);
        d["t_stamp"] = msg.t_stamp;
        d["t_att"] = msg.t_att;
        d["tag"] = to_bytes(msg.tag.bytes);
        return d;
    }, py::arg("wire"), py::arg("n"));

    m.def("validate_config", [](const std::string& text) {
        std::vector<std::string> warnings;
        const auto cfg = parse_config_text(text, &warnings);
        return py::make_tuple(to_json(cfg).dump(), warnings);
    }, py::arg("config_json"), "Parses and validates; returns (normalized JSON, warnings).");

    m.def("simulate", [](const std::string& text, std::uint64_t seed) {
        const auto cfg = parse_config_text(text);
        netsim::RunResult r;
        {
            py::gil_scoped_release release;
            r = netsim::run(cfg, seed);
        }
        return run_to_dict(cfg, r);
    }, py::arg("config_json"), py::arg("seed"));

    m.def("run_batch", [](const std::string& text, const std::string& out_dir, std::size_t jobs) {
        const auto cfg = parse_config_text(text);
        BatchResult r;
        {
            py::gil_scoped_release release;
            r = run_batch(cfg, {out_dir, jobs, false, nullptr});
        }
        py::list failures;
        for (const auto& f : r.failures) failures.append(py::make_tuple(f.seed, f.what));
        return py::make_tuple(r.completed, failures);
    }, py::arg("config_json"), py::arg("out_dir"), py::arg("jobs") = 1);

    m.def("tree_baseline", [](const std::string& text) {
        const auto r = baseline::run_tree_baseline(parse_config_text(text));
        py::dict d;
        d["completion_s"] = to_seconds(r.completion);
        d["messages"] = r.messages;
        d["frames"] = r.frames;
        d["depth"] = r.depth;
        return d;
    }, py::arg("config_json"));
}
