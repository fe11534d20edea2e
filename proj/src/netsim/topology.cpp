#include "pads/netsim/topology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "pads/error.hpp"

namespace pads::netsim {

StaticGraph StaticGraph::from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges) {
    StaticGraph g(n);
    for (auto [a, b] : edges) {
        if (a >= n || b >= n) {
            throw ConfigError("topology.edges", "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                                    ") outside [0, n)");
        }
        if (a == b) throw ConfigError("topology.edges", "self loop on node " + std::to_string(a));
        g.add_edge(a, b);
    }
    return g;
}

StaticGraph StaticGraph::complete_tree(std::size_t n, std::size_t branching) {
    if (branching < 1) throw ConfigError("topology.branching", "must be >= 1");
    StaticGraph g(n);
    for (std::size_t i = 1; i < n; ++i) {
        g.add_edge(static_cast<NodeId>((i - 1) / branching), static_cast<NodeId>(i));
    }
    return g;
}

void StaticGraph::add_edge(NodeId a, NodeId b) {
    auto link = [this](NodeId u, NodeId v) {
        auto& adj = adjacency_[u];
        auto it = std::lower_bound(adj.begin(), adj.end(), v);
        if (it == adj.end() || *it != v) adj.insert(it, v);
    };
    link(a, b);
    link(b, a);
}

std::vector<std::size_t> StaticGraph::hop_distances(NodeId src) const {
    std::vector<std::size_t> dist(size(), std::numeric_limits<std::size_t>::max());
    std::deque<NodeId> frontier{src};
    dist[src] = 0;
    while (!frontier.empty()) {
        const auto u = frontier.front();
        frontier.pop_front();
        for (auto v : adjacency_[u]) {
            if (dist[v] == std::numeric_limits<std::size_t>::max()) {
                dist[v] = dist[u] + 1;
                frontier.push_back(v);
            }
        }
    }
    return dist;
}

bool StaticGraph::connected() const {
    if (size() == 0) return true;
    const auto d = hop_distances(0);
    return std::none_of(d.begin(), d.end(),
                        [](auto x) { return x == std::numeric_limits<std::size_t>::max(); });
}

std::optional<std::size_t> StaticGraph::diameter() const {
    std::size_t best = 0;
    for (NodeId s = 0; s < size(); ++s) {
        for (auto d : hop_distances(s)) {
            if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
            best = std::max(best, d);
        }
    }
    return best;
}

bool StaticGraph::is_tree() const {
    std::size_t degree_sum = 0;
    for (const auto& adj : adjacency_) degree_sum += adj.size();
    return connected() && (size() == 0 || degree_sum / 2 == size() - 1);
}

SpatialIndex::SpatialIndex(const Arena& arena, double range) : range_(range), cell_(std::max(range, 1.0)) {
    cols_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(arena.width / cell_)));
    rows_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(arena.height / cell_)));
    cells_.resize(cols_ * rows_);
}

std::size_t SpatialIndex::cell_of(Vec2 p) const {
    const auto cx = std::min(cols_ - 1, static_cast<std::size_t>(std::max(0.0, p.x / cell_)));
    const auto cy = std::min(rows_ - 1, static_cast<std::size_t>(std::max(0.0, p.y / cell_)));
    return cy * cols_ + cx;
}

void SpatialIndex::rebuild(std::span<const Vec2> positions, const std::vector<bool>& present) {
    for (auto& c : cells_) c.clear();
    for (NodeId i = 0; i < positions.size(); ++i) {
        if (present[i]) cells_[cell_of(positions[i])].push_back(i);
    }
}

void SpatialIndex::within_range(Vec2 p, std::span<const Vec2> positions, std::vector<NodeId>& out) const {
    out.clear();
    const auto home = cell_of(p);
    const auto cx = static_cast<long>(home % cols_);
    const auto cy = static_cast<long>(home / cols_);
    for (long dy = -1; dy <= 1; ++dy) {
        for (long dx = -1; dx <= 1; ++dx) {
            const long x = cx + dx;
            const long y = cy + dy;
            if (x < 0 || y < 0 || x >= static_cast<long>(cols_) || y >= static_cast<long>(rows_)) continue;
            for (auto j : cells_[static_cast<std::size_t>(y) * cols_ + static_cast<std::size_t>(x)]) {
                if (distance(p, positions[j]) <= range_) out.push_back(j);
            }
        }
    }
    std::sort(out.begin(), out.end());
}

void SpatialIndex::within_range(NodeId i, std::span<const Vec2> positions, std::vector<NodeId>& out) const {
    within_range(positions[i], positions, out);
    out.erase(std::remove(out.begin(), out.end(), i), out.end());
}

}  // namespace pads::netsim
