#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pads/bitmask.hpp"
#include "pads/netsim/geometry.hpp"

namespace pads::netsim {

enum class TopologyKind { RandomMobility, StaticTree, StaticGraph };

struct TopologySpec {
    TopologyKind kind = TopologyKind::RandomMobility;
    std::size_t branching = 2;                          // StaticTree
    std::vector<std::pair<NodeId, NodeId>> edges;       // StaticGraph
    friend bool operator==(const TopologySpec&, const TopologySpec&) = default;
};

/// Undirected graph with fixed adjacency.
class StaticGraph {
public:
    StaticGraph() = default;
    explicit StaticGraph(std::size_t n) : adjacency_(n) {}

    /// Throws ConfigError on out-of-range endpoints or self loops.
    static StaticGraph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges);
    /// Complete br-ary tree in heap order: parent(i) = (i - 1) / br.
    static StaticGraph complete_tree(std::size_t n, std::size_t branching);

    void add_edge(NodeId a, NodeId b);
    std::size_t size() const { return adjacency_.size(); }
    std::span<const NodeId> neighbors(NodeId i) const { return adjacency_[i]; }
    bool connected() const;
    /// BFS hop distances from src (SIZE_MAX when unreachable).
    std::vector<std::size_t> hop_distances(NodeId src) const;
    /// Longest shortest path; nullopt if disconnected.
    std::optional<std::size_t> diameter() const;
    bool is_tree() const;

private:
    std::vector<std::vector<NodeId>> adjacency_;
};

/// Uniform grid with cell side >= radio range for range queries.
class SpatialIndex {
public:
    SpatialIndex(const Arena& arena, double range);

    void rebuild(std::span<const Vec2> positions, const std::vector<bool>& present);
    /// Nodes j != i with present[j] and distance <= range, ascending id.
    void within_range(NodeId i, std::span<const Vec2> positions, std::vector<NodeId>& out) const;
    /// Present nodes within range of an arbitrary point.
    void within_range(Vec2 p, std::span<const Vec2> positions, std::vector<NodeId>& out) const;

private:
    std::size_t cell_of(Vec2 p) const;

    double range_;
    double cell_;
    std::size_t cols_ = 1;
    std::size_t rows_ = 1;
    std::vector<std::vector<NodeId>> cells_;
};

}  // namespace pads::netsim
