#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rfs {

// Undirected edge with endpoints normalized to u < v.
struct Edge {
    int u;
    int v;
    double w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph with real edge costs. The edge list is kept in
// canonical order (sorted by (u, v) with u < v per edge); duplicates and
// self-loops are rejected at construction.
class WeightedGraph {
public:
    WeightedGraph(int n, std::vector<Edge> edges, bool weighted);

    // Builds an unweighted graph (all weights zero) from endpoint pairs.
    static WeightedGraph unweighted(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // True once assign_weights has populated the costs.
    bool weighted() const { return weighted_; }

    bool connected() const;

    // Index into edges() of the edge {u, v}, if present.
    std::optional<int> edge_index(int u, int v) const;

private:
    int n_;
    std::vector<Edge> edges_;
    bool weighted_;
};

// A Steiner problem instance: a host graph plus the terminals that any
// feasible solution must connect. Terminals are sorted and distinct,
// 2 <= |terminals| <= n.
struct SteinerInstance {
    WeightedGraph graph;
    std::vector<int> terminals;

    SteinerInstance(WeightedGraph g, std::vector<int> terminals_in);
};

// Plain-text edge-list serialization: first line "n m", then one
// "u v w" line per edge in canonical order, weights in shortest
// round-trip decimal form.
std::string write_graph(const WeightedGraph& g);
WeightedGraph read_graph(std::istream& in);

}  // namespace rfs
