#include "rfs/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <utility>

#include "rfs/errors.hpp"
#include "rfs/text.hpp"

namespace rfs {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, bool weighted)
    : n_(n), edges_(std::move(edges)), weighted_(weighted) {
    if (n_ < 1) throw ParameterOutOfRange("WeightedGraph: vertex count must be >= 1");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_) throw ParameterOutOfRange("WeightedGraph: endpoint out of range");
        if (e.u == e.v) throw ParameterOutOfRange("WeightedGraph: self-loop");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            throw ParameterOutOfRange("WeightedGraph: duplicate edge");
    }
}

WeightedGraph WeightedGraph::unweighted(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, 0.0});
    return {n, std::move(edges), false};
}

bool WeightedGraph::connected() const {
    if (n_ == 1) return true;
    std::vector<std::vector<int>> adjacency(n_);
    for (const Edge& e : edges_) {
        adjacency[e.u].push_back(e.v);
        adjacency[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int next : adjacency[v]) {
            if (!seen[next]) {
                seen[next] = 1;
                ++reached;
                stack.push_back(next);
            }
        }
    }
    return reached == n_;
}

std::optional<int> WeightedGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(
        edges_.begin(), edges_.end(), std::pair(u, v),
        [](const Edge& e, const std::pair<int, int>& key) { return std::pair(e.u, e.v) < key; });
    if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

SteinerInstance::SteinerInstance(WeightedGraph g, std::vector<int> terminals_in)
    : graph(std::move(g)), terminals(std::move(terminals_in)) {
    std::sort(terminals.begin(), terminals.end());
    if (std::adjacent_find(terminals.begin(), terminals.end()) != terminals.end())
        throw ParameterOutOfRange("SteinerInstance: duplicate terminal");
    if (terminals.size() < 2 || static_cast<int>(terminals.size()) > graph.vertex_count())
        throw ParameterOutOfRange("SteinerInstance: need 2 <= |terminals| <= n");
    if (terminals.front() < 0 || terminals.back() >= graph.vertex_count())
        throw ParameterOutOfRange("SteinerInstance: terminal out of range");
}

std::string write_graph(const WeightedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_double(e.w) + "\n";
    }
    return out;
}

WeightedGraph read_graph(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m)) throw ConfigInvalid("graph: missing 'n m' header");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        int u = 0;
        int v = 0;
        std::string w;
        if (!(in >> u >> v >> w)) throw ConfigInvalid("graph: truncated edge list");
        edges.push_back({u, v, parse_double(w)});
    }
    return {n, std::move(edges), true};
}

}  // namespace rfs
