#include "rfs/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "rfs/errors.hpp"
#include "rfs/text.hpp"
#include "rfs/union_find.hpp"

namespace rfs {
namespace {

constexpr std::uint64_t kTagTreePermutation = fnv1a64("random_feasible_tree");

// Greedy union-find pass over edges in the given index order; returns the
// selected edge indices. The result is a spanning tree iff the graph is
// connected.
std::vector<int> greedy_tree(const WeightedGraph& g, const std::vector<int>& order) {
    UnionFind uf(g.vertex_count());
    std::vector<int> chosen;
    chosen.reserve(g.vertex_count() - 1);
    for (int idx : order) {
        const Edge& e = g.edges()[idx];
        if (uf.unite(e.u, e.v)) chosen.push_back(idx);
    }
    return chosen;
}

Forest forest_from_indices(const WeightedGraph& host, std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    Forest f;
    f.edges.reserve(indices.size());
    for (int idx : indices) {
        f.edges.push_back(host.edges()[idx]);
        f.cost += host.edges()[idx].w;
    }
    return f;
}

struct ShortestPaths {
    std::vector<double> dist;
    std::vector<int> parent;
};

ShortestPaths dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adjacency,
                       int source) {
    const int n = static_cast<int>(adjacency.size());
    ShortestPaths sp{std::vector<double>(n, std::numeric_limits<double>::infinity()),
                     std::vector<int>(n, -1)};
    sp.dist[source] = 0.0;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    queue.push({0.0, source});
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (d > sp.dist[v]) continue;
        for (const auto& [next, w] : adjacency[v]) {
            const double candidate = d + w;
            if (candidate < sp.dist[next]) {
                sp.dist[next] = candidate;
                sp.parent[next] = v;
                queue.push({candidate, next});
            }
        }
    }
    return sp;
}

// Prim over an explicit vertex subset, used by the Steiner oracle. Kept
// separate from the Kruskal-based mst() so the oracle does not share an
// algorithm with the code it checks.
struct PrimResult {
    bool connected = false;
    double cost = 0.0;
    std::vector<std::pair<int, int>> edges;
};

PrimResult prim_on_subset(const WeightedGraph& g, const std::vector<int>& vertices) {
    const int s = static_cast<int>(vertices.size());
    std::vector<int> local(g.vertex_count(), -1);
    for (int i = 0; i < s; ++i) local[vertices[i]] = i;

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> weight(s, std::vector<double>(s, kInf));
    for (const Edge& e : g.edges()) {
        const int lu = local[e.u];
        const int lv = local[e.v];
        if (lu >= 0 && lv >= 0) weight[lu][lv] = weight[lv][lu] = e.w;
    }

    std::vector<char> in_tree(s, 0);
    std::vector<double> best(s, kInf);
    std::vector<int> from(s, -1);
    best[0] = 0.0;
    PrimResult result;
    for (int step = 0; step < s; ++step) {
        int pick = -1;
        for (int i = 0; i < s; ++i)
            if (!in_tree[i] && (pick == -1 || best[i] < best[pick])) pick = i;
        if (best[pick] == kInf) return {};  // subset not connected
        in_tree[pick] = 1;
        if (from[pick] >= 0) {
            result.cost += best[pick];
            result.edges.emplace_back(vertices[from[pick]], vertices[pick]);
        }
        for (int i = 0; i < s; ++i) {
            if (!in_tree[i] && weight[pick][i] < best[i]) {
                best[i] = weight[pick][i];
                from[i] = pick;
            }
        }
    }
    result.connected = true;
    return result;
}

}  // namespace

Forest make_forest(const WeightedGraph& host, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> indices;
    indices.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        const auto idx = host.edge_index(u, v);
        if (!idx) throw ParameterOutOfRange("make_forest: edge not in host graph");
        indices.push_back(*idx);
    }
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
        throw ParameterOutOfRange("make_forest: duplicate edge");
    return forest_from_indices(host, std::move(indices));
}

Forest mst(const WeightedGraph& g) {
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.edges()[a].w < g.edges()[b].w;
    });
    std::vector<int> chosen = greedy_tree(g, order);
    if (static_cast<int>(chosen.size()) != g.vertex_count() - 1)
        throw GraphDisconnected("mst: graph is not connected");
    return forest_from_indices(g, std::move(chosen));
}

Forest random_feasible_tree(const WeightedGraph& g, Seed seed) {
    RandomStream stream(seed.child(kTagTreePermutation));
    std::vector<int> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const auto j = i + stream.next_below(order.size() - i);
        std::swap(order[i], order[j]);
    }
    std::vector<int> chosen = greedy_tree(g, order);
    if (static_cast<int>(chosen.size()) != g.vertex_count() - 1)
        throw GraphDisconnected("random_feasible_tree: graph is not connected");
    return forest_from_indices(g, std::move(chosen));
}

Forest steiner_2approx(const SteinerInstance& inst) {
    const WeightedGraph& g = inst.graph;
    for (const Edge& e : g.edges())
        if (e.w < 0.0) throw NegativeWeight("steiner_2approx: negative edge weight");
    if (!g.connected()) throw GraphDisconnected("steiner_2approx: graph is not connected");

    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, double>>> adjacency(n);
    for (const Edge& e : g.edges()) {
        adjacency[e.u].emplace_back(e.v, e.w);
        adjacency[e.v].emplace_back(e.u, e.w);
    }

    // Shortest paths from every terminal.
    const auto& terminals = inst.terminals;
    const int alpha = static_cast<int>(terminals.size());
    std::vector<ShortestPaths> paths;
    paths.reserve(alpha);
    for (int t : terminals) paths.push_back(dijkstra(adjacency, t));

    // MST of the terminal metric closure (Kruskal; ties by terminal index).
    struct ClosureEdge {
        double d;
        int i;
        int j;
    };
    std::vector<ClosureEdge> closure;
    closure.reserve(static_cast<std::size_t>(alpha) * (alpha - 1) / 2);
    for (int i = 0; i < alpha; ++i)
        for (int j = i + 1; j < alpha; ++j) closure.push_back({paths[i].dist[terminals[j]], i, j});
    std::sort(closure.begin(), closure.end(), [](const ClosureEdge& a, const ClosureEdge& b) {
        return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
    });
    UnionFind closure_uf(alpha);
    std::vector<char> in_subgraph(n, 0);
    for (const ClosureEdge& ce : closure) {
        if (!closure_uf.unite(ce.i, ce.j)) continue;
        // Expand the closure edge to its underlying path.
        int v = terminals[ce.j];
        in_subgraph[v] = 1;
        while (v != terminals[ce.i]) {
            v = paths[ce.i].parent[v];
            in_subgraph[v] = 1;
        }
    }

    // MST of the subgraph induced by the expanded paths.
    std::vector<int> order;
    for (long idx = 0; idx < g.edge_count(); ++idx) {
        const Edge& e = g.edges()[idx];
        if (in_subgraph[e.u] && in_subgraph[e.v]) order.push_back(static_cast<int>(idx));
    }
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.edges()[a].w < g.edges()[b].w;
    });
    std::vector<int> chosen = greedy_tree(g, order);

    // Prune non-terminal leaves, lowest-indexed vertex first.
    std::vector<char> is_terminal(n, 0);
    for (int t : terminals) is_terminal[t] = 1;
    std::vector<int> degree(n, 0);
    std::vector<char> removed(chosen.size(), 0);
    for (int idx : chosen) {
        ++degree[g.edges()[idx].u];
        ++degree[g.edges()[idx].v];
    }
    while (true) {
        int leaf = -1;
        for (int v = 0; v < n; ++v) {
            if (!is_terminal[v] && degree[v] == 1) {
                leaf = v;
                break;
            }
        }
        if (leaf < 0) break;
        for (std::size_t i = 0; i < chosen.size(); ++i) {
            if (removed[i]) continue;
            const Edge& e = g.edges()[chosen[i]];
            if (e.u == leaf || e.v == leaf) {
                removed[i] = 1;
                --degree[e.u];
                --degree[e.v];
                break;
            }
        }
    }
    std::vector<int> kept;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        if (!removed[i]) kept.push_back(chosen[i]);
    return forest_from_indices(g, std::move(kept));
}

bool check_feasible(const WeightedGraph& host, const Forest& f, const FeasibilityPredicate& pred) {
    const int n = host.vertex_count();
    UnionFind uf(n);
    for (const Edge& e : f.edges) {
        const auto idx = host.edge_index(e.u, e.v);
        if (!idx || host.edges()[*idx].w != e.w) return false;  // not a host edge
        if (!uf.unite(e.u, e.v)) return false;                  // cycle
    }
    switch (pred.kind) {
        case FeasibilityPredicate::Kind::spanning_tree: {
            // A feasible forest never exceeds n-1 edges; a spanning tree has
            // exactly that many and one component.
            if (static_cast<int>(f.edges.size()) != n - 1) return false;
            for (int v = 1; v < n; ++v)
                if (!uf.same(0, v)) return false;
            return true;
        }
        case FeasibilityPredicate::Kind::steiner_connectivity: {
            if (pred.terminals.empty()) return true;
            for (int t : pred.terminals)
                if (!uf.same(pred.terminals.front(), t)) return false;
            return true;
        }
    }
    return false;
}

Forest brute_force_mst(const WeightedGraph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw InstanceTooLarge("brute_force_mst: n must be <= 8");
    const int edge_count = static_cast<int>(g.edge_count());
    const int tree_size = n - 1;
    if (edge_count < tree_size) throw GraphDisconnected("brute_force_mst: too few edges");

    std::vector<int> combo(tree_size);
    std::iota(combo.begin(), combo.end(), 0);
    bool found = false;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<int> best;
    while (true) {
        UnionFind uf(n);
        bool acyclic = true;
        double cost = 0.0;
        for (int idx : combo) {
            const Edge& e = g.edges()[idx];
            if (!uf.unite(e.u, e.v)) {
                acyclic = false;
                break;
            }
            cost += e.w;
        }
        if (acyclic && cost < best_cost) {
            best_cost = cost;
            best = combo;
            found = true;
        }

        // Next lexicographic combination.
        int i = tree_size - 1;
        while (i >= 0 && combo[i] == edge_count - tree_size + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < tree_size; ++j) combo[j] = combo[j - 1] + 1;
    }
    if (!found) throw GraphDisconnected("brute_force_mst: no spanning tree exists");
    return forest_from_indices(g, std::move(best));
}

Forest brute_force_steiner(const SteinerInstance& inst) {
    const WeightedGraph& g = inst.graph;
    const int n = g.vertex_count();
    if (n > 8) throw InstanceTooLarge("brute_force_steiner: n must be <= 8");

    std::vector<char> is_terminal(n, 0);
    for (int t : inst.terminals) is_terminal[t] = 1;
    std::vector<int> optional_vertices;
    for (int v = 0; v < n; ++v)
        if (!is_terminal[v]) optional_vertices.push_back(v);

    const unsigned subset_count = 1u << optional_vertices.size();
    bool found = false;
    double best_cost = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, int>> best_edges;
    for (unsigned mask = 0; mask < subset_count; ++mask) {
        std::vector<int> vertices = inst.terminals;
        for (std::size_t i = 0; i < optional_vertices.size(); ++i)
            if (mask & (1u << i)) vertices.push_back(optional_vertices[i]);
        std::sort(vertices.begin(), vertices.end());
        const PrimResult candidate = prim_on_subset(g, vertices);
        if (candidate.connected && candidate.cost < best_cost) {
            best_cost = candidate.cost;
            best_edges = candidate.edges;
            found = true;
        }
    }
    if (!found) throw GraphDisconnected("brute_force_steiner: terminals cannot be connected");
    return make_forest(g, best_edges);
}

std::string write_forest(const WeightedGraph& host, const Forest& f) {
    std::string out = "cost " + format_double(f.cost) + "\n";
    out += std::to_string(host.vertex_count()) + " " + std::to_string(f.edges.size()) + "\n";
    for (const Edge& e : f.edges)
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_double(e.w) + "\n";
    return out;
}

}  // namespace rfs
