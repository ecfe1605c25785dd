#include "rfs/generators.hpp"

#include <algorithm>
#include <queue>
#include <utility>
#include <vector>

#include "rfs/errors.hpp"

namespace rfs {
namespace {

constexpr std::uint64_t kTagGnm = fnv1a64("gen_gnm");
constexpr std::uint64_t kTagWeights = fnv1a64("assign_weights");
constexpr std::uint64_t kTagTerminals = fnv1a64("pick_terminals");

constexpr long kConnectivityAttemptCap = 100000;

// Uniform labeled tree on n >= 2 vertices via a random Pruefer sequence.
std::vector<std::pair<int, int>> random_tree(int n, RandomStream& stream) {
    if (n == 2) return {{0, 1}};
    std::vector<int> sequence(n - 2);
    for (int& s : sequence) s = static_cast<int>(stream.next_below(n));

    std::vector<int> degree(n, 1);
    for (int s : sequence) ++degree[s];

    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int s : sequence) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    edges.emplace_back(a, b);
    return edges;
}

// Uniform m-subset of all vertex pairs via partial Fisher-Yates.
std::vector<std::pair<int, int>> random_pair_subset(int n, long m, RandomStream& stream) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (long i = 0; i < m; ++i) {
        const auto j = i + static_cast<long>(stream.next_below(pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(static_cast<std::size_t>(m));
    return pairs;
}

}  // namespace

WeightedGraph gen_gnm(int n, long m_edges, Seed seed, bool require_connected, long* rejections) {
    if (rejections) *rejections = 0;
    if (n < 2) throw ParameterOutOfRange("gen_gnm: n must be >= 2");
    const long max_edges = static_cast<long>(n) * (n - 1) / 2;
    const long min_edges = require_connected ? n - 1 : 0;
    if (m_edges < min_edges || m_edges > max_edges)
        throw ParameterOutOfRange("gen_gnm: edge count out of range");

    RandomStream stream(seed.child(kTagGnm));

    if (require_connected && m_edges == n - 1) {
        // A connected graph with n-1 edges is a tree; rejection sampling is
        // hopeless here, but G(n, n-1) conditioned on connectivity is exactly
        // the uniform labeled tree.
        return WeightedGraph::unweighted(n, random_tree(n, stream));
    }

    for (long attempt = 0; attempt < kConnectivityAttemptCap; ++attempt) {
        WeightedGraph g = WeightedGraph::unweighted(n, random_pair_subset(n, m_edges, stream));
        if (!require_connected || g.connected()) {
            if (rejections) *rejections = attempt;
            return g;
        }
    }
    throw ConnectivityUnreachable("gen_gnm: no connected draw within the attempt cap");
}

WeightedGraph assign_weights(const WeightedGraph& g, const DistributionSpec& dist, Seed seed) {
    if (g.weighted()) throw PreconditionViolated("assign_weights: graph already weighted");
    RandomStream stream(seed.child(kTagWeights));
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges) e.w = dist.sample(stream);
    return {g.vertex_count(), std::move(edges), true};
}

SteinerInstance pick_terminals(const WeightedGraph& g, int count, Seed seed) {
    const int n = g.vertex_count();
    if (count < 2 || count > n) throw ParameterOutOfRange("pick_terminals: need 2 <= count <= n");
    RandomStream stream(seed.child(kTagTerminals));
    std::vector<int> vertices(n);
    for (int v = 0; v < n; ++v) vertices[v] = v;
    for (int i = 0; i < count; ++i) {
        const auto j = i + static_cast<int>(stream.next_below(vertices.size() - i));
        std::swap(vertices[i], vertices[j]);
    }
    vertices.resize(count);
    return {g, std::move(vertices)};
}

}  // namespace rfs
