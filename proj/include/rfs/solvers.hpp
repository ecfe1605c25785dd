#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rfs/graph.hpp"
#include "rfs/rng.hpp"

namespace rfs {

// An acyclic edge subset of a host graph. Edges carry the host weights and
// are kept in canonical order; cost is the sum of member weights, always
// recomputed in canonical order so equal edge sets produce bit-equal costs.
struct Forest {
    std::vector<Edge> edges;
    double cost = 0.0;
};

// Builds a Forest from endpoint pairs, validating membership in the host
// graph and recomputing the cost.
Forest make_forest(const WeightedGraph& host, const std::vector<std::pair<int, int>>& pairs);

struct FeasibilityPredicate {
    enum class Kind { spanning_tree, steiner_connectivity };

    Kind kind;
    std::vector<int> terminals;  // steiner_connectivity only

    static FeasibilityPredicate spanning_tree() { return {Kind::spanning_tree, {}}; }
    static FeasibilityPredicate steiner(std::vector<int> terminals) {
        return {Kind::steiner_connectivity, std::move(terminals)};
    }
};

// Minimum spanning tree: greedy edge selection in nondecreasing weight
// order with union-find; ties broken by canonical edge order.
Forest mst(const WeightedGraph& g);

// Weight-blind feasible solution: the same greedy union-find procedure run
// over a uniformly random permutation of the edge list, costed against the
// true weights. Note this is not a uniform draw from the set of spanning
// trees; the contract is the procedure itself.
Forest random_feasible_tree(const WeightedGraph& g, Seed seed);

// Distance-network heuristic for the Steiner tree problem: shortest paths
// among terminals, MST of the terminal metric closure, path expansion, MST
// of the induced subgraph, then iterative removal of non-terminal leaves
// (lowest-indexed first). Cost is at most 2*(1 - 1/|terminals|) times the
// optimum. Requires a connected host with nonnegative weights.
Forest steiner_2approx(const SteinerInstance& inst);

// True iff the forest is a valid member of the host and satisfies the
// predicate (a full spanning tree, or all terminals in one component).
bool check_feasible(const WeightedGraph& host, const Forest& f, const FeasibilityPredicate& pred);

// Exhaustive oracles for small instances (n <= 8).
// brute_force_mst enumerates every (n-1)-edge subset.
// brute_force_steiner minimizes over all subsets of non-terminal vertices,
// spanning each induced candidate with a self-contained Prim routine, which
// realizes the minimum over all terminal-connecting edge subsets.
Forest brute_force_mst(const WeightedGraph& g);
Forest brute_force_steiner(const SteinerInstance& inst);

// Forest serialization: "cost <value>" header, then the edge-list format.
std::string write_forest(const WeightedGraph& host, const Forest& f);

}  // namespace rfs
