#pragma once

#include "rfs/distributions.hpp"
#include "rfs/graph.hpp"
#include "rfs/rng.hpp"

namespace rfs {

// Draws an unweighted graph uniformly among all simple graphs with n
// vertices and exactly m_edges edges. With require_connected, draws are
// rejected until connected (capped), which preserves uniformity
// conditioned on connectivity; at m_edges = n-1 the conditional
// distribution is the uniform labeled tree and is sampled directly.
// rejections, when non-null, receives the number of discarded draws.
WeightedGraph gen_gnm(int n, long m_edges, Seed seed, bool require_connected,
                      long* rejections = nullptr);

// Independently draws one weight per edge, consumed in canonical edge
// order, so the result is a pure function of (g, dist, seed).
WeightedGraph assign_weights(const WeightedGraph& g, const DistributionSpec& dist, Seed seed);

// Uniformly samples `count` distinct terminal vertices.
SteinerInstance pick_terminals(const WeightedGraph& g, int count, Seed seed);

}  // namespace rfs
