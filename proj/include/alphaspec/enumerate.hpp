#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

/// All graphs on exactly n vertices, one representative per isomorphism
/// class. Guarded at n <= 10; practical for n <= 8.
std::vector<Graph> all_graphs(int n);

/// Connected representatives only.
std::vector<Graph> connected_graphs(int n);

/// Canonical edge bitmask (minimum over relabelings); equal masks iff
/// isomorphic. Exposed for testing.
std::uint64_t canonical_mask(const Graph& g);

/// Erdos-Renyi G(n,p) sample, resampled until connected.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace alphaspec
