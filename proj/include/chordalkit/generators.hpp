#ifndef CHORDALKIT_GENERATORS_HPP
#define CHORDALKIT_GENERATORS_HPP

#include <cstdint>

#include "chordalkit/graph.hpp"

namespace chordalkit {

// Named families on labels 0..n-1.
Graph gen_path(std::size_t n);     // n >= 1
Graph gen_cycle(std::size_t n);    // n >= 3
Graph gen_complete(std::size_t n); // n >= 1
Graph gen_star(std::size_t n);     // n >= 1; vertex 0 is the center

// Complete r-partite graph K_r(n): r parts of n vertices each, edges exactly
// between distinct parts. Part i holds labels [i*n, (i+1)*n).
Graph gen_complete_multipartite(std::size_t r, std::size_t n);

// Chordal by construction: each new vertex is attached to a random clique
// of size in [1, clique_bound] inside a tracked maximal clique, so it is
// perfect at insertion time and the reverse insertion order is a PEO.
// Connected for every seed. Not a uniform sampler over chordal graphs.
Graph gen_random_chordal(std::size_t n, std::size_t clique_bound, std::uint64_t seed);

// G(n, p): each pair independently an edge with probability p.
Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed);

} // namespace chordalkit

#endif
