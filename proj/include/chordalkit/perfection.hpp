#ifndef CHORDALKIT_PERFECTION_HPP
#define CHORDALKIT_PERFECTION_HPP

#include "chordalkit/graph.hpp"

namespace chordalkit {

// A vertex is perfect (simplicial) if its neighborhood is empty or a clique.
bool is_perfect_vertex(const Graph& g, VertexId x);

// P(a): the perfect vertices of the subgraph induced by a, computed without
// materializing the subgraph.
VertexSet perfect_set(const Graph& g, const VertexSet& a);

} // namespace chordalkit

#endif
