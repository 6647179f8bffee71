#ifndef CHORDALKIT_CHROMATIC_HPP
#define CHORDALKIT_CHROMATIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

struct Coloring {
    // Sorted by vertex label; colors are dense 0-based indices.
    std::vector<std::pair<VertexId, int>> assignment;
    int color_count = 0;
};

bool is_proper(const Graph& g, const Coloring& c);

// omega(G) for chordal g: max over the ordering of 1 + |later neighbors|.
int clique_number_chordal(const Graph& g, const std::vector<VertexId>& peo);

// The <=|V| maximal cliques of a chordal graph, from the PEO candidates
// {v_i} + later neighbors, filtered to the inclusion-maximal ones.
std::vector<VertexSet> maximal_cliques_chordal(const Graph& g,
                                               const std::vector<VertexId>& peo);

// Smallest-absent-color greedy in the given order. On the reverse of a PEO
// of a chordal graph this uses exactly omega colors.
Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order);

// Exact oracles, |V| <= 12. Independent of the PEO-based routines.
int chromatic_number_exact(const Graph& g);
Coloring optimal_coloring_exact(const Graph& g);
int clique_number_exact(const Graph& g);
std::vector<VertexSet> maximal_cliques_exact(const Graph& g); // Bron-Kerbosch

struct R1Report {
    int chi = 0;
    int omega = 0;
    bool equal = false;
};

// Computes chi and omega exactly; chi >= omega always holds.
R1Report check_r1(const Graph& g);

// One "vertex color" line per vertex, ascending.
std::string coloring_to_text(const Coloring& c);

} // namespace chordalkit

#endif
