#ifndef CHORDALKIT_TEST_HELPERS_HPP
#define CHORDALKIT_TEST_HELPERS_HPP

#include <cstdint>
#include <vector>

#include "chordalkit/graph.hpp"

namespace testutil {

using chordalkit::Edge;
using chordalkit::Graph;
using chordalkit::VertexId;

// graph on labels 0..n-1 with the given edges
inline Graph mk(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<VertexId> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<VertexId>(i);
    return chordalkit::graph_from_edges(labels, edges);
}

// all labeled graphs on n vertices, one per edge bitmask
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j, ++bit) {
            if (mask >> bit & 1)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return mk(n, edges);
}

} // namespace testutil

#endif
