#ifndef CHORDALKIT_GRAPH_HPP
#define CHORDALKIT_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace chordalkit {

using VertexId = std::uint32_t;

// A vertex set is kept sorted ascending with no duplicates.
using VertexSet = std::vector<VertexId>;

// Unordered edge; stored and emitted with the lower label first.
using Edge = std::pair<VertexId, VertexId>;

namespace vset {

bool contains(const VertexSet& s, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b); // a subset of b
VertexSet difference(const VertexSet& a, const VertexSet& b);
VertexSet intersection(const VertexSet& a, const VertexSet& b);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet normalized(std::vector<VertexId> v); // sort + dedup

} // namespace vset

/// Finite simple undirected graph. Immutable after construction; vertex
/// labels are arbitrary 32-bit ids mapped internally to dense indices.
class Graph {
public:
    Graph() = default;

    const VertexSet& vertices() const { return labels_; }
    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId x) const;
    bool has_edge(VertexId x, VertexId y) const; // throws UnknownVertex for unknown x

    // Neighbor labels of x, sorted ascending.
    const VertexSet& neighbors(VertexId x) const;

    // All edges, lower endpoint first, sorted.
    std::vector<Edge> edges() const;

    std::size_t index_of(VertexId x) const; // dense index in [0, n)
    VertexId label_of(std::size_t i) const { return labels_[i]; }

    // Dense-index adjacency bitmasks; only valid for n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph& other) const {
        return labels_ == other.labels_ && adj_ == other.adj_;
    }

private:
    friend Graph graph_from_edges(const std::vector<VertexId>&, const std::vector<Edge>&);
    friend Graph induced_subgraph(const Graph&, const VertexSet&);

    VertexSet labels_;              // sorted
    std::vector<VertexSet> adj_;    // adj_[i] = sorted neighbor labels of labels_[i]
    std::size_t edge_count_ = 0;
};

// Duplicate vertices/edges are deduplicated; loops are rejected.
Graph graph_from_edges(const std::vector<VertexId>& vertex_labels,
                       const std::vector<Edge>& edges);

VertexSet adjacency(const Graph& g, VertexId x);
bool is_clique(const Graph& g, const VertexSet& c);
Graph induced_subgraph(const Graph& g, const VertexSet& a);

// Components ordered by least label, members ascending.
std::vector<VertexSet> connected_components(const Graph& g);

} // namespace chordalkit

#endif
