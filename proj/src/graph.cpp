#include "chordalkit/graph.hpp"

#include <algorithm>
#include <iterator>

#include "chordalkit/errors.hpp"

namespace chordalkit {

namespace vset {

bool contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet normalized(std::vector<VertexId> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace vset

bool Graph::has_vertex(VertexId x) const {
    return vset::contains(labels_, x);
}

std::size_t Graph::index_of(VertexId x) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), x);
    if (it == labels_.end() || *it != x)
        throw UnknownVertex("unknown vertex " + std::to_string(x));
    return static_cast<std::size_t>(it - labels_.begin());
}

bool Graph::has_edge(VertexId x, VertexId y) const {
    return vset::contains(adj_[index_of(x)], y);
}

const VertexSet& Graph::neighbors(VertexId x) const {
    return adj_[index_of(x)];
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (VertexId w : adj_[i]) {
            if (labels_[i] < w) out.emplace_back(labels_[i], w);
        }
    }
    return out; // already sorted: labels_ ascending, adj_ ascending
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (labels_.size() > 64)
        throw TooLarge("adjacency masks need at most 64 vertices, got " +
                       std::to_string(labels_.size()));
    std::vector<std::uint64_t> masks(labels_.size(), 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        for (VertexId w : adj_[i]) masks[i] |= std::uint64_t{1} << index_of(w);
    }
    return masks;
}

Graph graph_from_edges(const std::vector<VertexId>& vertex_labels,
                       const std::vector<Edge>& edges) {
    Graph g;
    g.labels_ = vset::normalized(vertex_labels);
    g.adj_.assign(g.labels_.size(), {});
    for (const auto& [u, v] : edges) {
        if (u == v)
            throw LoopEdge("loop edge at vertex " + std::to_string(u));
        // index_of throws UnknownVertex for endpoints outside vertex_labels
        g.adj_[g.index_of(u)].push_back(v);
        g.adj_[g.index_of(v)].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : g.adj_) {
        nbrs = vset::normalized(std::move(nbrs));
        degree_sum += nbrs.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

VertexSet adjacency(const Graph& g, VertexId x) {
    return g.neighbors(x);
}

bool is_clique(const Graph& g, const VertexSet& c) {
    VertexSet members = vset::normalized(c);
    for (VertexId x : members)
        if (!g.has_vertex(x)) throw UnknownVertex("unknown vertex " + std::to_string(x));
    for (std::size_t i = 0; i < members.size(); ++i) {
        const VertexSet& nbrs = g.neighbors(members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!vset::contains(nbrs, members[j])) return false;
        }
    }
    return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& a) {
    VertexSet members = vset::normalized(a);
    Graph out;
    out.labels_ = members;
    out.adj_.reserve(members.size());
    std::size_t degree_sum = 0;
    for (VertexId x : members) {
        out.adj_.push_back(vset::intersection(g.neighbors(x), members));
        degree_sum += out.adj_.back().size();
    }
    out.edge_count_ = degree_sum / 2;
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<VertexSet> components;
    std::vector<VertexId> stack;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        VertexSet comp;
        seen[i] = true;
        stack.push_back(g.label_of(i));
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                std::size_t wi = g.index_of(w);
                if (!seen[wi]) {
                    seen[wi] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components; // least labels ascending because i scans ascending
}

} // namespace chordalkit
