#include "chordalkit/perfection.hpp"

#include "chordalkit/errors.hpp"

namespace chordalkit {

bool is_perfect_vertex(const Graph& g, VertexId x) {
    const VertexSet& nbrs = g.neighbors(x);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            if (!g.has_edge(nbrs[i], nbrs[j])) return false;
        }
    }
    return true; // covers Adj(x) empty
}

VertexSet perfect_set(const Graph& g, const VertexSet& a) {
    VertexSet members = vset::normalized(a);
    for (VertexId x : members)
        if (!g.has_vertex(x)) throw UnknownVertex("unknown vertex " + std::to_string(x));
    VertexSet out;
    for (VertexId x : members) {
        VertexSet nbrs = vset::intersection(g.neighbors(x), members);
        bool perfect = true;
        for (std::size_t i = 0; perfect && i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!g.has_edge(nbrs[i], nbrs[j])) {
                    perfect = false;
                    break;
                }
            }
        }
        if (perfect) out.push_back(x);
    }
    return out;
}

} // namespace chordalkit
