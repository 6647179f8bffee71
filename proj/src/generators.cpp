#include "chordalkit/generators.hpp"

#include <algorithm>

#include "chordalkit/errors.hpp"
#include "chordalkit/rng.hpp"

namespace chordalkit {

namespace {

std::vector<VertexId> labels_up_to(std::size_t n) {
    std::vector<VertexId> labels(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<VertexId>(i);
    return labels;
}

} // namespace

Graph gen_path(std::size_t n) {
    if (n < 1) throw BadSize("path needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    return graph_from_edges(labels_up_to(n), edges);
}

Graph gen_cycle(std::size_t n) {
    if (n < 3) throw BadSize("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n));
    return graph_from_edges(labels_up_to(n), edges);
}

Graph gen_complete(std::size_t n) {
    if (n < 1) throw BadSize("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    return graph_from_edges(labels_up_to(n), edges);
}

Graph gen_star(std::size_t n) {
    if (n < 1) throw BadSize("star needs n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i)
        edges.emplace_back(VertexId{0}, static_cast<VertexId>(i));
    return graph_from_edges(labels_up_to(n), edges);
}

Graph gen_complete_multipartite(std::size_t r, std::size_t n) {
    if (r < 1 || n < 1) throw BadSize("K_r(n) needs r >= 1 and n >= 1");
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < r * n; ++a) {
        for (std::size_t b = a + 1; b < r * n; ++b) {
            if (a / n != b / n)
                edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
    }
    return graph_from_edges(labels_up_to(r * n), edges);
}

Graph gen_random_chordal(std::size_t n, std::size_t clique_bound, std::uint64_t seed) {
    if (n < 1 || clique_bound < 1) throw BadSize("chordal generator needs n, bound >= 1");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::vector<VertexSet> cliques{{VertexId{0}}}; // maximal cliques so far
    for (std::size_t t = 1; t < n; ++t) {
        const std::size_t pick = rng.bounded(cliques.size());
        VertexSet host = cliques[pick];
        const std::size_t size = 1 + rng.bounded(std::min(clique_bound, host.size()));
        // sample `size` members of the host clique (partial Fisher-Yates)
        for (std::size_t i = 0; i < size; ++i) {
            std::size_t j = i + rng.bounded(host.size() - i);
            std::swap(host[i], host[j]);
        }
        VertexSet attach(host.begin(), host.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(attach.begin(), attach.end());

        const VertexId fresh = static_cast<VertexId>(t);
        for (VertexId x : attach) edges.emplace_back(x, fresh);
        VertexSet grown = attach;
        grown.push_back(fresh); // fresh has the largest label so far
        if (size == cliques[pick].size())
            cliques[pick] = std::move(grown); // host absorbed
        else
            cliques.push_back(std::move(grown));
    }
    return graph_from_edges(labels_up_to(n), edges);
}

Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw BadProbability("edge probability must be in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    const bool always = p >= 1.0, never = p <= 0.0;
    const auto threshold =
        static_cast<std::uint64_t>(p * 18446744073709551616.0); // p * 2^64
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool edge = always || (!never && rng.next() < threshold);
            if (edge)
                edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return graph_from_edges(labels_up_to(n), edges);
}

} // namespace chordalkit
