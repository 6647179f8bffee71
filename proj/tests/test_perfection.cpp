#include <doctest.h>

#include "chordalkit/errors.hpp"
#include "chordalkit/generators.hpp"
#include "chordalkit/perfection.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using testutil::mk;

namespace {

// independent of perfect_set: literal Definition-2 check on the induced graph
bool perfect_by_definition(const Graph& g, const VertexSet& a, VertexId x) {
    Graph sub = induced_subgraph(g, a);
    VertexSet closed = vset::unite(sub.neighbors(x), VertexSet{x});
    return sub.neighbors(x).empty() || is_clique(sub, closed);
}

} // namespace

TEST_CASE("is_perfect_vertex basics") {
    Graph lonely = mk(1, {});
    CHECK(is_perfect_vertex(lonely, 0));

    Graph p3 = mk(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_perfect_vertex(p3, 1));
    CHECK(is_perfect_vertex(p3, 0));

    for (std::size_t n = 1; n <= 5; ++n) {
        Graph kn = gen_complete(n);
        for (VertexId v : kn.vertices()) CHECK(is_perfect_vertex(kn, v));
    }

    CHECK_THROWS_AS(is_perfect_vertex(p3, 9), UnknownVertex);
}

TEST_CASE("perfect_set on the named examples") {
    CHECK(perfect_set(gen_cycle(4), gen_cycle(4).vertices()).empty());

    Graph p4 = gen_path(4);
    CHECK(perfect_set(p4, p4.vertices()) == VertexSet{0, 3});
}

TEST_CASE("octahedron has no perfect vertex (brute force over all six)") {
    Graph octa = gen_complete_multipartite(3, 2);
    for (VertexId v : octa.vertices()) {
        // scan for a non-adjacent neighbor pair by hand
        const VertexSet& nbrs = octa.neighbors(v);
        bool has_gap = false;
        for (std::size_t i = 0; i < nbrs.size() && !has_gap; ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!octa.has_edge(nbrs[i], nbrs[j])) {
                    has_gap = true;
                    break;
                }
        CHECK(has_gap);
    }
    CHECK(perfect_set(octa, octa.vertices()).empty());
}

TEST_CASE("perfect_set agrees with the definitional route") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = gen_random_graph(9, 0.35, seed);
        VertexSet a;
        for (VertexId v : g.vertices())
            if ((seed + v) % 3 != 0) a.push_back(v);
        VertexSet computed = perfect_set(g, a);
        VertexSet expected;
        for (VertexId x : a)
            if (perfect_by_definition(g, a, x)) expected.push_back(x);
        CHECK(computed == expected);
    }
}

TEST_CASE("perfection is local to the closed neighborhood") {
    // appending a component never changes verdicts in the original part
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gen_random_graph(7, 0.4, seed);
        std::vector<VertexId> labels(g.vertices());
        labels.push_back(100);
        labels.push_back(101);
        std::vector<Edge> edges = g.edges();
        edges.emplace_back(100, 101);
        Graph extended = graph_from_edges(labels, edges);
        for (VertexId v : g.vertices())
            CHECK(is_perfect_vertex(g, v) == is_perfect_vertex(extended, v));
    }
}

TEST_CASE("chordal graphs keep a non-empty perfect set") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_random_chordal(12, 3, seed);
        CHECK_FALSE(perfect_set(g, g.vertices()).empty());
    }
}
