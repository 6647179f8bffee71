#include <algorithm>
#include <doctest.h>

#include "chordalkit/chromatic.hpp"
#include "chordalkit/errors.hpp"
#include "chordalkit/generators.hpp"
#include "chordalkit/nested_sequence.hpp"
#include "chordalkit/recognition.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using testutil::mk;

namespace {

std::vector<VertexId> peo_of(const Graph& g) {
    auto cert = is_chordal(g);
    REQUIRE(cert.chordal());
    return peo_from_sequence(g, cert.sequence());
}

} // namespace

TEST_CASE("clique number along a perfect elimination ordering") {
    Graph k4 = gen_complete(4);
    std::vector<VertexId> order{0, 1, 2, 3};
    do {
        CHECK(clique_number_chordal(k4, order) == 4);
    } while (std::next_permutation(order.begin(), order.end()));

    Graph p4 = gen_path(4);
    CHECK(clique_number_chordal(p4, peo_of(p4)) == 2);

    CHECK_THROWS_AS(clique_number_chordal(gen_path(3), {1, 0, 2}), NotAPeo);
    CHECK_THROWS_AS(clique_number_chordal(gen_path(3), {0, 1}), NotAPermutation);
}

TEST_CASE("clique number matches the exhaustive oracle on random chordal graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_random_chordal(9, 4, seed);
        CHECK(clique_number_chordal(g, peo_of(g)) == clique_number_exact(g));
    }
}

TEST_CASE("maximal cliques of chordal graphs") {
    Graph k5 = gen_complete(5);
    auto ks = maximal_cliques_chordal(k5, peo_of(k5));
    REQUIRE(ks.size() == 1);
    CHECK(ks[0] == VertexSet{0, 1, 2, 3, 4});

    Graph p4 = gen_path(4);
    auto ps = maximal_cliques_chordal(p4, peo_of(p4));
    CHECK(ps == std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}});

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_random_chordal(9, 3, seed);
        auto fast = maximal_cliques_chordal(g, peo_of(g));
        CHECK(fast.size() <= g.vertex_count());
        CHECK(fast == maximal_cliques_exact(g));
        for (const VertexSet& c : fast) CHECK(is_clique(g, c));
    }
}

TEST_CASE("greedy coloring") {
    Graph k3 = gen_complete(3);
    std::vector<VertexId> order{0, 1, 2};
    do {
        CHECK(greedy_coloring(k3, order).color_count == 3);
    } while (std::next_permutation(order.begin(), order.end()));

    // BFS order on a tree alternates levels: two colors
    Graph tree = mk(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
    Coloring two = greedy_coloring(tree, {0, 1, 2, 3, 4, 5, 6});
    CHECK(two.color_count == 2);
    CHECK(is_proper(tree, two));

    CHECK_THROWS_AS(greedy_coloring(k3, {0, 1}), NotAPermutation);
}

TEST_CASE("reverse-peo greedy meets the clique number on chordal graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = gen_random_chordal(10, 4, seed);
        auto peo = peo_of(g);
        int omega = clique_number_chordal(g, peo);
        std::reverse(peo.begin(), peo.end());
        Coloring c = greedy_coloring(g, peo);
        CHECK(is_proper(g, c));
        CHECK(c.color_count == omega);
    }
}

TEST_CASE("exact chromatic number") {
    CHECK(chromatic_number_exact(gen_cycle(5)) == 3);
    CHECK(chromatic_number_exact(gen_complete(4)) == 4);
    CHECK(chromatic_number_exact(gen_cycle(4)) == 2);
    CHECK(chromatic_number_exact(mk(3, {})) == 1);
    CHECK(chromatic_number_exact(mk(0, {})) == 0);
    CHECK_THROWS_AS(chromatic_number_exact(gen_path(13)), TooLarge);

    Coloring c5 = optimal_coloring_exact(gen_cycle(5));
    CHECK(c5.color_count == 3);
    CHECK(is_proper(gen_cycle(5), c5));
}

TEST_CASE("clique-number oracle") {
    CHECK(clique_number_exact(gen_cycle(5)) == 2);
    CHECK(clique_number_exact(gen_complete(4)) == 4);
    CHECK(clique_number_exact(mk(3, {})) == 1);
    CHECK(clique_number_exact(gen_complete_multipartite(3, 2)) == 3);
}

TEST_CASE("maximal-clique oracle on small fixtures") {
    auto triangles = maximal_cliques_exact(gen_complete_multipartite(3, 1));
    REQUIRE(triangles.size() == 1);
    CHECK(triangles[0] == VertexSet{0, 1, 2});

    auto edgeless = maximal_cliques_exact(mk(3, {}));
    CHECK(edgeless == std::vector<VertexSet>{{0}, {1}, {2}});

    auto c4 = maximal_cliques_exact(gen_cycle(4));
    CHECK(c4 == std::vector<VertexSet>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("the chi >= omega bound and chordal equality") {
    auto c5 = check_r1(gen_cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.omega == 2);
    CHECK_FALSE(c5.equal);

    auto k4 = check_r1(gen_complete(4));
    CHECK(k4.chi == 4);
    CHECK(k4.omega == 4);
    CHECK(k4.equal);

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = gen_random_graph(8, 0.4, seed);
        auto r = check_r1(g);
        CHECK(r.chi >= r.omega);
        if (is_chordal(g).chordal()) CHECK(r.equal);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CHECK(check_r1(gen_random_chordal(9, 4, seed)).equal);
    }
}

TEST_CASE("coloring text format") {
    Coloring c{{{0, 0}, {1, 1}, {2, 0}}, 2};
    CHECK(coloring_to_text(c) == "0 0\n1 1\n2 0\n");
}
