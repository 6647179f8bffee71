#include <doctest.h>
#include <sstream>

#include "chordalkit/errors.hpp"
#include "chordalkit/generators.hpp"
#include "chordalkit/io.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using testutil::mk;

TEST_CASE("edge-list reader") {
    std::istringstream in(
        "# a comment\n"
        "0 1\n"
        "1 2\n"
        "\n"
        "n 7\n");
    Graph g = read_edge_list(in);
    CHECK(g.vertices() == VertexSet{0, 1, 2, 7});
    CHECK(g.edge_count() == 2);
    CHECK(g.neighbors(7).empty());
}

TEST_CASE("edge-list reader errors carry line numbers") {
    std::istringstream bad("0 1\n1 x\n");
    try {
        read_edge_list(bad);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }

    std::istringstream loop("3 3\n");
    CHECK_THROWS_AS(read_edge_list(loop), ParseError);

    std::istringstream triple("0 1 2\n");
    CHECK_THROWS_AS(read_edge_list(triple), ParseError);

    std::istringstream lone_n("n\n");
    CHECK_THROWS_AS(read_edge_list(lone_n), ParseError);
}

TEST_CASE("edge-list writer is canonical") {
    Graph g = graph_from_edges({0, 1, 2, 5}, {{2, 1}, {0, 1}});
    CHECK(write_edge_list(g) == "n 5\n0 1\n1 2\n");

    std::istringstream back(write_edge_list(g));
    CHECK(read_edge_list(back) == g);
}

TEST_CASE("dimacs reader") {
    std::istringstream in(
        "c sample\n"
        "p edge 4 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 3 4\n");
    Graph g = read_dimacs(in);
    CHECK(g.vertices() == VertexSet{1, 2, 3, 4});
    CHECK(g.edge_count() == 3);

    std::istringstream no_header("e 1 2\n");
    CHECK_THROWS_AS(read_dimacs(no_header), ParseError);

    std::istringstream out_of_range("p edge 2 1\ne 1 5\n");
    CHECK_THROWS_AS(read_dimacs(out_of_range), ParseError);
}

TEST_CASE("dimacs writer relabels to ranks and round-trips") {
    Graph g = graph_from_edges({10, 20, 30}, {{10, 20}, {20, 30}});
    CHECK(write_dimacs(g) == "p edge 3 2\ne 1 2\ne 2 3\n");

    std::istringstream back(write_dimacs(g));
    Graph h = read_dimacs(back);
    CHECK(h.vertex_count() == 3);
    CHECK(h.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
}

TEST_CASE("writers are deterministic on generator output") {
    Graph g = gen_random_chordal(20, 4, 7);
    CHECK(write_edge_list(g) == write_edge_list(gen_random_chordal(20, 4, 7)));
    CHECK(write_dimacs(g) == write_dimacs(gen_random_chordal(20, 4, 7)));
}

TEST_CASE("certificate json round-trips and re-verifies") {
    Graph chordal = gen_random_chordal(10, 3, 5);
    auto pos = is_chordal(chordal);
    auto back = certificate_from_json(certificate_to_json(pos));
    CHECK(back.chordal());
    CHECK(verify_certificate(chordal, back));

    Graph c5 = gen_cycle(5);
    auto neg = is_chordal(c5);
    auto neg_back = certificate_from_json(certificate_to_json(neg));
    CHECK_FALSE(neg_back.chordal());
    CHECK(verify_certificate(c5, neg_back));

    CHECK_THROWS_AS(certificate_from_json(nlohmann::json::object()), GraphError);
}
