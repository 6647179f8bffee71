#include <doctest.h>

#include "chordalkit/errors.hpp"
#include "chordalkit/generators.hpp"
#include "chordalkit/recognition.hpp"
#include "test_helpers.hpp"

using namespace chordalkit;
using testutil::from_mask;
using testutil::mk;

TEST_CASE("is_chordal on the named graphs") {
    auto c4 = is_chordal(gen_cycle(4));
    REQUIRE_FALSE(c4.chordal());
    CHECK(c4.chordless_cycle().cycle.size() == 4);
    CHECK(verify_certificate(gen_cycle(4), c4));

    // a tree: star plus a path grafted on
    Graph tree = mk(7, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {4, 5}, {4, 6}});
    auto t = is_chordal(tree);
    CHECK(t.chordal());
    CHECK(verify_certificate(tree, t));

    Graph octa = gen_complete_multipartite(3, 2);
    auto oc = is_chordal(octa);
    REQUIRE_FALSE(oc.chordal());
    CHECK(oc.chordless_cycle().cycle.size() == 4);
    CHECK(verify_certificate(octa, oc));
}

TEST_CASE("find_chordless_cycle") {
    Graph c4 = gen_cycle(4);
    auto w4 = find_chordless_cycle(c4, c4.vertices());
    CHECK(w4.cycle.size() == 4);
    CHECK(verify_certificate(c4, ChordalityCertificate{w4}));

    Graph c5 = gen_cycle(5);
    auto w5 = find_chordless_cycle(c5, c5.vertices());
    CHECK(w5.cycle.size() == 5);
    CHECK(verify_certificate(c5, ChordalityCertificate{w5}));

    // C_4 with a pendant: the builder peels the pendant, then stalls on the C_4
    Graph g = mk(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}});
    auto r = build_stationary_sequence(g, RemovalStrategy::all_perfect());
    REQUIRE(std::holds_alternative<StalledAt>(r));
    CHECK(std::get<StalledAt>(r).core == VertexSet{0, 1, 2, 3});
    auto w = find_chordless_cycle(g, std::get<StalledAt>(r).core);
    CHECK(vset::normalized(w.cycle) == VertexSet{0, 1, 2, 3});

    CHECK_THROWS_AS(find_chordless_cycle(gen_path(3), gen_path(3).vertices()),
                    NotStalled);
    CHECK_THROWS_AS(find_chordless_cycle(c4, {}), NotStalled);
}

TEST_CASE("mcs oracle basics") {
    CHECK(is_chordal_mcs(gen_complete(4)));
    CHECK_FALSE(is_chordal_mcs(gen_cycle(4)));
    CHECK(is_chordal_mcs(mk(0, {})));
}

TEST_CASE("brute force basics") {
    CHECK_FALSE(brute_force_chordal(gen_cycle(4)));

    Graph c4_chord = mk(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK(brute_force_chordal(c4_chord));

    CHECK_FALSE(brute_force_chordal(gen_complete_multipartite(3, 2)));

    CHECK_THROWS_AS(brute_force_chordal(gen_path(13)), TooLarge);
}

TEST_CASE("three-way agreement, exhaustively to n = 5") {
    for (std::size_t n = 0; n <= 5; ++n) {
        const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < graphs; ++mask) {
            Graph g = from_mask(n, mask);
            bool brute = brute_force_chordal(g);
            CHECK(is_chordal(g).chordal() == brute);
            CHECK(is_chordal_mcs(g) == brute);
        }
    }
}

TEST_CASE("certificates self-verify on random inputs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_random_graph(11, 0.3, seed);
        auto cert = is_chordal(g);
        CHECK(verify_certificate(g, cert));
        if (!cert.chordal()) {
            CHECK(cert.chordless_cycle().cycle.size() >= 4);
            CHECK(cert.chordless_cycle().cycle.size() <= g.vertex_count());
        }
    }
}

TEST_CASE("verify_certificate rejects broken witnesses") {
    Graph k3 = gen_complete(3);
    auto good = is_chordal(k3);
    CHECK(verify_certificate(k3, good));

    // triangle offered as a "long" cycle
    CHECK_FALSE(verify_certificate(k3, ChordalityCertificate{ChordlessCycle{{0, 1, 2}}}));

    Graph c4 = gen_cycle(4);
    CHECK(verify_certificate(c4, ChordalityCertificate{ChordlessCycle{{0, 1, 2, 3}}}));
    // a chord breaks the witness
    Graph c4_chord = mk(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
    CHECK_FALSE(
        verify_certificate(c4_chord, ChordalityCertificate{ChordlessCycle{{0, 1, 2, 3}}}));
    // non-edges and repeats
    CHECK_FALSE(verify_certificate(c4, ChordalityCertificate{ChordlessCycle{{0, 1, 3, 2}}}));
    CHECK_FALSE(verify_certificate(c4, ChordalityCertificate{ChordlessCycle{{0, 1, 2, 1}}}));
    // sequence against the wrong graph
    NestedSequence k3seq{{{0, 1, 2}}, RemovalStrategy::Kind::Unknown};
    CHECK_FALSE(verify_certificate(c4, ChordalityCertificate{k3seq}));
}

TEST_CASE("cycle witness text") {
    CHECK(cycle_to_text(ChordlessCycle{{0, 1, 2, 3}}) == "cycle: 0 1 2 3");
}
