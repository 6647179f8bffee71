#ifndef CHORDALKIT_RECOGNITION_HPP
#define CHORDALKIT_RECOGNITION_HPP

#include <string>
#include <variant>

#include "chordalkit/graph.hpp"
#include "chordalkit/nested_sequence.hpp"

namespace chordalkit {

// Witness of non-chordality: a cycle of length >= 4 whose non-consecutive
// vertices are pairwise non-adjacent.
struct ChordlessCycle {
    std::vector<VertexId> cycle;
};

struct ChordalityCertificate {
    std::variant<NestedSequence, ChordlessCycle> witness;

    bool chordal() const { return std::holds_alternative<NestedSequence>(witness); }
    const NestedSequence& sequence() const { return std::get<NestedSequence>(witness); }
    const ChordlessCycle& chordless_cycle() const { return std::get<ChordlessCycle>(witness); }
};

// Decide chordality with a two-sided, self-verified certificate.
// is_chordal uses the AllPerfect strategy; certify takes any strategy.
ChordalityCertificate is_chordal(const Graph& g);
ChordalityCertificate certify(const Graph& g, RemovalStrategy strategy);

// Extract a chordless cycle from a stalled core (perfect_set(g, core) empty,
// core non-empty). Picks the lowest-label vertex with two non-adjacent
// neighbors and routes a shortest path between them that avoids the rest of
// its neighborhood; minimality makes the cycle chordless.
ChordlessCycle find_chordless_cycle(const Graph& g, const VertexSet& core);

// Oracle #1: maximum cardinality search, reversed, then checked with
// verify_peo. Ties broken by lowest label.
bool is_chordal_mcs(const Graph& g);

// Oracle #2, |V| <= 12: enumerates every elementary cycle of length >= 4 and
// checks each for a chord; independently scans all vertex subsets for an
// induced long cycle. Both routes must agree.
bool brute_force_chordal(const Graph& g);

bool verify_certificate(const Graph& g, const ChordalityCertificate& cert);

// "cycle: v1 v2 ... vk"
std::string cycle_to_text(const ChordlessCycle& c);

} // namespace chordalkit

#endif
