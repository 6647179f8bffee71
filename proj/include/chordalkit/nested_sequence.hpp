#ifndef CHORDALKIT_NESTED_SEQUENCE_HPP
#define CHORDALKIT_NESTED_SEQUENCE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

// How the builder picks the removal set inside the current perfect set.
struct RemovalStrategy {
    enum class Kind { AllPerfect, SingleLowest, RandomSubset, Unknown };

    Kind kind = Kind::AllPerfect;
    std::uint64_t seed = 0; // RandomSubset only

    static RemovalStrategy all_perfect() { return {Kind::AllPerfect, 0}; }
    static RemovalStrategy single_lowest() { return {Kind::SingleLowest, 0}; }
    static RemovalStrategy random_subset(std::uint64_t seed) {
        return {Kind::RandomSubset, seed};
    }
};

// Decreasing chain U_0 = V, U_1, ..., U_k. The list stops at the first
// stationary level; mathematically the sequence continues as the constant
// tail U_k, U_k, ...
struct NestedSequence {
    std::vector<VertexSet> levels;
    RemovalStrategy::Kind strategy = RemovalStrategy::Kind::Unknown;
};

enum class SequenceViolation {
    NotStartV,
    NotNested,
    EmptyPerfect,
    RemovalNotPerfect,
    NotStationary,
};

const char* to_string(SequenceViolation v);

struct VerificationReport {
    struct Item {
        std::size_t level;
        SequenceViolation kind;
        std::string detail;
    };
    bool ok = true;
    std::vector<Item> violations;
};

// Non-empty vertex set on which the builder found no perfect vertex.
struct StalledAt {
    VertexSet core;
};

using BuildResult = std::variant<NestedSequence, StalledAt>;

// Repeatedly removes a strategy-chosen non-empty subset of the current
// perfect set until the remainder is stationary (P(U) = U) or no perfect
// vertex is left. Terminates within |V| removals.
BuildResult build_stationary_sequence(const Graph& g, RemovalStrategy strategy);

// Checks all conditions of a stationary perfectly nested sequence and
// reports every violation, not just the first.
VerificationReport verify_perfectly_nested(const Graph& g, const NestedSequence& seq);

// Removal sets level by level (ascending within each batch), then the
// terminal level ascending. Requires a verified sequence.
std::vector<VertexId> peo_from_sequence(const Graph& g, const NestedSequence& seq);

// True iff every vertex is simplicial among its successors in the order.
bool verify_peo(const Graph& g, const std::vector<VertexId>& order);

// "levels k+1" then one line per level, members ascending.
std::string sequence_to_text(const NestedSequence& seq);

} // namespace chordalkit

#endif
