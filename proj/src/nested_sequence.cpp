#include "chordalkit/nested_sequence.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "chordalkit/errors.hpp"
#include "chordalkit/perfection.hpp"
#include "chordalkit/rng.hpp"

namespace chordalkit {

const char* to_string(SequenceViolation v) {
    switch (v) {
        case SequenceViolation::NotStartV: return "NotStartV";
        case SequenceViolation::NotNested: return "NotNested";
        case SequenceViolation::EmptyPerfect: return "EmptyPerfect";
        case SequenceViolation::RemovalNotPerfect: return "RemovalNotPerfect";
        case SequenceViolation::NotStationary: return "NotStationary";
    }
    return "?";
}

namespace {

VertexSet choose_removal(const RemovalStrategy& strategy, const VertexSet& perfect,
                         SplitMix64& rng) {
    switch (strategy.kind) {
        case RemovalStrategy::Kind::AllPerfect:
            return perfect;
        case RemovalStrategy::Kind::SingleLowest:
            return {perfect.front()};
        case RemovalStrategy::Kind::RandomSubset: {
            // uniform over non-empty subsets by rejection
            VertexSet pick;
            while (pick.empty()) {
                for (VertexId v : perfect)
                    if (rng.coin()) pick.push_back(v);
            }
            return pick;
        }
        case RemovalStrategy::Kind::Unknown:
            break;
    }
    throw InvalidSequence("Unknown strategy cannot drive the builder");
}

} // namespace

BuildResult build_stationary_sequence(const Graph& g, RemovalStrategy strategy) {
    NestedSequence seq;
    seq.strategy = strategy.kind;
    SplitMix64 rng(strategy.seed);
    VertexSet u = g.vertices();
    for (;;) {
        seq.levels.push_back(u);
        VertexSet perfect = perfect_set(g, u);
        if (perfect == u) return seq; // stationary; also the empty-graph case
        if (perfect.empty()) return StalledAt{std::move(u)};
        u = vset::difference(u, choose_removal(strategy, perfect, rng));
    }
}

VerificationReport verify_perfectly_nested(const Graph& g, const NestedSequence& seq) {
    VerificationReport report;
    auto flag = [&](std::size_t level, SequenceViolation kind, std::string detail) {
        report.violations.push_back({level, kind, std::move(detail)});
    };

    if (seq.levels.empty()) {
        flag(0, SequenceViolation::NotStartV, "sequence has no levels");
        report.ok = false;
        return report;
    }
    for (const VertexSet& level : seq.levels) {
        for (VertexId v : level) {
            if (!g.has_vertex(v))
                throw UnknownVertex("level contains unknown vertex " + std::to_string(v));
        }
    }

    if (vset::normalized(seq.levels.front()) != g.vertices())
        flag(0, SequenceViolation::NotStartV, "U_0 is not the full vertex set");

    const std::size_t terminal = seq.levels.size() - 1;
    for (std::size_t i = 0; i < terminal; ++i) {
        const VertexSet cur = vset::normalized(seq.levels[i]);
        const VertexSet next = vset::normalized(seq.levels[i + 1]);
        if (!vset::is_subset(next, cur))
            flag(i + 1, SequenceViolation::NotNested,
                 "level " + std::to_string(i + 1) + " is not a subset of level " +
                     std::to_string(i));
        VertexSet perfect = perfect_set(g, cur);
        if (perfect.empty())
            flag(i, SequenceViolation::EmptyPerfect,
                 "P(U_" + std::to_string(i) + ") is empty");
        VertexSet removed = vset::difference(cur, next);
        if (!vset::is_subset(removed, perfect)) {
            VertexSet bad = vset::difference(removed, perfect);
            flag(i, SequenceViolation::RemovalNotPerfect,
                 "removal at level " + std::to_string(i) + " contains " +
                     std::to_string(bad.size()) + " non-perfect vertices");
        }
    }

    const VertexSet tail = vset::normalized(seq.levels.back());
    if (perfect_set(g, tail) != tail)
        flag(terminal, SequenceViolation::NotStationary,
             "terminal level is not stationary (P(U_k) != U_k)");

    report.ok = report.violations.empty();
    return report;
}

std::vector<VertexId> peo_from_sequence(const Graph& g, const NestedSequence& seq) {
    if (!verify_perfectly_nested(g, seq).ok)
        throw InvalidSequence("sequence fails perfectly-nested verification");
    std::vector<VertexId> order;
    order.reserve(g.vertex_count());
    for (std::size_t i = 0; i + 1 < seq.levels.size(); ++i) {
        VertexSet removed = vset::difference(vset::normalized(seq.levels[i]),
                                             vset::normalized(seq.levels[i + 1]));
        order.insert(order.end(), removed.begin(), removed.end());
    }
    VertexSet tail = vset::normalized(seq.levels.back());
    order.insert(order.end(), tail.begin(), tail.end());
    return order;
}

bool verify_peo(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != g.vertex_count() || vset::normalized(order) != g.vertices())
        throw NotAPermutation("order is not a permutation of the vertex set");

    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) position[g.index_of(order[i])] = i;

    for (std::size_t i = 0; i < order.size(); ++i) {
        VertexSet later;
        for (VertexId w : g.neighbors(order[i]))
            if (position[g.index_of(w)] > i) later.push_back(w);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b)
                if (!g.has_edge(later[a], later[b])) return false;
    }
    return true;
}

std::string sequence_to_text(const NestedSequence& seq) {
    std::ostringstream out;
    out << "levels " << seq.levels.size() << "\n";
    for (const VertexSet& level : seq.levels) {
        for (std::size_t i = 0; i < level.size(); ++i) {
            if (i) out << ' ';
            out << level[i];
        }
        out << "\n";
    }
    return out.str();
}

} // namespace chordalkit
