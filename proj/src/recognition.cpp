#include "chordalkit/recognition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "chordalkit/errors.hpp"
#include "chordalkit/perfection.hpp"

namespace chordalkit {

namespace {

// ---- brute-force route A: enumerate elementary cycles, smallest vertex
// first and second < last so each cycle is produced exactly once ----

struct CycleHunter {
    const std::vector<std::uint64_t>& adj;
    int n;
    std::vector<int> path;
    std::uint64_t on_path = 0;

    bool cycle_has_chord() const {
        const int len = static_cast<int>(path.size());
        for (int i = 0; i < len; ++i) {
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue; // cyclically consecutive
                if (adj[path[i]] >> path[j] & 1) return true;
            }
        }
        return false;
    }

    // false once a chordless cycle of length >= 4 is known
    bool extend(int v, int start) {
        if (path.size() >= 4 && (adj[v] >> start & 1) && path[1] < path.back()) {
            if (!cycle_has_chord()) return false;
        }
        std::uint64_t cand = adj[v] & ~on_path;
        cand &= ~((std::uint64_t{1} << (start + 1)) - 1); // only vertices > start
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            on_path |= std::uint64_t{1} << w;
            bool ok = extend(w, start);
            on_path &= ~(std::uint64_t{1} << w);
            path.pop_back();
            if (!ok) return false;
        }
        return true;
    }

    bool all_long_cycles_have_chord() {
        for (int s = 0; s < n; ++s) {
            path.assign(1, s);
            on_path = std::uint64_t{1} << s;
            if (!extend(s, s)) return false;
        }
        return true;
    }
};

// ---- brute-force route B: scan vertex subsets for an induced long cycle ----

bool subset_is_long_induced_cycle(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
    if (std::popcount(s) < 4) return false;
    std::uint64_t rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(adj[v] & s) != 2) return false;
    }
    // all degrees 2: a disjoint union of cycles; connected means one cycle
    const int first = std::countr_zero(s);
    std::uint64_t reached = std::uint64_t{1} << first;
    std::uint64_t frontier = reached;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & s & ~reached;
        }
        reached |= next;
        frontier = next;
    }
    return reached == s;
}

bool has_induced_long_cycle(const std::vector<std::uint64_t>& adj, int n) {
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (subset_is_long_induced_cycle(adj, s)) return true;
    }
    return false;
}

} // namespace

bool brute_force_chordal(const Graph& g) {
    if (g.vertex_count() > 12)
        throw TooLarge("brute-force chordality is limited to 12 vertices, got " +
                       std::to_string(g.vertex_count()));
    auto masks = g.adjacency_masks();
    const int n = static_cast<int>(g.vertex_count());

    CycleHunter hunter{masks, n, {}, 0};
    const bool by_cycles = hunter.all_long_cycles_have_chord();
    const bool by_subsets = !has_induced_long_cycle(masks, n);
    if (by_cycles != by_subsets)
        throw std::logic_error("cycle enumeration and induced-cycle scan disagree");
    return by_cycles;
}

bool is_chordal_mcs(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> selected(n, false);
    std::vector<VertexId> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (selected[i]) continue;
            if (best == n || weight[i] > weight[best]) best = i; // ties: lowest label
        }
        selected[best] = true;
        order.push_back(g.label_of(best));
        for (VertexId w : g.neighbors(g.label_of(best))) {
            std::size_t wi = g.index_of(w);
            if (!selected[wi]) ++weight[wi];
        }
    }
    std::reverse(order.begin(), order.end());
    return verify_peo(g, order);
}

namespace {

// shortest x..y path in the subgraph induced by `allowed`, or empty
std::vector<VertexId> shortest_path(const Graph& g, const VertexSet& allowed,
                                    VertexId from, VertexId to) {
    std::vector<VertexId> parent(g.vertex_count(), 0);
    std::vector<bool> seen(g.vertex_count(), false);
    std::queue<VertexId> frontier;
    seen[g.index_of(from)] = true;
    frontier.push(from);
    while (!frontier.empty()) {
        VertexId v = frontier.front();
        frontier.pop();
        if (v == to) {
            std::vector<VertexId> path{to};
            while (path.back() != from) path.push_back(parent[g.index_of(path.back())]);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (VertexId w : g.neighbors(v)) {
            if (!vset::contains(allowed, w)) continue;
            std::size_t wi = g.index_of(w);
            if (!seen[wi]) {
                seen[wi] = true;
                parent[wi] = v;
                frontier.push(w);
            }
        }
    }
    return {};
}

} // namespace

ChordlessCycle find_chordless_cycle(const Graph& g, const VertexSet& core) {
    VertexSet members = vset::normalized(core);
    if (members.empty() || !perfect_set(g, members).empty())
        throw NotStalled("core must be non-empty with an empty perfect set");

    for (VertexId v : members) {
        VertexSet nbrs = vset::intersection(g.neighbors(v), members);
        // every core vertex is non-perfect, so some pair below is non-adjacent
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                VertexId x = nbrs[i], y = nbrs[j];
                if (g.has_edge(x, y)) continue;
                VertexSet allowed = vset::difference(members, nbrs);
                allowed = vset::difference(allowed, VertexSet{v});
                allowed = vset::unite(allowed, VertexSet{x, y});
                std::vector<VertexId> path = shortest_path(g, allowed, x, y);
                if (path.empty()) continue;
                std::vector<VertexId> cycle{v};
                cycle.insert(cycle.end(), path.begin(), path.end());
                return ChordlessCycle{std::move(cycle)};
            }
        }
    }
    throw std::logic_error("stalled core yielded no chordless cycle");
}

ChordalityCertificate certify(const Graph& g, RemovalStrategy strategy) {
    BuildResult result = build_stationary_sequence(g, strategy);
    ChordalityCertificate cert =
        std::holds_alternative<NestedSequence>(result)
            ? ChordalityCertificate{std::get<NestedSequence>(std::move(result))}
            : ChordalityCertificate{
                  find_chordless_cycle(g, std::get<StalledAt>(result).core)};
    if (!verify_certificate(g, cert))
        throw std::logic_error("certificate failed self-verification");
    return cert;
}

ChordalityCertificate is_chordal(const Graph& g) {
    return certify(g, RemovalStrategy::all_perfect());
}

bool verify_certificate(const Graph& g, const ChordalityCertificate& cert) {
    if (cert.chordal()) return verify_perfectly_nested(g, cert.sequence()).ok;

    const std::vector<VertexId>& cycle = cert.chordless_cycle().cycle;
    const std::size_t len = cycle.size();
    if (len < 4) return false;
    for (VertexId v : cycle)
        if (!g.has_vertex(v)) return false;
    if (vset::normalized(cycle).size() != len) return false; // repeats
    for (std::size_t i = 0; i < len; ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % len])) return false;
    }
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.has_edge(cycle[i], cycle[j])) return false; // chord
        }
    }
    return true;
}

std::string cycle_to_text(const ChordlessCycle& c) {
    std::ostringstream out;
    out << "cycle:";
    for (VertexId v : c.cycle) out << ' ' << v;
    return out.str();
}

} // namespace chordalkit
