#include "chordalkit/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "chordalkit/errors.hpp"
#include "chordalkit/nested_sequence.hpp"

namespace chordalkit {

bool is_proper(const Graph& g, const Coloring& c) {
    if (c.assignment.size() != g.vertex_count()) return false;
    std::vector<int> color(g.vertex_count(), -1);
    for (const auto& [v, col] : c.assignment) {
        if (!g.has_vertex(v) || col < 0) return false;
        color[g.index_of(v)] = col;
    }
    for (const auto& [u, v] : g.edges())
        if (color[g.index_of(u)] == color[g.index_of(v)]) return false;
    std::vector<int> used(color.begin(), color.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    return static_cast<int>(used.size()) == c.color_count;
}

int clique_number_chordal(const Graph& g, const std::vector<VertexId>& peo) {
    if (!verify_peo(g, peo)) throw NotAPeo("ordering is not a perfect elimination ordering");
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < peo.size(); ++i) position[g.index_of(peo[i])] = i;
    std::size_t best = 0;
    for (std::size_t i = 0; i < peo.size(); ++i) {
        std::size_t later = 0;
        for (VertexId w : g.neighbors(peo[i]))
            if (position[g.index_of(w)] > i) ++later;
        best = std::max(best, later + 1);
    }
    return static_cast<int>(best); // 0 only for the empty graph
}

std::vector<VertexSet> maximal_cliques_chordal(const Graph& g,
                                               const std::vector<VertexId>& peo) {
    if (!verify_peo(g, peo)) throw NotAPeo("ordering is not a perfect elimination ordering");
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < peo.size(); ++i) position[g.index_of(peo[i])] = i;

    std::vector<VertexSet> candidates;
    candidates.reserve(peo.size());
    for (std::size_t i = 0; i < peo.size(); ++i) {
        VertexSet c{peo[i]};
        for (VertexId w : g.neighbors(peo[i]))
            if (position[g.index_of(w)] > i) c.push_back(w);
        candidates.push_back(vset::normalized(std::move(c)));
    }

    std::vector<VertexSet> maximal;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; keep && j < candidates.size(); ++j) {
            if (i == j) continue;
            if (candidates[i] == candidates[j]) {
                keep = i < j; // dedup: keep the first copy
            } else if (vset::is_subset(candidates[i], candidates[j])) {
                keep = false;
            }
        }
        if (keep) maximal.push_back(candidates[i]);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

Coloring greedy_coloring(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != g.vertex_count() || vset::normalized(order) != g.vertices())
        throw NotAPermutation("order is not a permutation of the vertex set");

    std::vector<int> color(g.vertex_count(), -1);
    int max_color = -1;
    for (VertexId v : order) {
        std::vector<bool> taken(g.vertex_count() + 1, false);
        for (VertexId w : g.neighbors(v)) {
            int cw = color[g.index_of(w)];
            if (cw >= 0) taken[cw] = true;
        }
        int c = 0;
        while (taken[c]) ++c;
        color[g.index_of(v)] = c;
        max_color = std::max(max_color, c);
    }

    Coloring out;
    out.assignment.reserve(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        out.assignment.emplace_back(g.label_of(i), color[i]);
    out.color_count = max_color + 1;
    if (!is_proper(g, out)) throw std::logic_error("greedy coloring is not proper");
    return out;
}

namespace {

// iterative-deepening exact coloring over dense indices, n <= 12
bool try_k_coloring(const std::vector<std::uint64_t>& adj,
                    const std::vector<int>& order, int k, std::vector<int>& color) {
    const int n = static_cast<int>(order.size());
    std::fill(color.begin(), color.end(), -1);
    // assign order[pos]; a new color may only enter as max_used + 1
    std::vector<int> chosen(n, -1);
    int pos = 0;
    std::vector<int> max_used_at(n + 1, -1);
    while (true) {
        if (pos == n) return true;
        int v = order[pos];
        int limit = std::min(max_used_at[pos] + 1, k - 1);
        int c = chosen[pos] + 1;
        bool advanced = false;
        for (; c <= limit; ++c) {
            bool clash = false;
            std::uint64_t nb = adj[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) {
                color[v] = c;
                chosen[pos] = c;
                max_used_at[pos + 1] = std::max(max_used_at[pos], c);
                ++pos;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            chosen[pos] = -1;
            if (pos == 0) return false;
            --pos;
            color[order[pos]] = -1;
        }
    }
}

std::vector<int> constraint_order(const std::vector<std::uint64_t>& adj) {
    std::vector<int> order(adj.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });
    return order;
}

} // namespace

Coloring optimal_coloring_exact(const Graph& g) {
    if (g.vertex_count() > 12)
        throw TooLarge("exact coloring is limited to 12 vertices, got " +
                       std::to_string(g.vertex_count()));
    Coloring out;
    if (g.vertex_count() == 0) return out;

    auto adj = g.adjacency_masks();
    auto order = constraint_order(adj);
    std::vector<int> color(g.vertex_count(), -1);
    for (int k = 1;; ++k) {
        if (try_k_coloring(adj, order, k, color)) {
            for (std::size_t i = 0; i < g.vertex_count(); ++i)
                out.assignment.emplace_back(g.label_of(i), color[i]);
            out.color_count = k; // first k that works; colors are dense 0..k-1
            if (!is_proper(g, out)) throw std::logic_error("exact coloring is not proper");
            return out;
        }
    }
}

int chromatic_number_exact(const Graph& g) {
    return optimal_coloring_exact(g).color_count;
}

int clique_number_exact(const Graph& g) {
    if (g.vertex_count() > 12)
        throw TooLarge("exact clique number is limited to 12 vertices, got " +
                       std::to_string(g.vertex_count()));
    const int n = static_cast<int>(g.vertex_count());
    auto adj = g.adjacency_masks();
    int best = 0;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t s = 0; s < limit; ++s) {
        if (std::popcount(s) <= best) continue;
        bool clique = true;
        std::uint64_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if ((adj[v] & s) != (s & ~(std::uint64_t{1} << v))) {
                clique = false;
                break;
            }
        }
        if (clique) best = std::popcount(s);
    }
    return best;
}

namespace {

void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x, std::vector<std::uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    std::uint64_t cand = p;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t bit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | bit, p & adj[v], x & adj[v], out);
        p &= ~bit;
        x |= bit;
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques_exact(const Graph& g) {
    if (g.vertex_count() > 12)
        throw TooLarge("exact clique enumeration is limited to 12 vertices, got " +
                       std::to_string(g.vertex_count()));
    if (g.vertex_count() == 0) return {};
    auto adj = g.adjacency_masks();
    std::vector<std::uint64_t> raw;
    bron_kerbosch(adj, 0, (std::uint64_t{1} << g.vertex_count()) - 1, 0, raw);
    std::vector<VertexSet> cliques;
    cliques.reserve(raw.size());
    for (std::uint64_t mask : raw) {
        VertexSet c;
        while (mask) {
            int v = std::countr_zero(mask);
            mask &= mask - 1;
            c.push_back(g.label_of(v));
        }
        cliques.push_back(std::move(c));
    }
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

R1Report check_r1(const Graph& g) {
    if (g.vertex_count() > 12)
        throw TooLarge("R1 check is limited to 12 vertices, got " +
                       std::to_string(g.vertex_count()));
    R1Report report;
    report.chi = chromatic_number_exact(g);
    report.omega = clique_number_exact(g);
    if (report.chi < report.omega)
        throw std::logic_error("chi < omega: coloring or clique oracle is broken");
    report.equal = report.chi == report.omega;
    return report;
}

std::string coloring_to_text(const Coloring& c) {
    std::ostringstream out;
    for (const auto& [v, col] : c.assignment) out << v << ' ' << col << "\n";
    return out.str();
}

} // namespace chordalkit
