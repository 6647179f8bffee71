#include "chordalkit/orientation.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "chordalkit/errors.hpp"

namespace chordalkit {

namespace {

std::vector<std::vector<std::size_t>> out_lists(const Orientation& d) {
    std::vector<std::vector<std::size_t>> out(d.base.vertex_count());
    for (const Arc& a : d.arcs) out[d.base.index_of(a.from)].push_back(d.base.index_of(a.to));
    return out;
}

bool dag_check(const std::vector<std::vector<std::size_t>>& out) {
    const std::size_t n = out.size();
    // iterative DFS, colors: 0 new, 1 on stack, 2 done
    std::vector<int> state(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < n; ++root) {
        if (state[root] != 0) continue;
        state[root] = 1;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                std::size_t w = out[v][next++];
                if (state[w] == 1) return false; // back edge
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.emplace_back(w, 0);
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

// is `to` reachable from `from` without using arc `skip`?
bool reachable_without(const std::vector<std::vector<std::size_t>>& out,
                       std::size_t from, std::size_t to, std::size_t skip_from,
                       std::size_t skip_to) {
    std::vector<bool> seen(out.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : out[v]) {
            if (v == skip_from && w == skip_to) continue;
            if (w == to) return true;
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return false;
}

} // namespace

Orientation orient_by_ordering(const Graph& g, const std::vector<VertexId>& order) {
    if (order.size() != g.vertex_count() || vset::normalized(order) != g.vertices())
        throw NotAPermutation("order is not a permutation of the vertex set");
    std::vector<std::size_t> position(g.vertex_count());
    for (std::size_t i = 0; i < order.size(); ++i) position[g.index_of(order[i])] = i;

    Orientation d;
    d.base = g;
    for (const auto& [u, v] : g.edges()) {
        if (position[g.index_of(u)] < position[g.index_of(v)])
            d.arcs.push_back({u, v});
        else
            d.arcs.push_back({v, u});
    }
    return d;
}

bool is_acyclic(const Orientation& d) {
    return dag_check(out_lists(d));
}

std::vector<Arc> dependent_arcs(const Orientation& d) {
    auto out = out_lists(d);
    if (!dag_check(out)) throw CyclicInput("orientation has a directed cycle");

    std::vector<Arc> dependent;
    for (const Arc& a : d.arcs) {
        std::size_t u = d.base.index_of(a.from), v = d.base.index_of(a.to);
        if (reachable_without(out, u, v, u, v)) dependent.push_back(a);
    }
    std::sort(dependent.begin(), dependent.end());
    // the walk and reversal formulations must coincide
    if (dependent != dependent_arcs_by_reversal(d))
        throw std::logic_error("dependent-arc formulations disagree");
    return dependent;
}

std::vector<Arc> dependent_arcs_by_reversal(const Orientation& d) {
    if (!is_acyclic(d)) throw CyclicInput("orientation has a directed cycle");
    std::vector<Arc> dependent;
    for (std::size_t k = 0; k < d.arcs.size(); ++k) {
        Orientation flipped = d;
        std::swap(flipped.arcs[k].from, flipped.arcs[k].to);
        if (!is_acyclic(flipped)) dependent.push_back(d.arcs[k]);
    }
    std::sort(dependent.begin(), dependent.end());
    return dependent;
}

namespace {

SpectrumReport report_from_set(const std::set<int>& values) {
    SpectrumReport r;
    r.achievable_d.assign(values.begin(), values.end());
    r.d_min = r.achievable_d.front();
    r.d_max = r.achievable_d.back();
    r.fully_orientable =
        static_cast<int>(r.achievable_d.size()) == r.d_max - r.d_min + 1;
    return r;
}

void spectrum_guard(const Graph& g) {
    if (g.edge_count() > 20)
        throw TooLarge("spectrum enumeration is limited to 20 edges, got " +
                       std::to_string(g.edge_count()));
}

} // namespace

SpectrumReport orientation_spectrum_serial(const Graph& g) {
    spectrum_guard(g);
    const std::vector<Edge> edges = g.edges();
    const std::size_t m = edges.size();
    std::set<int> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Orientation d;
        d.base = g;
        d.arcs.reserve(m);
        for (std::size_t k = 0; k < m; ++k) {
            const auto& [u, v] = edges[k];
            d.arcs.push_back(mask >> k & 1 ? Arc{v, u} : Arc{u, v});
        }
        if (!is_acyclic(d)) continue;
        seen.insert(static_cast<int>(dependent_arcs(d).size()));
    }
    return report_from_set(seen);
}

SpectrumReport orientation_spectrum(const Graph& g) {
    spectrum_guard(g);
    const std::vector<Edge> edges = g.edges();
    const int m = static_cast<int>(edges.size());

    // compact endpoints so the per-orientation state fits in 64-bit masks;
    // isolated vertices cannot affect cycles or walks
    VertexSet touched;
    for (const auto& [u, v] : edges) {
        touched.push_back(u);
        touched.push_back(v);
    }
    touched = vset::normalized(std::move(touched));
    const int t = static_cast<int>(touched.size());
    std::vector<std::pair<int, int>> ce(m);
    for (int k = 0; k < m; ++k) {
        auto at = [&](VertexId x) {
            return static_cast<int>(
                std::lower_bound(touched.begin(), touched.end(), x) - touched.begin());
        };
        ce[k] = {at(edges[k].first), at(edges[k].second)};
    }

    const std::int64_t total = std::int64_t{1} << m;
    std::uint32_t d_mask = 0;

#pragma omp parallel for schedule(static) reduction(| : d_mask)
    for (std::int64_t mask = 0; mask < total; ++mask) {
        std::uint64_t out[40];
        int indeg[40];
        int topo[40];
        for (int i = 0; i < t; ++i) {
            out[i] = 0;
            indeg[i] = 0;
        }
        for (int k = 0; k < m; ++k) {
            int from = ce[k].first, to = ce[k].second;
            if (mask >> k & 1) std::swap(from, to);
            out[from] |= std::uint64_t{1} << to;
            ++indeg[to];
        }

        // Kahn topological order; abandons cyclic assignments
        int head = 0, tail = 0;
        for (int i = 0; i < t; ++i)
            if (indeg[i] == 0) topo[tail++] = i;
        while (head < tail) {
            std::uint64_t nb = out[topo[head++]];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                if (--indeg[w] == 0) topo[tail++] = w;
            }
        }
        if (tail != t) continue;

        // reach[v]: vertices reachable from v in >= 1 step
        std::uint64_t reach[40];
        for (int i = t - 1; i >= 0; --i) {
            int v = topo[i];
            std::uint64_t r = 0;
            std::uint64_t nb = out[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                r |= (std::uint64_t{1} << w) | reach[w];
            }
            reach[v] = r;
        }
        // two_step[v]: reachable in >= 2 steps
        std::uint64_t two_step[40];
        for (int v = 0; v < t; ++v) {
            std::uint64_t r = 0;
            std::uint64_t nb = out[v];
            while (nb) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                r |= reach[w];
            }
            two_step[v] = r;
        }

        int dependent = 0;
        for (int k = 0; k < m; ++k) {
            int from = ce[k].first, to = ce[k].second;
            if (mask >> k & 1) std::swap(from, to);
            if (two_step[from] >> to & 1) ++dependent;
        }
        d_mask |= std::uint32_t{1} << dependent;
    }

    std::set<int> seen;
    for (int d = 0; d < 32; ++d)
        if (d_mask >> d & 1) seen.insert(d);
    return report_from_set(seen);
}

std::string orientation_to_text(const Orientation& d) {
    std::ostringstream out;
    for (const Arc& a : d.arcs) out << a.from << " -> " << a.to << "\n";
    return out.str();
}

std::string spectrum_to_text(const SpectrumReport& r) {
    std::ostringstream out;
    out << r.d_min << ' ' << r.d_max << " achievable:{";
    for (std::size_t i = 0; i < r.achievable_d.size(); ++i) {
        if (i) out << ',';
        out << r.achievable_d[i];
    }
    out << "} fully_orientable:" << (r.fully_orientable ? "true" : "false");
    return out.str();
}

} // namespace chordalkit
