#ifndef CHORDALKIT_ORIENTATION_HPP
#define CHORDALKIT_ORIENTATION_HPP

#include <string>
#include <vector>

#include "chordalkit/graph.hpp"

namespace chordalkit {

struct Arc {
    VertexId from = 0;
    VertexId to = 0;

    bool operator==(const Arc&) const = default;
    bool operator<(const Arc& o) const {
        return from != o.from ? from < o.from : to < o.to;
    }
};

// A direction for every edge of base, in base.edges() order.
struct Orientation {
    Graph base;
    std::vector<Arc> arcs;
};

struct SpectrumReport {
    std::vector<int> achievable_d; // sorted
    int d_min = 0;
    int d_max = 0;
    bool fully_orientable = false;
};

// Directs every edge from the earlier to the later endpoint; the result is
// acyclic and order is one of its topological orderings.
Orientation orient_by_ordering(const Graph& g, const std::vector<VertexId>& order);

bool is_acyclic(const Orientation& d);

// Arcs u->v such that v stays reachable from u after deleting the arc
// (equivalently: a directed walk of length >= 2 from u to v exists).
// Cross-checked internally against the reversal formulation.
std::vector<Arc> dependent_arcs(const Orientation& d);

// The other formulation: arcs whose reversal creates a directed cycle.
std::vector<Arc> dependent_arcs_by_reversal(const Orientation& d);

// Enumerates all 2^|E| direction assignments (|E| <= 20), keeps the acyclic
// ones and collects the dependent-arc counts. The default version runs the
// enumeration blocks in parallel with a bit-parallel reachability kernel;
// the serial version walks the public per-orientation operations and is
// kept as the reference the parallel kernel is tested against.
SpectrumReport orientation_spectrum(const Graph& g);
SpectrumReport orientation_spectrum_serial(const Graph& g);

std::string orientation_to_text(const Orientation& d); // "u -> v" lines
std::string spectrum_to_text(const SpectrumReport& r);

} // namespace chordalkit

#endif
