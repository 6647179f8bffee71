// Times the parallel spectrum kernel against the serial reference path on a
// few graphs near the enumeration guard. The reference runs the public
// per-orientation operations (including their dual-route dependent-arc
// check), so it does strictly more work per orientation; the comparison is
// about wall-clock behaviour, equality of the reports is asserted.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <omp.h>

#include "chordalkit/generators.hpp"
#include "chordalkit/orientation.hpp"

using namespace chordalkit;

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
}

void run_case(const std::string& name, const Graph& g) {
    auto t0 = std::chrono::steady_clock::now();
    SpectrumReport serial = orientation_spectrum_serial(g);
    double serial_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    SpectrumReport parallel = orientation_spectrum(g);
    double parallel_ms = ms_since(t0);

    bool equal = serial.achievable_d == parallel.achievable_d &&
                 serial.fully_orientable == parallel.fully_orientable;
    std::cout << name << ": |E|=" << g.edge_count() << "  reference " << serial_ms
              << " ms  parallel " << parallel_ms << " ms  speedup "
              << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x  reports "
              << (equal ? "equal" : "DIFFER") << "\n"
              << "  " << spectrum_to_text(parallel) << "\n";
    if (!equal) std::exit(1);
}

// first seed whose graph has exactly the requested edge count
Graph random_with_edges(std::size_t n, double p, std::size_t m) {
    for (std::uint64_t seed = 0;; ++seed) {
        Graph g = gen_random_graph(n, p, seed);
        if (g.edge_count() == m) return g;
    }
}

Graph chordal_with_edges(std::size_t n, std::size_t bound, std::size_t m) {
    for (std::uint64_t seed = 0;; ++seed) {
        Graph g = gen_random_chordal(n, bound, seed);
        if (g.edge_count() == m) return g;
    }
}

} // namespace

int main() {
    std::cout << "threads: " << omp_get_max_threads() << "\n";
    run_case("K_3(2) octahedron", gen_complete_multipartite(3, 2));
    run_case("random chordal, 16 edges", chordal_with_edges(11, 2, 16));
    run_case("G(10, .4), 16 edges", random_with_edges(10, 0.4, 16));
    return 0;
}
