#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <omp.h>

#include "chordalkit/chromatic.hpp"
#include "chordalkit/errors.hpp"
#include "chordalkit/generators.hpp"
#include "chordalkit/io.hpp"
#include "chordalkit/nested_sequence.hpp"
#include "chordalkit/orientation.hpp"
#include "chordalkit/recognition.hpp"

namespace {

using namespace chordalkit;

// exit contract: 0 chordal / success, 1 not chordal, 2 input error

RemovalStrategy parse_strategy(const std::string& s) {
    if (s == "all") return RemovalStrategy::all_perfect();
    if (s == "single") return RemovalStrategy::single_lowest();
    if (s.rfind("random:", 0) == 0)
        return RemovalStrategy::random_subset(std::stoull(s.substr(7)));
    throw GraphError("--strategy expects all, single or random:<seed>");
}

std::optional<FileFormat> parse_format(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "edges") return FileFormat::EdgeList;
    if (s == "dimacs") return FileFormat::Dimacs;
    throw GraphError("--format expects edges or dimacs");
}

std::vector<VertexId> parse_order(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ',', ' ');
    std::istringstream ss(spaced);
    std::vector<VertexId> order;
    std::uint64_t v;
    while (ss >> v) order.push_back(static_cast<VertexId>(v));
    if (!ss.eof()) throw GraphError("--order expects a list of vertex labels");
    return order;
}

void print_order(const std::vector<VertexId>& order) {
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << order[i];
    }
    std::cout << "\n";
}

int cmd_check(const Graph& g, const std::string& strategy, const std::string& output) {
    ChordalityCertificate cert = certify(g, parse_strategy(strategy));
    if (output == "json") {
        std::cout << certificate_to_json(cert).dump() << "\n";
    } else if (cert.chordal()) {
        std::cout << "chordal\n" << sequence_to_text(cert.sequence());
    } else {
        std::cout << "not chordal\n" << cycle_to_text(cert.chordless_cycle()) << "\n";
    }
    return cert.chordal() ? 0 : 1;
}

int cmd_peo(const Graph& g, const std::string& strategy) {
    ChordalityCertificate cert = certify(g, parse_strategy(strategy));
    if (!cert.chordal()) {
        std::cout << cycle_to_text(cert.chordless_cycle()) << "\n";
        return 1;
    }
    print_order(peo_from_sequence(g, cert.sequence()));
    return 0;
}

int cmd_color(const Graph& g) {
    ChordalityCertificate cert = is_chordal(g);
    if (cert.chordal()) {
        std::vector<VertexId> order = peo_from_sequence(g, cert.sequence());
        std::reverse(order.begin(), order.end());
        Coloring coloring = greedy_coloring(g, order);
        std::cout << "colors " << coloring.color_count << "\n"
                  << coloring_to_text(coloring);
        return 0;
    }
    if (g.vertex_count() <= 12) {
        std::cerr << "not chordal; using the exact oracle\n";
        Coloring coloring = optimal_coloring_exact(g);
        std::cout << "colors " << coloring.color_count << "\n"
                  << coloring_to_text(coloring);
        return 1;
    }
    std::cerr << "not chordal, and the exact oracle is limited to 12 vertices\n";
    return 1;
}

int cmd_clique(const Graph& g) {
    ChordalityCertificate cert = is_chordal(g);
    int omega = 0;
    std::vector<VertexSet> cliques;
    int status = 0;
    if (cert.chordal()) {
        std::vector<VertexId> peo = peo_from_sequence(g, cert.sequence());
        omega = clique_number_chordal(g, peo);
        cliques = maximal_cliques_chordal(g, peo);
    } else if (g.vertex_count() <= 12) {
        std::cerr << "not chordal; using the exact oracles\n";
        omega = clique_number_exact(g);
        cliques = maximal_cliques_exact(g);
        status = 1;
    } else {
        std::cerr << "not chordal, and the exact oracles are limited to 12 vertices\n";
        return 1;
    }
    std::cout << "omega " << omega << "\n";
    for (const VertexSet& c : cliques) {
        std::cout << "clique:";
        for (VertexId v : c) std::cout << ' ' << v;
        std::cout << "\n";
    }
    return status;
}

int cmd_orient_spectrum(const Graph& g) {
    std::cout << spectrum_to_text(orientation_spectrum(g)) << "\n";
    return 0;
}

int cmd_orient_analyze(const Graph& g, const std::string& order_text) {
    Orientation d = orient_by_ordering(g, parse_order(order_text));
    std::vector<Arc> dep = dependent_arcs(d);
    std::cout << "d " << dep.size() << "\n";
    for (const Arc& a : dep) std::cout << a.from << " -> " << a.to << "\n";
    return 0;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params,
            std::uint64_t seed, const std::string& format, const std::string& out_path) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw BadSize("family " + family + " expects " + std::to_string(k) +
                          " parameter(s)");
    };
    auto num = [&](std::size_t i) -> std::uint64_t {
        try {
            std::size_t pos = 0;
            std::uint64_t v = std::stoull(params.at(i), &pos);
            if (pos != params.at(i).size()) throw std::invalid_argument("trailing junk");
            return v;
        } catch (const std::exception&) {
            throw BadSize("parameter \"" + params.at(i) + "\" is not a count");
        }
    };
    auto real = [&](std::size_t i) -> double {
        try {
            std::size_t pos = 0;
            double v = std::stod(params.at(i), &pos);
            if (pos != params.at(i).size()) throw std::invalid_argument("trailing junk");
            return v;
        } catch (const std::exception&) {
            throw BadProbability("parameter \"" + params.at(i) + "\" is not a probability");
        }
    };

    Graph g;
    if (family == "path") {
        need(1);
        g = gen_path(num(0));
    } else if (family == "cycle") {
        need(1);
        g = gen_cycle(num(0));
    } else if (family == "complete") {
        need(1);
        g = gen_complete(num(0));
    } else if (family == "star") {
        need(1);
        g = gen_star(num(0));
    } else if (family == "kpartite") {
        need(2);
        g = gen_complete_multipartite(num(0), num(1));
    } else if (family == "chordal") {
        need(2);
        g = gen_random_chordal(num(0), num(1), seed);
    } else if (family == "random") {
        need(2);
        g = gen_random_graph(num(0), real(1), seed);
    } else {
        throw BadSize("unknown family " + family);
    }

    std::string text =
        parse_format(format) == FileFormat::Dimacs ? write_dimacs(g) : write_edge_list(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw GraphError("cannot write " + out_path);
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordalkit - triangulated-graph certificates, colorings and orientations"};
    app.require_subcommand(1);

    std::string path, format, output = "text", strategy = "all", order_text;
    std::string family, out_path;
    std::vector<std::string> params;
    std::uint64_t seed = 0;
    int threads = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("path", path, "input graph file")->required();
        cmd->add_option("--format", format, "edges or dimacs (default: by extension)");
        cmd->add_option("--threads", threads, "OpenMP thread count (0 = default)");
    };

    CLI::App* check = app.add_subcommand("check", "decide chordality, print a certificate");
    add_input(check);
    check->add_option("--output", output, "text or json");
    check->add_option("--strategy", strategy, "all, single or random:<seed>");

    CLI::App* peo = app.add_subcommand("peo", "perfect elimination ordering");
    add_input(peo);
    peo->add_option("--strategy", strategy, "all, single or random:<seed>");

    CLI::App* color = app.add_subcommand("color", "proper coloring (omega colors when chordal)");
    add_input(color);

    CLI::App* clique = app.add_subcommand("clique", "clique number and maximal cliques");
    add_input(clique);

    CLI::App* orient = app.add_subcommand("orient", "acyclic-orientation analysis");
    orient->require_subcommand(1);
    CLI::App* spectrum = orient->add_subcommand("spectrum", "dependent-arc spectrum");
    add_input(spectrum);
    CLI::App* analyze = orient->add_subcommand("analyze", "dependent arcs of one orientation");
    add_input(analyze);
    analyze->add_option("--order", order_text, "vertex ordering to orient by")->required();

    CLI::App* gen = app.add_subcommand("gen", "generate a graph family");
    gen->add_option("family", family, "path|cycle|complete|star|kpartite|chordal|random")
        ->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--format", format, "edges or dimacs");
    gen->add_option("-o,--out", out_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (threads > 0) omp_set_num_threads(threads);
        if (app.got_subcommand(gen))
            return cmd_gen(family, params, seed, format, out_path);

        Graph g = read_graph_file(path, parse_format(format));
        if (app.got_subcommand(check)) return cmd_check(g, strategy, output);
        if (app.got_subcommand(peo)) return cmd_peo(g, strategy);
        if (app.got_subcommand(color)) return cmd_color(g);
        if (app.got_subcommand(clique)) return cmd_clique(g);
        if (orient->got_subcommand(spectrum)) return cmd_orient_spectrum(g);
        if (orient->got_subcommand(analyze)) return cmd_orient_analyze(g, order_text);
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (app.got_subcommand(gen))
            std::cerr << "usage: chordalkit gen <path|cycle|complete|star|kpartite|chordal|random>"
                         " <params...> [--seed S] [--format F] [-o FILE]\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
