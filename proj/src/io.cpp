#include "chordalkit/io.hpp"

#include <fstream>
#include <sstream>

#include "chordalkit/errors.hpp"

namespace chordalkit {

namespace {

bool parse_u32(const std::string& token, VertexId& out) {
    if (token.empty()) return false;
    std::uint64_t value = 0;
    for (char ch : token) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + static_cast<std::uint64_t>(ch - '0');
        if (value > 0xFFFFFFFFULL) return false;
    }
    out = static_cast<VertexId>(value);
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::vector<VertexId> labels;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line[0] == '#') continue;
        auto toks = tokens_of(line);
        if (toks.empty()) continue;
        if (toks[0] == "n") {
            VertexId v;
            if (toks.size() != 2 || !parse_u32(toks[1], v))
                throw ParseError(lineno, "expected \"n <label>\"");
            labels.push_back(v);
            continue;
        }
        VertexId u, v;
        if (toks.size() != 2 || !parse_u32(toks[0], u) || !parse_u32(toks[1], v))
            throw ParseError(lineno, "expected \"u v\" with decimal labels");
        if (u == v) throw ParseError(lineno, "loop edge at vertex " + toks[0]);
        labels.push_back(u);
        labels.push_back(v);
        edges.emplace_back(u, v);
    }
    return graph_from_edges(labels, edges);
}

Graph read_dimacs(std::istream& in) {
    std::vector<VertexId> labels;
    std::vector<Edge> edges;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::uint64_t declared_n = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c") continue;
        if (toks[0] == "p") {
            if (have_header) throw ParseError(lineno, "duplicate problem line");
            VertexId n, m;
            if (toks.size() != 4 || toks[1] != "edge" || !parse_u32(toks[2], n) ||
                !parse_u32(toks[3], m))
                throw ParseError(lineno, "expected \"p edge <n> <m>\"");
            declared_n = n;
            for (std::uint64_t v = 1; v <= declared_n; ++v)
                labels.push_back(static_cast<VertexId>(v));
            have_header = true;
            continue;
        }
        if (toks[0] == "e") {
            if (!have_header) throw ParseError(lineno, "edge before problem line");
            VertexId u, v;
            if (toks.size() != 3 || !parse_u32(toks[1], u) || !parse_u32(toks[2], v))
                throw ParseError(lineno, "expected \"e <u> <v>\"");
            if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                throw ParseError(lineno, "vertex out of declared range");
            if (u == v) throw ParseError(lineno, "loop edge at vertex " + toks[1]);
            edges.emplace_back(u, v);
            continue;
        }
        throw ParseError(lineno, "unrecognized line type \"" + toks[0] + "\"");
    }
    if (!have_header) throw ParseError(lineno, "missing problem line");
    return graph_from_edges(labels, edges);
}

Graph read_graph_file(const std::string& path, std::optional<FileFormat> format) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    FileFormat fmt = format.value_or(
        path.size() >= 4 && path.compare(path.size() - 4, 4, ".col") == 0
            ? FileFormat::Dimacs
            : FileFormat::EdgeList);
    return fmt == FileFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    for (VertexId v : g.vertices())
        if (g.neighbors(v).empty()) out << "n " << v << "\n";
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << "\n";
    return out.str();
}

std::string write_dimacs(const Graph& g) {
    // DIMACS vertices are 1..n; labels map to their 1-based ranks
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges())
        out << "e " << g.index_of(u) + 1 << ' ' << g.index_of(v) + 1 << "\n";
    return out.str();
}

nlohmann::json certificate_to_json(const ChordalityCertificate& cert) {
    nlohmann::json j;
    j["chordal"] = cert.chordal();
    if (cert.chordal()) {
        nlohmann::json levels = nlohmann::json::array();
        for (const VertexSet& level : cert.sequence().levels) levels.push_back(level);
        j["certificate"] = {{"levels", levels}};
    } else {
        j["certificate"] = {{"cycle", cert.chordless_cycle().cycle}};
    }
    return j;
}

ChordalityCertificate certificate_from_json(const nlohmann::json& j) {
    if (!j.contains("chordal") || !j.contains("certificate"))
        throw GraphError("certificate json needs \"chordal\" and \"certificate\"");
    if (j.at("chordal").get<bool>()) {
        NestedSequence seq;
        seq.strategy = RemovalStrategy::Kind::Unknown;
        for (const auto& level : j.at("certificate").at("levels"))
            seq.levels.push_back(vset::normalized(level.get<std::vector<VertexId>>()));
        return ChordalityCertificate{std::move(seq)};
    }
    ChordlessCycle cycle;
    cycle.cycle = j.at("certificate").at("cycle").get<std::vector<VertexId>>();
    return ChordalityCertificate{std::move(cycle)};
}

} // namespace chordalkit
