#ifndef CHORDALKIT_IO_HPP
#define CHORDALKIT_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "chordalkit/graph.hpp"
#include "chordalkit/recognition.hpp"

namespace chordalkit {

enum class FileFormat { EdgeList, Dimacs };

// Edge-list text: '#' comment lines, "u v" per edge, "n <label>" for
// isolated vertices.
Graph read_edge_list(std::istream& in);

// DIMACS: "c" comments, "p edge <n> <m>" header, "e <u> <v>" lines with
// 1-based labels. The declared edge count is not enforced.
Graph read_dimacs(std::istream& in);

// Format from the override, else by extension (.col -> DIMACS).
Graph read_graph_file(const std::string& path,
                      std::optional<FileFormat> format = std::nullopt);

// Writers are byte-deterministic: sorted edges, lowest endpoint first.
// The DIMACS writer maps labels to their 1-based ranks.
std::string write_edge_list(const Graph& g);
std::string write_dimacs(const Graph& g);

nlohmann::json certificate_to_json(const ChordalityCertificate& cert);
ChordalityCertificate certificate_from_json(const nlohmann::json& j);

} // namespace chordalkit

#endif
