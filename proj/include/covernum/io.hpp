#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "covernum/graph.hpp"

namespace covernum {

enum class GraphFormat { graph6, edge_list, dimacs };

/// graph6 per McKay's format description. An optional ">>graph6<<" header and
/// one trailing newline are accepted; anything else after the bit field is an error.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

/// Header line "n m" followed by exactly m lines "u v" (0-based).
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// DIMACS col: "c" comments, one "p edge n m" line, m lines "e u v" (1-based).
Graph parse_dimacs(std::string_view text);

/// "p edge" (after comments) means DIMACS, a first line of two integers means
/// edge list, everything else is taken as graph6.
GraphFormat detect_format(std::string_view text);
Graph read_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);

std::optional<GraphFormat> format_from_name(std::string_view name);

}  // namespace covernum
