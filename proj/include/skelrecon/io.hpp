#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "skelrecon/graph.hpp"
#include "skelrecon/lattice.hpp"

namespace skelrecon {

// Text formats. Every format is line based; `#` starts a comment line and
// blank lines are skipped. All parse failures throw ParseError with the line
// number.
//
//   incidence:  d <dim> / vertices <n> / facet <v...>
//   skeleton:   d <dim> / vertices <n> / edge <u> <v> / face<r> <v...>
//   edge list:  [d <dim>] [vertices <n>] / edge <u> <v>

PolytopeSpec parse_incidence(std::string_view text);

/// Canonical form: facets sorted, one per line, LF endings.
std::string write_incidence(const PolytopeSpec& spec);

/// Faces of rank >= 2 come from `face<r>` lines; k is the largest rank seen
/// (2 when there are none).
KSkeleton parse_skeleton(std::string_view text);
std::string write_skeleton(const KSkeleton& sk);

struct EdgeList {
  Graph graph;
  std::optional<int> d;
};

/// Without a `vertices` line, n is one more than the largest id.
EdgeList parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g, std::optional<int> d = std::nullopt);

/// Whole file as a string; ParseError when it cannot be read.
std::string read_file(const std::string& path);

}  // namespace skelrecon
