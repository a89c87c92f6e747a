#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arrangelab/graph.h"

namespace arrangelab {

/// Edge-list text: one "u v" pair per line, 1-based. Blank lines and lines
/// starting with '#' are ignored, as is anything after '#'. The vertex count
/// is the largest label seen.
Graph parse_edge_list(std::string_view text);

std::string write_edge_list(const Graph& g);

/// Standard graph6 (optionally prefixed with ">>graph6<<"). Vertex k of the
/// encoding becomes vertex k+1.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

/// All non-empty, non-comment graph6 lines of a corpus file.
std::vector<Graph> parse_graph6_corpus(std::string_view text);

/// True when the first data line starts with two integers.
bool looks_like_edge_list(std::string_view text);

}  // namespace arrangelab
