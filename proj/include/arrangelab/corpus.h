#pragma once

#include <cstdint>
#include <vector>

#include "arrangelab/graph.h"

namespace arrangelab {

/// Relabelling of g that is identical for isomorphic graphs (n ≤ 10).
/// Throws BoundExceeded for larger graphs.
Graph canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// All graphs on exactly n vertices up to isomorphism, canonically labelled,
/// ordered by edge count then graph6. Built by vertex augmentation; n ≤ 9.
std::vector<Graph> all_graphs(int n);

/// The connected ones (1, 1, 2, 6, 21, 112, 853 for n = 1..7).
std::vector<Graph> connected_graphs(int n);

}  // namespace arrangelab
