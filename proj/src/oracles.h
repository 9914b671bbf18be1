#pragma once

#include <optional>

#include "graph.h"

namespace gridsat {

/// Exact pathwidth by dynamic programming over vertex subsets. Limited to n <= 9.
int oraclePathwidth(const Graph& g);

/// Exact bandwidth by trying every vertex ordering. Limited to n <= 9.
int oracleBandwidth(const Graph& g);

/// Fewest levels over all valid st-orientations, or nullopt if none exists.
/// Tries every orientation of the edge set. Limited to m <= 22.
std::optional<int> oracleStLevels(const Graph& g, int s, int t);

/// Whether g is the intersection graph of boxes in [1,side]^dim.
/// Exhaustive over box placements. Limited to n <= 4, side <= 4, dim <= 2.
bool oracleBoxicityFeasible(const Graph& g, int dim, int side);

}  // namespace gridsat
