#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "comaximal/graph.hpp"

namespace comaximal {

/// Vertices of degree |V|-1, ascending.
std::vector<int> universal_vertices(const Graph& g);

/// True iff g is a star K_{1,k} with k >= 1: at least two vertices, some
/// universal vertex, and no edges outside that vertex (equivalently,
/// |E| == |V|-1 with a universal vertex present). K_{1,1} counts as a star;
/// single-vertex and empty graphs do not.
bool is_star(const Graph& g);

/// When g is a complete bipartite graph K_{m,n} (connected, so m, n >= 1),
/// returns (m, n) with m <= n; otherwise nullopt.
std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g);

}  // namespace comaximal
