#include "comaximal/graph_props.hpp"

#include <algorithm>

namespace comaximal {

std::vector<int> universal_vertices(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == g.vertex_count() - 1) out.push_back(v);
  return out;
}

bool is_star(const Graph& g) {
  // A universal vertex accounts for |V|-1 edges, so |E| == |V|-1 forces the
  // remaining vertices to be pairwise non-adjacent.
  return g.vertex_count() >= 2 && g.edge_count() == g.vertex_count() - 1 &&
         !universal_vertices(g).empty();
}

std::optional<std::pair<int, int>> is_complete_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) return std::nullopt;
  std::vector<int> color(n, -1);
  std::vector<int> queue{0};
  color[0] = 0;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    const auto& row = g.neighbors(v);
    for (auto u = row.find_first(); u != VertexSet::npos; u = row.find_next(u)) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        ++reached;
        queue.push_back(static_cast<int>(u));
      } else if (color[u] == color[v]) {
        return std::nullopt;  // odd cycle
      }
    }
  }
  if (reached != n) return std::nullopt;  // disconnected
  const long long m = std::count(color.begin(), color.end(), 0);
  const long long k = n - m;
  if (g.edge_count() != m * k) return std::nullopt;  // some cross pair missing
  return std::make_pair(static_cast<int>(std::min(m, k)), static_cast<int>(std::max(m, k)));
}

}  // namespace comaximal
