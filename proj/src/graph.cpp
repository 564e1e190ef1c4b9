#include "comaximal/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "comaximal/errors.hpp"

namespace comaximal {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw InvalidArgument("Graph: duplicate vertex label " + l);
  adj_.assign(labels_.size(), VertexSet(labels_.size()));
}

Graph::Graph(std::vector<std::string> labels, std::vector<VertexSet> adjacency)
    : Graph(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (adjacency.size() != n) throw InvalidArgument("Graph: adjacency row count mismatch");
  long long twice = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (adjacency[v].size() != n) throw InvalidArgument("Graph: adjacency row size mismatch");
    if (adjacency[v].test(v)) throw InvalidArgument("Graph: self-loop");
    twice += static_cast<long long>(adjacency[v].count());
  }
  for (std::size_t v = 0; v < n; ++v)
    for (auto u = adjacency[v].find_first(); u != VertexSet::npos; u = adjacency[v].find_next(u))
      if (!adjacency[u].test(v)) throw InvalidArgument("Graph: asymmetric adjacency");
  adj_ = std::move(adjacency);
  edges_ = static_cast<long>(twice / 2);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw InvalidArgument("Graph::add_edge: vertex out of range");
  if (u == v) throw InvalidArgument("Graph::add_edge: self-loop");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++edges_;
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < vertex_count(); ++v)
    if (labels_[v] == label) return v;
  return -1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < vertex_count(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;  // already sorted by construction
}

Graph Graph::complement() const {
  Graph g(labels_);
  for (int u = 0; u < vertex_count(); ++u) {
    g.adj_[u] = adj_[u];
    g.adj_[u].flip();
    g.adj_[u].reset(u);
  }
  long total = static_cast<long>(vertex_count()) * (vertex_count() - 1) / 2;
  g.edges_ = total - edges_;
  return g;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degs;
  degs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) degs.push_back(g.degree(v));
  std::sort(degs.begin(), degs.end());
  return degs;
}

}  // namespace comaximal
