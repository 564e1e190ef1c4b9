#pragma once

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

namespace comaximal {

using VertexSet = boost::dynamic_bitset<>;

/// Finite simple graph with stable, unique vertex labels. Adjacency is kept
/// as one bitset row per vertex; rows stay symmetric and irreflexive.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> labels);
  /// Bulk construction from prebuilt adjacency rows (one bitset of size
  /// labels.size() per vertex). Validates shape, symmetry and irreflexivity.
  Graph(std::vector<std::string> labels, std::vector<VertexSet> adjacency);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  long edge_count() const { return edges_; }

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// -1 when absent.
  int vertex_by_label(const std::string& label) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  Graph complement() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexSet> adj_;
  long edges_ = 0;
};

/// Degrees sorted ascending.
std::vector<int> degree_sequence(const Graph& g);

}  // namespace comaximal
