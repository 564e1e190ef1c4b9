#include "comaximal/planarity.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

constexpr int NONE = -1;

// ---------------------------------------------------------------------------
// Left-right planarity. Phases: DFS orientation (lowpoints, nesting depth),
// constraint testing over a stack of conflict pairs, then sign resolution and
// half-edge insertion to produce a clockwise rotation system. All DFS loops
// are iterative with explicit resumption state so deep graphs cannot
// overflow the call stack.
// ---------------------------------------------------------------------------

struct Interval {
  int low = NONE, high = NONE;
  bool empty() const { return low == NONE && high == NONE; }
};

struct ConflictPair {
  Interval L, R;
};

class LRPlanarity {
 public:
  // adj must hold each vertex's neighbors in ascending order.
  LRPlanarity(int n, std::vector<std::vector<int>> adj, long long edge_count)
      : n_(n), adjs_(std::move(adj)), m_(edge_count) {}

  // False when nonplanar. When planar and rot is non-null, fills the
  // clockwise rotation per vertex.
  bool run(RotationSystem* rot);

 private:
  void dfs_orientation(int root);
  bool dfs_testing(int root);
  bool add_constraints(int ei, int e);
  void remove_back_edges(int e);
  bool conflicting(const Interval& i, int b) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[b];
  }
  int lowest(const ConflictPair& p) const {
    if (p.L.empty()) return lowpt_[p.R.low];
    if (p.R.empty()) return lowpt_[p.L.low];
    return std::min(lowpt_[p.L.low], lowpt_[p.R.low]);
  }
  int resolve_sign(int e);

  int half_of(int a, int b) const {
    return half_map_.at(static_cast<long long>(a) * n_ + b);
  }
  int end_of(int h) const { return (h & 1) ? from_[h >> 1] : to_[h >> 1]; }
  void he_init(int v, int h) {
    cw_[h] = h;
    ccw_[h] = h;
    first_[v] = h;
  }
  void add_half_edge_cw(int v, int w, int ref_vertex);
  void add_half_edge_ccw(int v, int w, int ref_vertex);
  void add_half_edge_first(int v, int w);
  void dfs_embedding(int root);

  int n_;
  std::vector<std::vector<int>> adjs_;
  long long m_;

  std::vector<int> roots_;
  std::vector<int> height_, parent_edge_;
  std::unordered_set<long long> oriented_;  // undirected keys already given a direction
  std::vector<int> from_, to_;              // per oriented edge id
  std::vector<int> lowpt_, lowpt2_, nesting_, ref_, side_;
  std::vector<std::vector<int>> out_;      // oriented out-edge ids per vertex
  std::vector<std::vector<int>> ordered_;  // out_ sorted by nesting depth

  // Per-vertex DFS resumption state, reused across phases.
  std::vector<int> ind_, pending_;
  std::vector<char> skip_init_;

  std::vector<ConflictPair> S_;
  std::vector<int> stack_bottom_, lowpt_edge_;

  std::unordered_map<long long, int> half_map_;
  std::vector<int> cw_, ccw_, first_, left_ref_, right_ref_;
};

void LRPlanarity::dfs_orientation(int root) {
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const int e = parent_edge_[v];
    bool descended = false;
    while (ind_[v] < static_cast<int>(adjs_[v].size())) {
      const int w = adjs_[v][ind_[v]];
      int ei;
      if (!skip_init_[v]) {
        const long long key = static_cast<long long>(std::min(v, w)) * n_ + std::max(v, w);
        if (oriented_.count(key)) {  // seen from the other endpoint
          ++ind_[v];
          continue;
        }
        oriented_.insert(key);
        ei = static_cast<int>(from_.size());
        from_.push_back(v);
        to_.push_back(w);
        lowpt_.push_back(height_[v]);
        lowpt2_.push_back(height_[v]);
        nesting_.push_back(0);
        ref_.push_back(NONE);
        side_.push_back(1);
        out_[v].push_back(ei);
        if (height_[w] == NONE) {  // tree edge: descend, revisit v afterwards
          parent_edge_[w] = ei;
          height_[w] = height_[v] + 1;
          pending_[v] = ei;
          skip_init_[v] = true;
          stack.push_back(v);
          stack.push_back(w);
          descended = true;
          break;
        }
        lowpt_[ei] = height_[w];  // back edge
      } else {  // resuming the tree edge whose subtree just finished
        ei = pending_[v];
        skip_init_[v] = false;
      }
      nesting_[ei] = 2 * lowpt_[ei] + (lowpt2_[ei] < height_[v] ? 1 : 0);
      if (e != NONE) {  // fold this edge's lowpoints into the parent edge
        if (lowpt_[ei] < lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
          lowpt_[e] = lowpt_[ei];
        } else if (lowpt_[ei] > lowpt_[e]) {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
        } else {
          lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
        }
      }
      ++ind_[v];
    }
    (void)descended;
  }
}

bool LRPlanarity::dfs_testing(int root) {
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const int e = parent_edge_[v];
    bool skip_final = false;
    while (ind_[v] < static_cast<int>(ordered_[v].size())) {
      const int ei = ordered_[v][ind_[v]];
      const int w = to_[ei];
      if (!skip_init_[v]) {
        stack_bottom_[ei] = static_cast<int>(S_.size());
        if (ei == parent_edge_[w]) {  // tree edge: descend first
          pending_[v] = ei;
          skip_init_[v] = true;
          skip_final = true;
          stack.push_back(v);
          stack.push_back(w);
          break;
        }
        lowpt_edge_[ei] = ei;  // back edge: own one-interval conflict pair
        S_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
      } else {
        skip_init_[v] = false;
      }
      if (lowpt_[ei] < height_[v]) {  // ei has a return edge below v
        if (ei == ordered_[v][0]) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
      ++ind_[v];
    }
    if (!skip_final && e != NONE) remove_back_edges(e);
  }
  return true;
}

bool LRPlanarity::add_constraints(int ei, int e) {
  ConflictPair P;
  // Merge the return edges of ei into P.R.
  do {
    ConflictPair Q = S_.back();
    S_.pop_back();
    if (!Q.L.empty()) std::swap(Q.L, Q.R);
    if (!Q.L.empty()) return false;  // two constrained sides
    if (lowpt_[Q.R.low] > lowpt_[e]) {  // interval stays relevant: merge
      if (P.R.empty())
        P.R = Q.R;
      else
        ref_[P.R.low] = Q.R.high;
      P.R.low = Q.R.low;
    } else {  // align with the parent's lowpoint edge
      ref_[Q.R.low] = lowpt_edge_[e];
    }
  } while (static_cast<int>(S_.size()) != stack_bottom_[ei]);
  // Merge conflicting return edges of earlier siblings into P.L.
  while (!S_.empty() && (conflicting(S_.back().L, ei) || conflicting(S_.back().R, ei))) {
    ConflictPair Q = S_.back();
    S_.pop_back();
    if (conflicting(Q.R, ei)) std::swap(Q.L, Q.R);
    if (conflicting(Q.R, ei)) return false;  // both sides conflict
    if (P.R.low != NONE) ref_[P.R.low] = Q.R.high;
    if (Q.R.low != NONE) P.R.low = Q.R.low;
    if (P.L.empty())
      P.L = Q.L;
    else
      ref_[P.L.low] = Q.L.high;
    P.L.low = Q.L.low;
  }
  if (!(P.L.empty() && P.R.empty())) S_.push_back(P);
  return true;
}

void LRPlanarity::remove_back_edges(int e) {
  const int u = from_[e];
  // Drop conflict pairs whose return edges all end at u.
  while (!S_.empty() && lowest(S_.back()) == height_[u]) {
    const ConflictPair P = S_.back();
    S_.pop_back();
    if (P.L.low != NONE) side_[P.L.low] = -1;
  }
  if (!S_.empty()) {  // trim the top pair's intervals
    ConflictPair P = S_.back();
    S_.pop_back();
    while (P.L.high != NONE && to_[P.L.high] == u) P.L.high = ref_[P.L.high];
    if (P.L.high == NONE && P.L.low != NONE) {  // just emptied
      ref_[P.L.low] = P.R.low;
      side_[P.L.low] = -1;
      P.L.low = NONE;
    }
    while (P.R.high != NONE && to_[P.R.high] == u) P.R.high = ref_[P.R.high];
    if (P.R.high == NONE && P.R.low != NONE) {  // just emptied
      ref_[P.R.low] = P.L.low;
      side_[P.R.low] = -1;
      P.R.low = NONE;
    }
    S_.push_back(P);
  }
  if (lowpt_[e] < height_[u] && !S_.empty()) {  // e has a return edge
    const int hl = S_.back().L.high;
    const int hr = S_.back().R.high;
    if (hl != NONE && (hr == NONE || lowpt_[hl] > lowpt_[hr]))
      ref_[e] = hl;
    else
      ref_[e] = hr;
  }
}

int LRPlanarity::resolve_sign(int e) {
  // Follow the ref chain, then fold sides back deepest-first; resolved edges
  // keep ref == NONE so shared chain tails are reused, not recomputed.
  std::vector<int> chain;
  int cur = e;
  while (ref_[cur] != NONE) {
    chain.push_back(cur);
    cur = ref_[cur];
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    side_[*it] *= side_[ref_[*it]];
    ref_[*it] = NONE;
  }
  return side_[e];
}

void LRPlanarity::add_half_edge_cw(int v, int w, int ref_vertex) {
  const int h = half_of(v, w);
  if (ref_vertex == NONE) {
    he_init(v, h);
    return;
  }
  const int hr = half_of(v, ref_vertex);
  const int hn = cw_[hr];
  cw_[hr] = h;
  ccw_[h] = hr;
  cw_[h] = hn;
  ccw_[hn] = h;
}

void LRPlanarity::add_half_edge_ccw(int v, int w, int ref_vertex) {
  if (ref_vertex == NONE) {
    he_init(v, half_of(v, w));
    return;
  }
  const int h = half_of(v, w);
  const int hr = half_of(v, ref_vertex);
  const int hp = ccw_[hr];
  cw_[hp] = h;
  ccw_[h] = hp;
  cw_[h] = hr;
  ccw_[hr] = h;
  if (first_[v] == hr) first_[v] = h;
}

void LRPlanarity::add_half_edge_first(int v, int w) {
  if (first_[v] == NONE)
    he_init(v, half_of(v, w));
  else
    add_half_edge_ccw(v, w, end_of(first_[v]));
}

void LRPlanarity::dfs_embedding(int root) {
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    while (ind_[v] < static_cast<int>(ordered_[v].size())) {
      const int ei = ordered_[v][ind_[v]];
      ++ind_[v];
      const int w = to_[ei];
      if (ei == parent_edge_[w]) {  // tree edge
        add_half_edge_first(w, v);
        left_ref_[v] = w;
        right_ref_[v] = w;
        stack.push_back(v);
        stack.push_back(w);
        break;
      }
      if (side_[ei] == 1) {  // back edge on the right side
        add_half_edge_cw(w, v, right_ref_[w]);
      } else {  // left side
        add_half_edge_ccw(w, v, left_ref_[w]);
        left_ref_[w] = v;
      }
    }
  }
}

bool LRPlanarity::run(RotationSystem* rot) {
  if (n_ > 2 && m_ > 3LL * n_ - 6) return false;  // density bound

  height_.assign(n_, NONE);
  parent_edge_.assign(n_, NONE);
  out_.assign(n_, {});
  ind_.assign(n_, 0);
  pending_.assign(n_, NONE);
  skip_init_.assign(n_, 0);
  for (int v = 0; v < n_; ++v) {
    if (height_[v] != NONE) continue;
    height_[v] = 0;
    roots_.push_back(v);
    dfs_orientation(v);
  }

  ordered_.assign(n_, {});
  for (int v = 0; v < n_; ++v) {
    ordered_[v] = out_[v];
    std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                     [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }
  const int m = static_cast<int>(from_.size());
  stack_bottom_.assign(m, 0);
  lowpt_edge_.assign(m, NONE);
  ind_.assign(n_, 0);
  skip_init_.assign(n_, 0);
  for (int r : roots_)
    if (!dfs_testing(r)) return false;

  if (!rot) return true;

  for (int e = 0; e < m; ++e) nesting_[e] *= resolve_sign(e);
  for (int v = 0; v < n_; ++v) {
    ordered_[v] = out_[v];
    std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                     [&](int a, int b) { return nesting_[a] < nesting_[b]; });
  }

  half_map_.reserve(2 * m);
  for (int e = 0; e < m; ++e) {
    half_map_[static_cast<long long>(from_[e]) * n_ + to_[e]] = 2 * e;
    half_map_[static_cast<long long>(to_[e]) * n_ + from_[e]] = 2 * e + 1;
  }
  cw_.assign(2 * m, NONE);
  ccw_.assign(2 * m, NONE);
  first_.assign(n_, NONE);
  left_ref_.assign(n_, NONE);
  right_ref_.assign(n_, NONE);
  for (int v = 0; v < n_; ++v) {  // initial rotation: out-edges by nesting depth
    int prev = NONE;
    for (int ei : ordered_[v]) {
      add_half_edge_cw(v, to_[ei], prev);
      prev = to_[ei];
    }
  }
  ind_.assign(n_, 0);
  for (int r : roots_) dfs_embedding(r);

  rot->order.assign(n_, {});
  for (int v = 0; v < n_; ++v) {
    if (first_[v] == NONE) continue;
    int h = first_[v];
    do {
      rot->order[v].push_back(end_of(h));
      h = cw_[h];
    } while (h != first_[v]);
  }
  return true;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& row = g.neighbors(v);
    for (auto u = row.find_first(); u != VertexSet::npos; u = row.find_next(u))
      adj[v].push_back(static_cast<int>(u));
  }
  return adj;
}

bool lr_planar_graph(const Graph& g, RotationSystem* rot) {
  return LRPlanarity(g.vertex_count(), adjacency_lists(g), g.edge_count()).run(rot);
}

bool lr_planar_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());
  return LRPlanarity(n, std::move(adj), static_cast<long long>(edges.size())).run(nullptr);
}

// ---------------------------------------------------------------------------
// Witness extraction and verification.
// ---------------------------------------------------------------------------

// Classify an edge-minimal nonplanar graph, given as its surviving edges:
// the edge set is exactly a K5 or K33 subdivision.
std::optional<SubdivisionWitness> classify_subdivision(
    int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& l : adj) std::sort(l.begin(), l.end());

  std::vector<int> branch;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() >= 3) branch.push_back(v);

  WitnessKind kind;
  if (branch.size() == 5 &&
      std::all_of(branch.begin(), branch.end(), [&](int b) { return adj[b].size() == 4; }))
    kind = WitnessKind::K5;
  else if (branch.size() == 6 &&
           std::all_of(branch.begin(), branch.end(), [&](int b) { return adj[b].size() == 3; }))
    kind = WitnessKind::K33;
  else
    return std::nullopt;  // not a clean subdivision; minimization failed

  std::vector<char> is_branch(n, 0);
  for (int b : branch) is_branch[b] = 1;

  // Walk every chain of degree-2 vertices between branch vertices; each
  // chain is found twice, keep the walk from its smaller endpoint.
  std::map<std::pair<int, int>, std::vector<int>> chain;
  for (int b : branch) {
    for (int x : adj[b]) {
      std::vector<int> path{b};
      int prev = b, cur = x;
      while (!is_branch[cur]) {
        path.push_back(cur);
        const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
      }
      path.push_back(cur);
      if (b > cur) continue;
      const auto key = std::make_pair(b, cur);
      if (chain.count(key)) return std::nullopt;  // parallel chains: not a subdivision
      chain[key] = std::move(path);
    }
  }

  SubdivisionWitness w;
  w.kind = kind;
  if (kind == WitnessKind::K5) {
    w.branch_vertices = branch;  // already ascending
  } else {
    // Two-color the branch-level graph; the side of the smallest branch
    // vertex comes first, both sides ascending.
    std::map<int, std::vector<int>> badj;
    for (const auto& [key, path] : chain) {
      badj[key.first].push_back(key.second);
      badj[key.second].push_back(key.first);
    }
    std::map<int, int> color;
    std::vector<int> queue{branch[0]};
    color[branch[0]] = 0;
    while (!queue.empty()) {
      const int v = queue.back();
      queue.pop_back();
      for (int u : badj[v]) {
        if (color.count(u)) {
          if (color[u] == color[v]) return std::nullopt;  // odd cycle: not K33
          continue;
        }
        color[u] = 1 - color[v];
        queue.push_back(u);
      }
    }
    std::vector<int> a, b;
    for (int v : branch) (color[v] == 0 ? a : b).push_back(v);
    if (a.size() != 3 || b.size() != 3) return std::nullopt;
    w.branch_vertices = a;
    w.branch_vertices.insert(w.branch_vertices.end(), b.begin(), b.end());
  }

  for (auto [i, j] : witness_pairs(kind)) {
    const int a = w.branch_vertices[i];
    const int b = w.branch_vertices[j];
    const auto key = std::make_pair(std::min(a, b), std::max(a, b));
    auto it = chain.find(key);
    if (it == chain.end()) return std::nullopt;
    std::vector<int> path = it->second;
    if (path.front() != a) std::reverse(path.begin(), path.end());
    w.paths.push_back(std::move(path));
  }
  return w;
}

}  // namespace

std::string to_string(WitnessKind kind) { return kind == WitnessKind::K5 ? "K5" : "K33"; }

std::vector<std::pair<int, int>> witness_pairs(WitnessKind kind) {
  std::vector<std::pair<int, int>> pairs;
  if (kind == WitnessKind::K5) {
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.emplace_back(i, j);
  } else {
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::optional<SubdivisionWitness> find_kuratowski(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges = g.edges();
  if (lr_planar_edges(n, edges)) return std::nullopt;
  // One deletion pass in ascending edge order: drop an edge whenever the
  // graph stays nonplanar without it. Every kept edge was critical against a
  // superset of the final graph, hence critical in it, so what survives is
  // an edge-minimal nonplanar graph: exactly a Kuratowski subdivision.
  std::size_t i = 0;
  while (i < edges.size()) {
    std::vector<std::pair<int, int>> rest;
    rest.reserve(edges.size() - 1);
    rest.insert(rest.end(), edges.begin(), edges.begin() + i);
    rest.insert(rest.end(), edges.begin() + i + 1, edges.end());
    if (!lr_planar_edges(n, rest))
      edges = std::move(rest);
    else
      ++i;
  }
  return classify_subdivision(n, edges);
}

PlanarityResult is_planar(const Graph& g, bool want_witness, int witness_cap) {
  PlanarityResult res;
  RotationSystem rot;
  if (lr_planar_graph(g, &rot)) {
    res.planar = true;
    res.embedding = std::move(rot);
    return res;
  }
  res.planar = false;
  if (want_witness && g.vertex_count() <= witness_cap) res.witness = find_kuratowski(g);
  return res;
}

bool verify_witness(const Graph& g, const SubdivisionWitness& w, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = g.vertex_count();
  const std::size_t want_branch = w.kind == WitnessKind::K5 ? 5 : 6;
  if (w.branch_vertices.size() != want_branch) return fail("wrong branch vertex count");
  std::set<int> branch_set(w.branch_vertices.begin(), w.branch_vertices.end());
  if (branch_set.size() != want_branch) return fail("duplicate branch vertex");
  for (int b : w.branch_vertices)
    if (b < 0 || b >= n) return fail("branch vertex out of range");

  const auto pairs = witness_pairs(w.kind);
  if (w.paths.size() != pairs.size()) return fail("wrong path count");

  std::set<int> interior_seen;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& path = w.paths[k];
    const int a = w.branch_vertices[pairs[k].first];
    const int b = w.branch_vertices[pairs[k].second];
    if (path.size() < 2) return fail("path too short");
    const bool forward = path.front() == a && path.back() == b;
    const bool backward = path.front() == b && path.back() == a;
    if (!forward && !backward) return fail("path endpoints do not match branch pair");
    std::set<int> in_path;
    for (std::size_t t = 0; t < path.size(); ++t) {
      const int v = path[t];
      if (v < 0 || v >= n) return fail("path vertex out of range");
      if (!in_path.insert(v).second) return fail("repeated vertex within a path");
      if (t > 0 && !g.has_edge(path[t - 1], v)) return fail("path uses a missing edge");
      if (t == 0 || t + 1 == path.size()) continue;
      if (branch_set.count(v)) return fail("path passes through a branch vertex");
      if (!interior_seen.insert(v).second) return fail("paths share an interior vertex");
    }
  }
  return true;
}

bool validate_embedding(const Graph& g, const RotationSystem& rot, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = g.vertex_count();
  if (static_cast<int>(rot.order.size()) != n) return fail("rotation count != vertex count");

  // Each rotation must list exactly the vertex's neighbors, once each.
  std::vector<std::unordered_map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rot.order[v].size()) != g.degree(v))
      return fail("rotation length != degree");
    for (std::size_t i = 0; i < rot.order[v].size(); ++i) {
      const int u = rot.order[v][i];
      if (u < 0 || u >= n || !g.has_edge(v, u)) return fail("rotation lists a non-neighbor");
      if (!pos[v].emplace(u, static_cast<int>(i)).second)
        return fail("rotation repeats a neighbor");
    }
  }

  // Face tracing: the successor of dart (v, w) is (w, x) with x the
  // counterclockwise next neighbor after v at w. Count dart orbits.
  const auto edges = g.edges();
  const long long dart_count = 2LL * static_cast<long long>(edges.size());
  std::unordered_map<long long, int> dart_id;
  dart_id.reserve(dart_count);
  std::vector<std::pair<int, int>> darts;
  darts.reserve(dart_count);
  for (auto [u, v] : edges) {
    dart_id[static_cast<long long>(u) * n + v] = static_cast<int>(darts.size());
    darts.emplace_back(u, v);
    dart_id[static_cast<long long>(v) * n + u] = static_cast<int>(darts.size());
    darts.emplace_back(v, u);
  }
  auto successor = [&](int d) {
    const auto [v, w] = darts[d];
    const int deg = static_cast<int>(rot.order[w].size());
    const int i = pos[w].at(v);
    const int x = rot.order[w][(i - 1 + deg) % deg];  // ccw next at w
    return dart_id.at(static_cast<long long>(w) * n + x);
  };
  long long faces = 0;
  std::vector<char> seen(darts.size(), 0);
  for (int d = 0; d < static_cast<int>(darts.size()); ++d) {
    if (seen[d]) continue;
    ++faces;
    int cur = d;
    long long steps = 0;
    while (!seen[cur]) {
      seen[cur] = 1;
      cur = successor(cur);
      if (++steps > dart_count) return fail("face tracing does not close");
    }
    if (cur != d) return fail("face tracing re-enters a traced face");
  }

  // Per-component Euler formula over components that contain an edge.
  std::vector<int> comp(n, -1);
  int edgeful_components = 0;
  long long non_isolated = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] != -1 || g.degree(v) == 0) continue;
    ++edgeful_components;
    std::vector<int> queue{v};
    comp[v] = v;
    while (!queue.empty()) {
      const int x = queue.back();
      queue.pop_back();
      ++non_isolated;
      const auto& row = g.neighbors(x);
      for (auto u = row.find_first(); u != VertexSet::npos; u = row.find_next(u))
        if (comp[u] == -1) {
          comp[u] = v;
          queue.push_back(static_cast<int>(u));
        }
    }
  }
  const long long expected = static_cast<long long>(edges.size()) - non_isolated +
                             2LL * edgeful_components;
  if (faces != expected)
    return fail("face count " + std::to_string(faces) + " != expected " +
                std::to_string(expected));
  return true;
}

}  // namespace comaximal
