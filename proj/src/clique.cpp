#include "comaximal/clique.hpp"

#include <algorithm>

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

// Branch and bound in the style of Tomita et al.: at each node the candidate
// set is greedily colored; candidates are expanded from the highest color
// class down, and a branch is cut once |R| + color can no longer beat the
// incumbent. Colors and candidates are always scanned in ascending vertex
// order, which makes the incumbent deterministic.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, long long budget) : g_(g), budget_(budget) {}

  std::vector<int> run() {
    const int n = g_.vertex_count();
    if (n == 0) return {};
    VertexSet all(n);
    all.set();
    std::vector<int> r;
    expand(r, all);
    return best_;
  }

 private:
  void expand(std::vector<int>& r, const VertexSet& candidates) {
    if (++nodes_ > budget_)
      throw BudgetError("clique search exceeded budget of " + std::to_string(budget_) +
                        " nodes");
    if (candidates.none()) {
      if (r.size() > best_.size()) best_ = r;
      return;
    }
    // Greedy coloring of the candidate set.
    std::vector<int> order, color;
    VertexSet uncolored = candidates;
    int c = 0;
    while (uncolored.any()) {
      ++c;
      VertexSet cls = uncolored;
      while (cls.any()) {
        const int v = static_cast<int>(cls.find_first());
        order.push_back(v);
        color.push_back(c);
        uncolored.reset(v);
        cls.reset(v);
        cls -= g_.neighbors(v);
      }
    }
    VertexSet p = candidates;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (static_cast<long long>(r.size()) + color[i] <= static_cast<long long>(best_.size()))
        return;  // every remaining candidate has an equal or smaller color
      const int v = order[i];
      r.push_back(v);
      expand(r, p & g_.neighbors(v));
      r.pop_back();
      p.reset(v);
    }
  }

  const Graph& g_;
  const long long budget_;
  long long nodes_ = 0;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> max_clique(const Graph& g, long long budget) {
  return CliqueSearch(g, budget).run();
}

std::vector<int> max_independent_set(const Graph& g, long long budget) {
  return max_clique(g.complement(), budget);
}

int clique_number(const Graph& g, long long budget) {
  return static_cast<int>(max_clique(g, budget).size());
}

int independence_number(const Graph& g, long long budget) {
  return static_cast<int>(max_independent_set(g, budget).size());
}

}  // namespace comaximal
