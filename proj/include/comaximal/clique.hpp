#pragma once

#include <vector>

#include "comaximal/graph.hpp"

namespace comaximal {

/// Budget for exact clique/independence search, counted in branch-and-bound
/// node expansions. Exceeding it raises BudgetError; the search never returns
/// an approximate answer.
inline constexpr long long kDefaultSearchBudget = 10'000'000;

/// Exact maximum clique via branch and bound with greedy-coloring bounds.
/// Deterministic: candidates are expanded in a fixed color order with
/// ascending-index tie-breaking, so the returned clique is reproducible.
std::vector<int> max_clique(const Graph& g, long long budget = kDefaultSearchBudget);

/// Exact maximum independent set: maximum clique of the complement.
std::vector<int> max_independent_set(const Graph& g, long long budget = kDefaultSearchBudget);

int clique_number(const Graph& g, long long budget = kDefaultSearchBudget);
int independence_number(const Graph& g, long long budget = kDefaultSearchBudget);

}  // namespace comaximal
