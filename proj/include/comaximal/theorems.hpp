#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comaximal/clique.hpp"
#include "comaximal/factor_model.hpp"
#include "comaximal/planarity.hpp"

namespace comaximal {

/// Per-entry resource limits for classification runs.
struct SweepCaps {
  int ring_order_cap = kDefaultOrderCap;
  int graph_vertex_cap = kDefaultGraphCap;
  int witness_cap = kDefaultWitnessCap;
  long long search_budget = kDefaultSearchBudget;
};

/// The modeled graph has a universal vertex iff the ring is a local ring
/// times a field: n == 2 with some field factor.
bool predicate_universal(const ProductRingSpec& spec);

/// The modeled graph is a star iff n == 2 with some field factor (the
/// two-vertex, one-edge case counts as a star).
bool predicate_star(const ProductRingSpec& spec);

/// The modeled graph is planar iff n == 1 (empty graph), or n == 2 with
/// min(c) <= 2 (the graph is K_{c1,c2}), or n == 3 with at least two field
/// factors and the third factor having at most one nontrivial ideal
/// (sorted counts (1,1,1) or (1,1,2)). Never planar for n >= 4.
bool predicate_planar(const ProductRingSpec& spec);

/// For n >= 4 the graph always contains this explicit K33: one side takes
/// the codes that are the zero ideal on coordinate 1, on coordinate 2, and
/// on both; the other side does the same on coordinates 3 and 4. All nine
/// cross pairs are edges, so every path is a single edge. Branch vertices
/// are ids into build_graph(spec). Throws InvalidArgument when n < 4.
SubdivisionWitness construct_k33_witness(const ProductRingSpec& spec);

enum class EntryStatus { Ok, Capacity, Budget, Aborted };

std::string to_string(EntryStatus status);

/// Everything measured and predicted for one spec. Agreement flags compare
/// the algorithmic result on the built graph with the closed-form predicate.
struct ClassificationReport {
  ProductRingSpec spec;
  EntryStatus status = EntryStatus::Ok;
  std::string note;  // failure detail for capacity/budget entries

  long long vertices = 0;
  long long edges = 0;
  int omega = -1;
  int alpha = -1;
  std::vector<int> degree_seq;
  bool planar = false, universal = false, star = false;
  bool predicted_planar = false, predicted_universal = false, predicted_star = false;

  bool agree_planar = false, agree_universal = false, agree_star = false;
  bool counts_ok = false;     // vertex/edge/degree closed forms match the graph
  bool omega_ok = false;      // omega == n when n >= 2 (vacuous for n == 1)
  bool embedding_ok = false;  // planar entries: rotation system validates
  bool witness_ok = false;    // nonplanar entries: required witness verifies
  std::optional<SubdivisionWitness> witness;

  /// True when the entry completed and every check above agrees, or when it
  /// was cut short by a cap (capacity/budget entries are not failures).
  bool all_ok() const;
};

/// All canonical specs with 1 <= n <= max_n factors and 1 <= c_i <= max_c,
/// as nondecreasing count tuples: n ascending, then lexicographic.
std::vector<std::vector<int>> canonical_specs(int max_n, int max_c);

/// Build the graph for one spec and measure everything against the
/// predicates and closed forms. Capacity/budget overruns are recorded in the
/// status, never thrown.
ClassificationReport classify_spec(const ProductRingSpec& spec, const SweepCaps& caps);

/// Cross-engine check for one modulus: the concrete co-maximal graph of Z/n
/// must equal the factor-model graph of its decomposition, vertex for vertex
/// and edge for edge, under the coordinate bijection.
struct ZmodCheck {
  int modulus = 0;
  EntryStatus status = EntryStatus::Ok;
  std::string note;
  std::vector<int> counts;  // factor-model proper-ideal counts
  long long vertices = 0;
  long long edges = 0;
  bool equivalence_ok = false;
};

ZmodCheck check_zmod_equivalence(int modulus, const SweepCaps& caps);

struct SweepOptions {
  int max_factors = 4;
  int max_proper_ideals = 5;
  std::vector<int> zmod_list;
  SweepCaps caps;
  /// Worker threads for the parallel driver; <= 0 means all available.
  int workers = 0;
  /// Optional cooperative cancellation: entries not yet started when the
  /// flag becomes nonzero are marked Aborted.
  const volatile int* abort_flag = nullptr;
};

struct SweepResult {
  std::vector<ClassificationReport> entries;  // canonical spec order
  std::vector<ZmodCheck> zmod;                // zmod_list order
  bool aborted = false;

  bool all_ok() const;
};

/// Classify every canonical spec and run every zmod check. run_sweep
/// dispatches entries to a worker pool but stores results by index, so its
/// output is identical to run_sweep_serial for any worker count.
SweepResult run_sweep(const SweepOptions& options);
SweepResult run_sweep_serial(const SweepOptions& options);

/// Independence-number growth: alpha is nondecreasing in every coordinate
/// over the full c-grid {1..max_c}^n, and the star spec (k, 1) has alpha ==
/// k throughout. Exact searches; returns false on any violation.
bool alpha_growth_check(int n, int max_c, const SweepCaps& caps);

/// omega == n for every completed entry with n >= 2.
bool omega_equals_max_check(const SweepResult& result);

}  // namespace comaximal
