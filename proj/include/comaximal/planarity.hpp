#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "comaximal/graph.hpp"

namespace comaximal {

/// Subdivision-witness extraction repeatedly re-runs the planarity tester, so
/// it is bounded by host-graph size; the verdict itself has no cap.
inline constexpr int kDefaultWitnessCap = 64;

/// Combinatorial embedding: for every vertex its incident neighbors in
/// clockwise order. Empty list for isolated vertices.
struct RotationSystem {
  std::vector<std::vector<int>> order;
};

enum class WitnessKind { K5, K33 };

std::string to_string(WitnessKind kind);

/// The branch-edge patterns a witness must realize, as index pairs into
/// branch_vertices: all 10 pairs for K5; the 9 cross pairs (first three
/// vertices vs last three) for K33. paths[k] realizes witness_pairs(kind)[k].
std::vector<std::pair<int, int>> witness_pairs(WitnessKind kind);

/// A subdivision of K5 or K33 inside a host graph: branch vertices plus one
/// host path per required branch edge. Paths include their endpoints, are
/// internally disjoint from each other and from all branch vertices, and may
/// run in either direction.
struct SubdivisionWitness {
  WitnessKind kind = WitnessKind::K5;
  std::vector<int> branch_vertices;  // 5 for K5; 3 + 3 for K33
  std::vector<std::vector<int>> paths;
};

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;  // set exactly when planar
  std::optional<SubdivisionWitness> witness;
};

/// Exact planarity via the left-right (LR) algorithm, linear time per test.
/// Planar graphs come back with a validated-by-construction rotation system;
/// nonplanar ones carry a subdivision witness when want_witness is set and
/// the graph has at most witness_cap vertices.
PlanarityResult is_planar(const Graph& g, bool want_witness = false,
                          int witness_cap = kDefaultWitnessCap);

/// True iff the witness realizes its branch-edge pattern inside g with
/// internally disjoint paths. On failure, *why names the first violation.
bool verify_witness(const Graph& g, const SubdivisionWitness& w, std::string* why = nullptr);

/// Structural check of a rotation system against g (each rotation lists the
/// vertex's neighbors exactly once) plus the Euler face count: tracing dart
/// orbits must give E - V' + 2*C faces, with V' the non-isolated vertices
/// and C the number of components containing an edge.
bool validate_embedding(const Graph& g, const RotationSystem& rot, std::string* why = nullptr);

/// Exact witness extraction: one deletion pass over the sorted edge list
/// keeps an edge only if the graph turns planar without it, which leaves
/// precisely a K5 or K33 subdivision (plus isolated vertices). Returns
/// nullopt on planar input. Deterministic.
std::optional<SubdivisionWitness> find_kuratowski(const Graph& g);

}  // namespace comaximal
