#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comaximal/decompose.hpp"
#include "comaximal/graph.hpp"
#include "comaximal/lattice.hpp"
#include "comaximal/ring.hpp"

namespace comaximal {

/// Exact clique/independence search is exponential in the worst case, so
/// combinatorial graph construction is capped by vertex count.
inline constexpr int kDefaultGraphCap = 20000;

/// Coordinate value meaning "the whole factor ring" in a VertexCode.
inline constexpr int kFull = -1;

/// One local factor, described only by its number of proper ideals
/// (counting the zero ideal, excluding the ring itself; c == 1 means the
/// factor is a field). The internal containment order of those ideals is
/// deliberately not modeled: adjacency in the co-maximal graph of a product
/// only ever asks "whole ring or not" per coordinate.
struct LocalFactorSpec {
  std::string label;
  int proper_ideals = 1;  // c >= 1
};

/// A product of local factors. n == factors.size() is the number of maximal
/// ideals of the modeled ring.
struct ProductRingSpec {
  std::vector<LocalFactorSpec> factors;

  int n() const { return static_cast<int>(factors.size()); }
  std::vector<int> counts() const;
  static ProductRingSpec from_counts(const std::vector<int>& counts);
};

/// A vertex of the co-maximal graph of a product ring: one entry per factor,
/// either kFull or a proper-ideal index in 0..c_i-1 (0 = the zero ideal).
/// Valid codes have at least one kFull entry (not inside the radical) and at
/// least one non-kFull entry (proper).
using VertexCode = std::vector<int>;

bool code_valid(const ProductRingSpec& spec, const VertexCode& v);

/// prod(c_i + 1) - prod(c_i) - 1.
long long vertex_count(const ProductRingSpec& spec);

/// prod over full coordinates of (c_i + 1), minus 1. Throws InvalidArgument
/// on an invalid code.
long long vertex_degree(const ProductRingSpec& spec, const VertexCode& v);

/// (1/2) * sum of all vertex degrees, evaluated per full-coordinate support.
long long edge_count(const ProductRingSpec& spec);

/// All valid codes in canonical order: lexicographic with the first
/// coordinate most significant and per-coordinate value order
/// 0 < 1 < ... < c_i-1 < kFull.
std::vector<VertexCode> enumerate_codes(const ProductRingSpec& spec);

/// Position of v in enumerate_codes(spec), computed arithmetically.
long long code_index(const ProductRingSpec& spec, const VertexCode& v);

/// Display label "<x1,...,xn>" using angle brackets, with "R" for kFull and
/// the decimal proper index otherwise.
std::string code_label(const VertexCode& v);

/// Adjacent iff every coordinate is kFull on at least one side (the
/// coordinatewise ideal sum is the whole factor everywhere).
bool codes_adjacent(const VertexCode& u, const VertexCode& v);

/// The co-maximal graph over all valid codes, vertices in enumerate_codes
/// order, labels from code_label. Throws CapacityError when vertex_count
/// exceeds vertex_cap. Adjacency rows are filled in parallel for larger
/// graphs; build_graph_serial is the reference kernel.
Graph build_graph(const ProductRingSpec& spec, int vertex_cap = kDefaultGraphCap);
Graph build_graph_serial(const ProductRingSpec& spec, int vertex_cap = kDefaultGraphCap);

/// A concrete ring seen through the factor model: its local decomposition,
/// per-factor ideal lattices, and the map from concrete ideals to codes.
struct RingFactorModel {
  ProductRingSpec spec;
  std::vector<FiniteRing> factors;
  std::vector<std::vector<int>> elem_coords;  // as in Decomposition
  /// Per factor: the member sets of its proper ideals in canonical lattice
  /// order (so position 0 is the zero ideal).
  std::vector<std::vector<ElementSet>> factor_proper_ideals;

  /// Code of a concrete ideal, via its coordinatewise projections. Throws
  /// InvalidArgument if the projection of some coordinate is not an ideal of
  /// that factor (cannot happen for genuine ideals) or the code is invalid
  /// (the ideal was improper or inside the radical).
  VertexCode code_for_ideal(const ElementSet& members) const;
};

/// Decompose a concrete ring and read off per-factor proper-ideal counts.
RingFactorModel spec_from_ring(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

}  // namespace comaximal
