#pragma once

#include <string>
#include <vector>

#include "comaximal/ideal.hpp"

namespace comaximal {

/// All ideals of a finite commutative ring.
///
/// Canonical order: by cardinality, then lexicographically on the sorted
/// member-index lists. Contains the zero ideal and the unit ideal exactly
/// once each and is closed under pairwise ideal sum.
struct IdealLattice {
  const FiniteRing* ring = nullptr;
  std::vector<Ideal> ideals;
  std::vector<int> maximal_indices;  // ascending indices into `ideals`
  int jacobson = -1;                 // index of the Jacobson radical
  int zero_index = -1;
  int unit_index = -1;

  int size() const { return static_cast<int>(ideals.size()); }
  /// Index of the ideal with the given member set, or -1.
  int find(const ElementSet& members) const;
};

/// Exact ideal enumeration: closure of the principal ideals under pairwise
/// ideal sum (every ideal of a finite ring is a finite sum of principal
/// ideals). Throws CapacityError when ring.order exceeds order_cap.
IdealLattice enumerate_ideals(const FiniteRing& ring, int order_cap = kDefaultOrderCap);

/// |Max(R)| == 1.
bool is_local(const IdealLattice& lattice);

/// Canonical display label: "(d)" with d the positive generator for Z/n
/// rings, otherwise "I" + position in canonical order.
std::string ideal_label(const IdealLattice& lattice, int index);

}  // namespace comaximal
