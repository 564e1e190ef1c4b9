#pragma once

#include <vector>

#include "comaximal/ring.hpp"

namespace comaximal {

/// All e with e*e = e, ascending.
std::vector<int> idempotents(const FiniteRing& ring);

/// R as a direct product of local rings, with the element-level bijection.
struct Decomposition {
  /// Local factors, largest order first (stable on ties). A local ring
  /// decomposes to a single factor equal to itself.
  std::vector<FiniteRing> factors;
  /// elem_coords[r][k] is the index of r's image in factors[k]. Composing
  /// with product_index(factors, .) gives a ring isomorphism onto
  /// direct_product(factors).
  std::vector<std::vector<int>> elem_coords;
};

/// Splits R along nontrivial idempotents e into eR x (1-e)R until every
/// factor is local (a finite commutative ring is local iff it has no
/// nontrivial idempotent). Deterministic: always the smallest nontrivial
/// idempotent.
Decomposition decompose(const FiniteRing& ring);

}  // namespace comaximal
