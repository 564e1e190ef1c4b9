#pragma once

#include <boost/dynamic_bitset.hpp>

#include "comaximal/ring.hpp"

namespace comaximal {

/// Element-index sets are bitsets over 0..order-1.
using ElementSet = boost::dynamic_bitset<>;

/// An ideal of a FiniteRing, stored as a bitset of element indices.
/// The ring is referenced, not owned; keep it alive while the ideal is used.
struct Ideal {
  const FiniteRing* ring = nullptr;
  ElementSet members;

  std::size_t size() const { return members.count(); }
  bool contains(int e) const { return members.test(e); }
  bool is_zero() const { return size() == 1; }
  bool is_unit() const { return ring != nullptr && contains(ring->one); }

  bool operator==(const Ideal& other) const { return members == other.members; }
};

/// Smallest ideal containing a, i.e. {r*a : r in R}.
Ideal principal_ideal(const FiniteRing& ring, int a);

/// {x+y : x in I, y in J}. Throws InvalidArgument on a ring mismatch.
Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);

/// True iff members contains zero, is closed under addition and under
/// multiplication by every ring element.
bool is_ideal_set(const FiniteRing& ring, const ElementSet& members);

}  // namespace comaximal
