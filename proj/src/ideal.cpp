#include "comaximal/ideal.hpp"

#include "comaximal/errors.hpp"

namespace comaximal {

Ideal principal_ideal(const FiniteRing& ring, int a) {
  if (a < 0 || a >= ring.order) throw InvalidArgument("principal_ideal: element out of range");
  Ideal result{&ring, ElementSet(ring.order)};
  for (int r = 0; r < ring.order; ++r) result.members.set(ring.mul_at(r, a));
  return result;
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
  if (lhs.ring == nullptr || rhs.ring == nullptr)
    throw InvalidArgument("ideal_sum: detached ideal");
  if (lhs.ring != rhs.ring && !(*lhs.ring == *rhs.ring))
    throw InvalidArgument("ideal_sum: ring mismatch");
  const FiniteRing& ring = *lhs.ring;
  Ideal result{lhs.ring, ElementSet(ring.order)};
  for (auto x = lhs.members.find_first(); x != ElementSet::npos; x = lhs.members.find_next(x))
    for (auto y = rhs.members.find_first(); y != ElementSet::npos; y = rhs.members.find_next(y))
      result.members.set(ring.add_at(static_cast<int>(x), static_cast<int>(y)));
  return result;
}

bool is_ideal_set(const FiniteRing& ring, const ElementSet& members) {
  if (members.size() != static_cast<std::size_t>(ring.order)) return false;
  if (!members.test(ring.zero)) return false;
  for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x)) {
    for (auto y = members.find_first(); y != ElementSet::npos; y = members.find_next(y))
      if (!members.test(ring.add_at(static_cast<int>(x), static_cast<int>(y)))) return false;
    for (int r = 0; r < ring.order; ++r)
      if (!members.test(ring.mul_at(r, static_cast<int>(x)))) return false;
  }
  return true;
}

}  // namespace comaximal
