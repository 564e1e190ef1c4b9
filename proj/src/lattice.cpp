#include "comaximal/lattice.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

std::vector<int> member_list(const ElementSet& s) {
  std::vector<int> out;
  out.reserve(s.count());
  for (auto x = s.find_first(); x != ElementSet::npos; x = s.find_next(x))
    out.push_back(static_cast<int>(x));
  return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  // Equal cardinality: lexicographic on sorted member indices, which is the
  // same as "smaller element at the first set difference".
  auto x = a.find_first(), y = b.find_first();
  while (x != ElementSet::npos && y != ElementSet::npos) {
    if (x != y) return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return false;
}

}  // namespace

int IdealLattice::find(const ElementSet& members) const {
  for (int i = 0; i < size(); ++i)
    if (ideals[i].members == members) return i;
  return -1;
}

IdealLattice enumerate_ideals(const FiniteRing& ring, int order_cap) {
  if (ring.order > order_cap) {
    std::ostringstream os;
    os << "enumerate_ideals: ring order " << ring.order << " exceeds cap " << order_cap;
    throw CapacityError(os.str());
  }

  std::map<ElementSet, int> seen;
  std::vector<ElementSet> found;
  auto insert = [&](ElementSet s) {
    if (seen.emplace(s, 0).second) found.push_back(std::move(s));
  };
  for (int a = 0; a < ring.order; ++a) insert(principal_ideal(ring, a).members);

  // Fixpoint closure under pairwise ideal sum.
  auto sum_members = [&](const ElementSet& lhs, const ElementSet& rhs) {
    ElementSet out(ring.order);
    for (auto x = lhs.find_first(); x != ElementSet::npos; x = lhs.find_next(x))
      for (auto y = rhs.find_first(); y != ElementSet::npos; y = rhs.find_next(y))
        out.set(ring.add_at(static_cast<int>(x), static_cast<int>(y)));
    return out;
  };
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      insert(sum_members(found[i], found[j]));

  std::sort(found.begin(), found.end(), canonical_less);

  IdealLattice lattice;
  lattice.ring = &ring;
  lattice.ideals.reserve(found.size());
  for (auto& s : found) lattice.ideals.push_back(Ideal{&ring, std::move(s)});
  lattice.zero_index = 0;
  lattice.unit_index = lattice.size() - 1;

  // Maximal = proper ideals not strictly contained in another proper ideal.
  for (int i = 0; i < lattice.size(); ++i) {
    if (i == lattice.unit_index) continue;
    bool maximal = true;
    for (int j = 0; j < lattice.size() && maximal; ++j) {
      if (j == i || j == lattice.unit_index) continue;
      if (lattice.ideals[i].members.is_subset_of(lattice.ideals[j].members)) maximal = false;
    }
    if (maximal) lattice.maximal_indices.push_back(i);
  }

  ElementSet radical(ring.order);
  radical.set();
  for (int m : lattice.maximal_indices) radical &= lattice.ideals[m].members;
  lattice.jacobson = lattice.find(radical);
  if (lattice.jacobson < 0)
    throw InvalidArgument("enumerate_ideals: radical missing from lattice (broken ring tables?)");
  return lattice;
}

bool is_local(const IdealLattice& lattice) { return lattice.maximal_indices.size() == 1; }

std::string ideal_label(const IdealLattice& lattice, int index) {
  if (index < 0 || index >= lattice.size())
    throw InvalidArgument("ideal_label: index out of range");
  if (lattice.ring->zmod_modulus > 0) {
    const auto members = member_list(lattice.ideals[index].members);
    const int d = members.size() > 1 ? members[1] : 0;  // smallest nonzero member
    return "(" + std::to_string(d) + ")";
  }
  return "I" + std::to_string(index);
}

}  // namespace comaximal
