#include "comaximal/decompose.hpp"

#include <algorithm>
#include <numeric>

namespace comaximal {

namespace {

// The corner eR with identity e, elements numbered ascending by their index
// in the parent. position[] maps parent elements into the subring (-1 when
// absent).
struct Subring {
  FiniteRing ring;
  std::vector<int> parent_elem;  // subring index -> parent index
  std::vector<int> position;     // parent index -> subring index or -1
};

Subring corner_subring(const FiniteRing& r, int e) {
  Subring sub;
  sub.position.assign(r.order, -1);
  for (int x = 0; x < r.order; ++x) {
    const int ex = r.mul_at(e, x);
    if (sub.position[ex] < 0) {
      sub.position[ex] = 0;  // mark; numbered after sorting
      sub.parent_elem.push_back(ex);
    }
  }
  std::sort(sub.parent_elem.begin(), sub.parent_elem.end());
  for (std::size_t i = 0; i < sub.parent_elem.size(); ++i)
    sub.position[sub.parent_elem[i]] = static_cast<int>(i);

  const int m = static_cast<int>(sub.parent_elem.size());
  FiniteRing& s = sub.ring;
  s.order = m;
  s.zero = sub.position[r.zero];
  s.one = sub.position[e];
  s.add.resize(std::size_t(m) * m);
  s.mul.resize(std::size_t(m) * m);
  s.neg.resize(m);
  for (int i = 0; i < m; ++i) {
    const int a = sub.parent_elem[i];
    for (int j = 0; j < m; ++j) {
      const int b = sub.parent_elem[j];
      s.add[std::size_t(i) * m + j] = static_cast<std::uint16_t>(sub.position[r.add_at(a, b)]);
      s.mul[std::size_t(i) * m + j] = static_cast<std::uint16_t>(sub.position[r.mul_at(a, b)]);
    }
    s.neg[i] = static_cast<std::uint16_t>(sub.position[r.neg_at(a)]);
  }
  return sub;
}

int smallest_nontrivial_idempotent(const FiniteRing& r) {
  for (int e = 0; e < r.order; ++e) {
    if (e == r.zero || e == r.one) continue;
    if (r.mul_at(e, e) == e) return e;
  }
  return -1;
}

}  // namespace

std::vector<int> idempotents(const FiniteRing& ring) {
  std::vector<int> out;
  for (int e = 0; e < ring.order; ++e)
    if (ring.mul_at(e, e) == e) out.push_back(e);
  return out;
}

Decomposition decompose(const FiniteRing& ring) {
  Decomposition d;
  d.elem_coords.assign(ring.order, {});

  struct Item {
    FiniteRing ring;
    std::vector<int> of_original;  // original element -> element of this subring
  };
  std::vector<Item> queue;
  {
    std::vector<int> ident(ring.order);
    std::iota(ident.begin(), ident.end(), 0);
    queue.push_back(Item{ring, std::move(ident)});
  }

  std::vector<Item> locals;
  while (!queue.empty()) {
    Item item = std::move(queue.back());
    queue.pop_back();
    const FiniteRing& r = item.ring;
    const int e = smallest_nontrivial_idempotent(r);
    if (e < 0) {  // local
      locals.push_back(std::move(item));
      continue;
    }
    // Push the (1-e) side first so the eR side comes off the stack first.
    for (int which : {r.sub_at(r.one, e), e}) {
      Subring sub = corner_subring(r, which);
      std::vector<int> of_original(ring.order);
      for (int x = 0; x < ring.order; ++x)
        of_original[x] = sub.position[r.mul_at(which, item.of_original[x])];
      queue.push_back(Item{std::move(sub.ring), std::move(of_original)});
    }
  }

  std::stable_sort(locals.begin(), locals.end(),
                   [](const Item& a, const Item& b) { return a.ring.order > b.ring.order; });

  const bool already_local = locals.size() == 1;
  for (std::size_t k = 0; k < locals.size(); ++k) {
    if (!already_local) {
      locals[k].ring.label = ring.label + "_f" + std::to_string(k);
      locals[k].ring.zmod_modulus = 0;
    }
    d.factors.push_back(std::move(locals[k].ring));
    for (int x = 0; x < ring.order; ++x) d.elem_coords[x].push_back(locals[k].of_original[x]);
  }
  return d;
}

}  // namespace comaximal
