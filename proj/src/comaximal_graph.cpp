#include "comaximal/comaximal_graph.hpp"

namespace comaximal {

std::vector<int> comaximal_vertex_ideals(const IdealLattice& lattice) {
  std::vector<int> out;
  const ElementSet& radical = lattice.ideals[lattice.jacobson].members;
  for (int i = 0; i < lattice.size(); ++i) {
    if (i == lattice.unit_index) continue;
    if (!lattice.ideals[i].members.is_subset_of(radical)) out.push_back(i);
  }
  return out;
}

Graph comaximal_graph(const IdealLattice& lattice) {
  const FiniteRing& ring = *lattice.ring;
  const auto vertex_ideals = comaximal_vertex_ideals(lattice);

  std::vector<std::string> labels;
  labels.reserve(vertex_ideals.size());
  for (int i : vertex_ideals) labels.push_back(ideal_label(lattice, i));
  Graph g(std::move(labels));

  // I + J = R  iff  some x in I has 1 - x in J.
  auto comaximal = [&](const ElementSet& a, const ElementSet& b) {
    for (auto x = a.find_first(); x != ElementSet::npos; x = a.find_next(x))
      if (b.test(ring.sub_at(ring.one, static_cast<int>(x)))) return true;
    return false;
  };
  for (std::size_t u = 0; u < vertex_ideals.size(); ++u)
    for (std::size_t v = u + 1; v < vertex_ideals.size(); ++v)
      if (comaximal(lattice.ideals[vertex_ideals[u]].members,
                    lattice.ideals[vertex_ideals[v]].members))
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
  return g;
}

}  // namespace comaximal
