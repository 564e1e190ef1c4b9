#pragma once

#include "comaximal/graph.hpp"
#include "comaximal/lattice.hpp"

namespace comaximal {

/// The co-maximal ideal graph built straight from the definition: vertices
/// are the proper ideals not contained in the Jacobson radical (in canonical
/// lattice order, labeled by ideal_label), and two vertices are adjacent iff
/// their ideal sum is the whole ring. Local rings yield the empty graph.
Graph comaximal_graph(const IdealLattice& lattice);

/// Lattice indices of the graph's vertices, aligned with its vertex order.
std::vector<int> comaximal_vertex_ideals(const IdealLattice& lattice);

}  // namespace comaximal
