#include "comaximal/theorems.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "comaximal/comaximal_graph.hpp"
#include "comaximal/errors.hpp"
#include "comaximal/graph_props.hpp"

namespace comaximal {

namespace {

int min_count(const ProductRingSpec& spec) {
  int m = spec.factors[0].proper_ideals;
  for (const auto& f : spec.factors) m = std::min(m, f.proper_ideals);
  return m;
}

}  // namespace

bool predicate_universal(const ProductRingSpec& spec) {
  return spec.n() == 2 && min_count(spec) == 1;
}

bool predicate_star(const ProductRingSpec& spec) {
  return spec.n() == 2 && min_count(spec) == 1 && vertex_count(spec) >= 2;
}

bool predicate_planar(const ProductRingSpec& spec) {
  switch (spec.n()) {
    case 1:
      return true;  // no vertices at all
    case 2:
      return min_count(spec) <= 2;
    case 3: {
      // Planar only when at least two factors are fields and the third has
      // at most one nontrivial ideal. With two factors of >= 2 proper
      // ideals each, say c = (1,2,2), the five vertices of support {0},
      // {1}, {2} already span a K5 subdivision: all cross-support pairs are
      // edges, and the two same-support pairs close up through the
      // support-{0,2} and support-{0,1} vertices.
      auto c = spec.counts();
      std::sort(c.begin(), c.end());
      return c[0] == 1 && c[1] == 1 && c[2] <= 2;
    }
    default:
      return false;
  }
}

SubdivisionWitness construct_k33_witness(const ProductRingSpec& spec) {
  const int n = spec.n();
  if (n < 4)
    throw InvalidArgument("construct_k33_witness: needs at least 4 factors, got " +
                          std::to_string(n));
  auto code_at = [&](std::initializer_list<int> zero_coords) {
    VertexCode code(n, kFull);
    for (int i : zero_coords) code[i] = 0;
    return code;
  };
  const std::vector<VertexCode> side = {
      code_at({0}), code_at({1}), code_at({0, 1}),  // first side
      code_at({2}), code_at({3}), code_at({2, 3}),  // second side
  };
  SubdivisionWitness w;
  w.kind = WitnessKind::K33;
  for (const auto& code : side)
    w.branch_vertices.push_back(static_cast<int>(code_index(spec, code)));
  for (auto [i, j] : witness_pairs(WitnessKind::K33))
    w.paths.push_back({w.branch_vertices[i], w.branch_vertices[j]});
  return w;
}

std::string to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::Ok:
      return "ok";
    case EntryStatus::Capacity:
      return "capacity";
    case EntryStatus::Budget:
      return "budget";
    default:
      return "aborted";
  }
}

bool ClassificationReport::all_ok() const {
  if (status != EntryStatus::Ok) return status != EntryStatus::Aborted;
  return agree_planar && agree_universal && agree_star && counts_ok && omega_ok &&
         embedding_ok && witness_ok;
}

std::vector<std::vector<int>> canonical_specs(int max_n, int max_c) {
  if (max_n < 1 || max_c < 1)
    throw InvalidArgument("canonical_specs: bounds must be positive");
  std::vector<std::vector<int>> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<int> c(n, 1);
    for (;;) {
      out.push_back(c);
      int i = n - 1;
      while (i >= 0 && c[i] == max_c) --i;
      if (i < 0) break;
      const int next = c[i] + 1;
      for (int j = i; j < n; ++j) c[j] = next;  // keep the tuple nondecreasing
    }
  }
  return out;
}

ClassificationReport classify_spec(const ProductRingSpec& spec, const SweepCaps& caps) {
  ClassificationReport rep;
  rep.spec = spec;
  rep.predicted_planar = predicate_planar(spec);
  rep.predicted_universal = predicate_universal(spec);
  rep.predicted_star = predicate_star(spec);
  try {
    const Graph g = build_graph(spec, caps.graph_vertex_cap);
    rep.vertices = g.vertex_count();
    rep.edges = g.edge_count();
    rep.degree_seq = degree_sequence(g);

    const auto codes = enumerate_codes(spec);
    rep.counts_ok = rep.vertices == vertex_count(spec) && rep.edges == edge_count(spec);
    for (int v = 0; v < g.vertex_count() && rep.counts_ok; ++v)
      rep.counts_ok = g.degree(v) == vertex_degree(spec, codes[v]) &&
                      code_index(spec, codes[v]) == v;

    const PlanarityResult pl = is_planar(g);
    rep.planar = pl.planar;
    rep.agree_planar = rep.planar == rep.predicted_planar;
    rep.embedding_ok = !pl.planar || validate_embedding(g, *pl.embedding);

    if (pl.planar) {
      rep.witness_ok = true;
    } else if (spec.n() >= 4) {
      rep.witness = construct_k33_witness(spec);
      rep.witness_ok = verify_witness(g, *rep.witness);
    } else if (rep.vertices <= caps.witness_cap) {
      rep.witness = find_kuratowski(g);
      rep.witness_ok = rep.witness.has_value() && verify_witness(g, *rep.witness);
    } else {
      rep.witness_ok = true;  // witness extraction is best-effort beyond the cap
    }

    rep.omega = clique_number(g, caps.search_budget);
    rep.alpha = independence_number(g, caps.search_budget);
    rep.omega_ok = spec.n() < 2 || rep.omega == spec.n();

    rep.universal = !universal_vertices(g).empty();
    rep.star = is_star(g);
    rep.agree_universal = rep.universal == rep.predicted_universal;
    rep.agree_star = rep.star == rep.predicted_star;
  } catch (const CapacityError& e) {
    rep.status = EntryStatus::Capacity;
    rep.note = e.what();
  } catch (const BudgetError& e) {
    rep.status = EntryStatus::Budget;
    rep.note = e.what();
  }
  return rep;
}

ZmodCheck check_zmod_equivalence(int modulus, const SweepCaps& caps) {
  ZmodCheck check;
  check.modulus = modulus;
  try {
    const FiniteRing ring = make_zmod(modulus, caps.ring_order_cap);
    const IdealLattice lattice = enumerate_ideals(ring, caps.ring_order_cap);
    const Graph ring_graph = comaximal_graph(lattice);
    const RingFactorModel model = spec_from_ring(ring, caps.ring_order_cap);
    check.counts = model.spec.counts();
    const Graph model_graph = build_graph(model.spec, caps.graph_vertex_cap);
    check.vertices = ring_graph.vertex_count();
    check.edges = ring_graph.edge_count();

    bool ok = ring_graph.vertex_count() == model_graph.vertex_count() &&
              ring_graph.edge_count() == model_graph.edge_count();
    const auto vertex_ideals = comaximal_vertex_ideals(lattice);
    std::vector<int> image(vertex_ideals.size(), -1);
    std::vector<char> hit(ok ? model_graph.vertex_count() : 0, 0);
    for (std::size_t i = 0; ok && i < vertex_ideals.size(); ++i) {
      const VertexCode code = model.code_for_ideal(lattice.ideals[vertex_ideals[i]].members);
      const long long idx = code_index(model.spec, code);
      image[i] = static_cast<int>(idx);
      if (hit[image[i]])
        ok = false;  // two ideals mapped to one code: not a bijection
      else
        hit[image[i]] = 1;
    }
    for (int u = 0; ok && u < ring_graph.vertex_count(); ++u)
      for (int v = u + 1; v < ring_graph.vertex_count(); ++v)
        if (ring_graph.has_edge(u, v) != model_graph.has_edge(image[u], image[v])) {
          ok = false;
          break;
        }
    check.equivalence_ok = ok;
  } catch (const CapacityError& e) {
    check.status = EntryStatus::Capacity;
    check.note = e.what();
  } catch (const BudgetError& e) {
    check.status = EntryStatus::Budget;
    check.note = e.what();
  }
  return check;
}

bool SweepResult::all_ok() const {
  if (aborted) return false;
  for (const auto& e : entries)
    if (!e.all_ok()) return false;
  for (const auto& z : zmod)
    if (z.status == EntryStatus::Ok && !z.equivalence_ok) return false;
  return true;
}

namespace {

SweepResult run_sweep_impl(const SweepOptions& options, bool parallel) {
  const auto tuples = canonical_specs(options.max_factors, options.max_proper_ideals);
  SweepResult result;
  result.entries.resize(tuples.size());
  result.zmod.resize(options.zmod_list.size());

  auto cancelled = [&] { return options.abort_flag && *options.abort_flag != 0; };
  auto entry_job = [&](int i) {
    if (cancelled()) {
      result.entries[i].spec = ProductRingSpec::from_counts(tuples[i]);
      result.entries[i].status = EntryStatus::Aborted;
      return;
    }
    result.entries[i] = classify_spec(ProductRingSpec::from_counts(tuples[i]), options.caps);
  };
  auto zmod_job = [&](int i) {
    if (cancelled()) {
      result.zmod[i].modulus = options.zmod_list[i];
      result.zmod[i].status = EntryStatus::Aborted;
      return;
    }
    result.zmod[i] = check_zmod_equivalence(options.zmod_list[i], options.caps);
  };

  const int entry_count = static_cast<int>(tuples.size());
  const int zmod_count = static_cast<int>(options.zmod_list.size());
#ifdef _OPENMP
  if (parallel) {
    int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
    workers = std::max(1, workers);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < entry_count; ++i) entry_job(i);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int i = 0; i < zmod_count; ++i) zmod_job(i);
  } else {
    for (int i = 0; i < entry_count; ++i) entry_job(i);
    for (int i = 0; i < zmod_count; ++i) zmod_job(i);
  }
#else
  (void)parallel;
  for (int i = 0; i < entry_count; ++i) entry_job(i);
  for (int i = 0; i < zmod_count; ++i) zmod_job(i);
#endif

  for (const auto& e : result.entries)
    if (e.status == EntryStatus::Aborted) result.aborted = true;
  for (const auto& z : result.zmod)
    if (z.status == EntryStatus::Aborted) result.aborted = true;
  return result;
}

}  // namespace

SweepResult run_sweep(const SweepOptions& options) { return run_sweep_impl(options, true); }

SweepResult run_sweep_serial(const SweepOptions& options) {
  return run_sweep_impl(options, false);
}

bool alpha_growth_check(int n, int max_c, const SweepCaps& caps) {
  if (n < 1 || max_c < 1) throw InvalidArgument("alpha_growth_check: bounds must be positive");
  // alpha is symmetric in the factors, so measure each sorted tuple once.
  std::map<std::vector<int>, int> alpha_of;
  auto alpha_for = [&](std::vector<int> c) {
    std::sort(c.begin(), c.end());
    auto it = alpha_of.find(c);
    if (it != alpha_of.end()) return it->second;
    const Graph g = build_graph(ProductRingSpec::from_counts(c), caps.graph_vertex_cap);
    const int a = independence_number(g, caps.search_budget);
    alpha_of.emplace(std::move(c), a);
    return a;
  };

  // Walk the grid {1..max_c}^n; check monotonicity against each coordinate
  // predecessor.
  std::vector<int> c(n, 1);
  for (;;) {
    const int here = alpha_for(c);
    for (int i = 0; i < n; ++i) {
      if (c[i] == 1) continue;
      --c[i];
      const int below = alpha_for(c);
      ++c[i];
      if (below > here) return false;
    }
    int i = n - 1;
    while (i >= 0 && c[i] == max_c) c[i--] = 1;
    if (i < 0) break;
    ++c[i];
  }

  // Star: spec (k, 1) is K_{1,k}, whose independent leaves give alpha == k.
  for (int k = 1; k <= max_c; ++k)
    if (alpha_for({k, 1}) != k) return false;
  return true;
}

bool omega_equals_max_check(const SweepResult& result) {
  for (const auto& e : result.entries)
    if (e.status == EntryStatus::Ok && e.spec.n() >= 2 && e.omega != e.spec.n()) return false;
  return true;
}

}  // namespace comaximal
