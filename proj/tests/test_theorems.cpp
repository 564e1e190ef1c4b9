#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "comaximal/clique.hpp"
#include "comaximal/errors.hpp"
#include "comaximal/factor_model.hpp"
#include "comaximal/graph_props.hpp"
#include "comaximal/theorems.hpp"
#include "comaximal/atlas.hpp"
#include "oracles.hpp"

using namespace comaximal;
namespace orc = comaximal::oracles;

namespace {

ProductRingSpec spec_of(const std::vector<int>& counts) {
  return ProductRingSpec::from_counts(counts);
}

}  // namespace

TEST_CASE("closed-form predicates on hand-checked examples") {
  SUBCASE("universal vertex iff two factors with one of them a field") {
    CHECK(predicate_universal(spec_of({4, 1})));
    CHECK(predicate_universal(spec_of({1, 1})));
    CHECK(predicate_universal(spec_of({1, 6})));
    CHECK_FALSE(predicate_universal(spec_of({2, 2})));
    CHECK_FALSE(predicate_universal(spec_of({1, 1, 1})));
    CHECK_FALSE(predicate_universal(spec_of({3})));
  }
  SUBCASE("star iff two factors with one of them a field") {
    CHECK(predicate_star(spec_of({3, 1})));
    CHECK(predicate_star(spec_of({1, 1})));  // K_{1,1} is a one-edge star
    CHECK_FALSE(predicate_star(spec_of({2, 2})));
    CHECK_FALSE(predicate_star(spec_of({1, 1, 1})));
    CHECK_FALSE(predicate_star(spec_of({2})));
  }
  SUBCASE("planarity boundary") {
    CHECK(predicate_planar(spec_of({1})));
    CHECK(predicate_planar(spec_of({7})));  // one factor: empty graph
    CHECK(predicate_planar(spec_of({6, 2})));
    CHECK(predicate_planar(spec_of({2, 9})));
    CHECK_FALSE(predicate_planar(spec_of({3, 3})));
    CHECK(predicate_planar(spec_of({1, 1, 1})));
    CHECK(predicate_planar(spec_of({1, 1, 2})));
    CHECK(predicate_planar(spec_of({2, 1, 1})));  // order-insensitive
    CHECK_FALSE(predicate_planar(spec_of({1, 1, 3})));
    CHECK_FALSE(predicate_planar(spec_of({1, 2, 2})));
    CHECK_FALSE(predicate_planar(spec_of({2, 2, 2})));
    CHECK_FALSE(predicate_planar(spec_of({1, 1, 1, 1})));
    CHECK_FALSE(predicate_planar(spec_of({5, 4, 3, 2})));
  }
  SUBCASE("every predicate agrees with the measured graph on small specs") {
    for (const auto& counts : canonical_specs(3, 3)) {
      CAPTURE(counts);
      const ProductRingSpec spec = spec_of(counts);
      const Graph g = build_graph(spec);
      const auto res = is_planar(g, true);
      CHECK(res.planar == predicate_planar(spec));
      CHECK(!universal_vertices(g).empty() == predicate_universal(spec));
      CHECK(is_star(g) == predicate_star(spec));
    }
  }
}

TEST_CASE("construct_k33_witness builds a verified direct K33 for n >= 4") {
  SUBCASE("minimal four-field spec with known branch codes") {
    const ProductRingSpec spec = spec_of({1, 1, 1, 1});
    const Graph g = build_graph(spec);
    const SubdivisionWitness w = construct_k33_witness(spec);
    CHECK(w.kind == WitnessKind::K33);
    std::string why;
    CHECK_MESSAGE(verify_witness(g, w, &why), why);
    REQUIRE(w.branch_vertices.size() == 6);
    for (const auto& p : w.paths) CHECK(p.size() == 2);  // all direct edges
    auto labels_of = [&](int from, int to) {
      std::set<std::string> out;
      for (int i = from; i < to; ++i) out.insert(g.label(w.branch_vertices[i]));
      return out;
    };
    CHECK(labels_of(0, 3) ==
          std::set<std::string>{"⟨0,R,R,R⟩", "⟨R,0,R,R⟩",
                                "⟨0,0,R,R⟩"});
    CHECK(labels_of(3, 6) ==
          std::set<std::string>{"⟨R,R,0,R⟩", "⟨R,R,R,0⟩",
                                "⟨R,R,0,0⟩"});
  }
  SUBCASE("non-field factors and five factors") {
    for (const auto& counts :
         {std::vector<int>{2, 1, 1, 1}, {3, 2, 2, 1}, {1, 1, 1, 1, 1}}) {
      CAPTURE(counts);
      const ProductRingSpec spec = spec_of(counts);
      const Graph g = build_graph(spec);
      std::string why;
      CHECK_MESSAGE(verify_witness(g, construct_k33_witness(spec), &why), why);
    }
  }
  SUBCASE("rejected below four factors") {
    CHECK_THROWS_AS(construct_k33_witness(spec_of({1, 1, 1})), InvalidArgument);
    CHECK_THROWS_AS(construct_k33_witness(spec_of({5})), InvalidArgument);
  }
}

TEST_CASE("canonical_specs enumerates nondecreasing tuples in order") {
  const auto small = canonical_specs(2, 2);
  CHECK(small == std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {1, 2}, {2, 2}});
  CHECK(canonical_specs(3, 3).size() == 19);
  CHECK(canonical_specs(4, 5).size() == 125);
  const auto all = canonical_specs(4, 5);
  for (size_t i = 0; i < all.size(); ++i) {
    CHECK(std::is_sorted(all[i].begin(), all[i].end()));
    if (i > 0) {
      const bool ordered = all[i - 1].size() < all[i].size() ||
                           (all[i - 1].size() == all[i].size() && all[i - 1] < all[i]);
      CHECK(ordered);
    }
  }
  CHECK_THROWS_AS(canonical_specs(0, 3), InvalidArgument);
  CHECK_THROWS_AS(canonical_specs(2, 0), InvalidArgument);
}

TEST_CASE("classify_spec measures and cross-checks single specs") {
  const SweepCaps caps;
  SUBCASE("two fields: a single edge with every structure present") {
    const ClassificationReport r = classify_spec(spec_of({1, 1}), caps);
    CHECK(r.status == EntryStatus::Ok);
    CHECK(r.vertices == 2);
    CHECK(r.edges == 1);
    CHECK(r.omega == 2);
    CHECK(r.alpha == 1);
    CHECK(r.degree_seq == std::vector<int>{1, 1});
    CHECK(r.planar);
    CHECK(r.universal);
    CHECK(r.star);
    CHECK((r.agree_planar && r.agree_universal && r.agree_star));
    CHECK(r.counts_ok);
    CHECK(r.omega_ok);
    CHECK(r.embedding_ok);
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.all_ok());
  }
  SUBCASE("three non-field factors: nonplanar with a verified witness") {
    const ClassificationReport r = classify_spec(spec_of({2, 2, 2}), caps);
    CHECK(r.status == EntryStatus::Ok);
    CHECK(r.vertices == 18);
    CHECK(r.edges == (125 - 2 * 27 + 1) / 2);
    CHECK(r.omega == 3);
    CHECK(r.alpha == 12);  // the twelve two-coordinate supports pairwise meet
    CHECK_FALSE(r.planar);
    CHECK_FALSE(r.predicted_planar);
    CHECK(r.agree_planar);
    CHECK(r.witness_ok);
    REQUIRE(r.witness.has_value());
    std::string why;
    CHECK_MESSAGE(verify_witness(build_graph(spec_of({2, 2, 2})), *r.witness, &why), why);
    CHECK(r.all_ok());
  }
  SUBCASE("single local factor: empty graph, omega vacuous") {
    const ClassificationReport r = classify_spec(spec_of({4}), caps);
    CHECK(r.vertices == 0);
    CHECK(r.edges == 0);
    CHECK(r.omega == 0);
    CHECK(r.alpha == 0);
    CHECK(r.planar);
    CHECK(r.omega_ok);
    CHECK(r.all_ok());
  }
}

TEST_CASE("parallel sweep is byte-identical to the serial reference") {
  SweepOptions opt;
  opt.max_factors = 3;
  opt.max_proper_ideals = 3;
  opt.zmod_list = {12, 30, 60};
  const SweepResult serial = run_sweep_serial(opt);
  CHECK(serial.all_ok());
  CHECK(serial.entries.size() == 19);
  CHECK(serial.zmod.size() == 3);
  for (int workers : {1, 2, 4}) {
    CAPTURE(workers);
    SweepOptions p = opt;
    p.workers = workers;
    CHECK(to_atlas_jsonl(run_sweep(p)) == to_atlas_jsonl(serial));
  }
}

TEST_CASE("capacity overruns are recorded, not thrown, and are not failures") {
  SweepOptions opt;
  opt.max_factors = 3;
  opt.max_proper_ideals = 3;
  opt.caps.graph_vertex_cap = 5;
  const SweepResult res = run_sweep_serial(opt);
  CHECK(res.all_ok());
  int capped = 0;
  for (const auto& e : res.entries)
    if (e.status == EntryStatus::Capacity) {
      ++capped;
      CHECK_FALSE(e.note.empty());
    }
  CHECK(capped > 0);
  // Small graphs still complete under the tiny cap.
  bool saw_ok = false;
  for (const auto& e : res.entries)
    if (e.status == EntryStatus::Ok && e.spec.n() == 2) saw_ok = true;
  CHECK(saw_ok);
}

TEST_CASE("search-budget overruns are recorded per entry") {
  SweepOptions opt;
  opt.max_factors = 3;
  opt.max_proper_ideals = 3;
  opt.caps.search_budget = 1;
  const SweepResult res = run_sweep_serial(opt);
  CHECK(res.all_ok());
  int budgeted = 0;
  for (const auto& e : res.entries)
    if (e.status == EntryStatus::Budget) {
      ++budgeted;
      CHECK_FALSE(e.note.empty());
    }
  CHECK(budgeted > 0);
}

TEST_CASE("concrete modular rings match the combinatorial model") {
  const SweepCaps caps;
  struct Expect {
    int modulus;
    std::vector<int> sorted_counts;
    long long vertices;
  };
  const std::vector<Expect> table = {
      {12, {1, 2}, 3},   {30, {1, 1, 1}, 6},  {60, {1, 1, 2}, 9},
      {64, {6}, 0},      {210, {1, 1, 1, 1}, 14}, {720, {1, 2, 4}, 21},
  };
  for (const auto& t : table) {
    CAPTURE(t.modulus);
    const ZmodCheck z = check_zmod_equivalence(t.modulus, caps);
    CHECK(z.status == EntryStatus::Ok);
    CHECK(z.equivalence_ok);
    std::vector<int> counts = z.counts;
    std::sort(counts.begin(), counts.end());
    CHECK(counts == t.sorted_counts);
    CHECK(z.vertices == t.vertices);
  }
  CHECK_THROWS_AS(check_zmod_equivalence(1, caps), InvalidArgument);
  CHECK_THROWS_AS(check_zmod_equivalence(0, caps), InvalidArgument);
}

TEST_CASE("independence number grows with the ideal counts") {
  const SweepCaps caps;
  CHECK(alpha_growth_check(2, 6, caps));
  CHECK(alpha_growth_check(3, 2, caps));
  // Complete bipartite alpha and the star rule, directly.
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    CHECK(independence_number(build_graph(spec_of({k, 2}))) == std::max(k, 2));
    CHECK(independence_number(build_graph(spec_of({k, 1}))) == k);
  }
}

TEST_CASE("clique number equals the number of factors") {
  SweepOptions opt;
  opt.max_factors = 3;
  opt.max_proper_ideals = 4;
  const SweepResult res = run_sweep_serial(opt);
  CHECK(omega_equals_max_check(res));
  CHECK(clique_number(build_graph(spec_of({2, 2, 2, 2}))) == 4);
  CHECK(clique_number(build_graph(spec_of({1, 1, 1, 1, 1}))) == 5);
}

TEST_CASE("library alpha matches the support-family oracle") {
  for (int c1 = 1; c1 <= 4; ++c1)
    for (int c2 = 1; c2 <= 4; ++c2) {
      CAPTURE(c1);
      CAPTURE(c2);
      CHECK(independence_number(build_graph(spec_of({c1, c2}))) ==
            orc::support_alpha({c1, c2}));
    }
  for (const auto& counts : canonical_specs(3, 3)) {
    if (counts.size() != 3) continue;
    CAPTURE(counts);
    CHECK(independence_number(build_graph(spec_of(counts))) == orc::support_alpha(counts));
  }
  // 14 supports pair up into complements, so an intersecting family keeps at
  // most 7; the star over one coordinate achieves that.
  CHECK(orc::support_alpha({1, 1, 1, 1}) == 7);
  CHECK(independence_number(build_graph(spec_of({1, 1, 1, 1}))) == 7);
  CHECK(independence_number(build_graph(spec_of({2, 1, 1, 1}))) ==
        orc::support_alpha({2, 1, 1, 1}));
  CHECK(independence_number(build_graph(spec_of({2, 2, 2, 2}))) ==
        orc::support_alpha({2, 2, 2, 2}));
  CHECK(orc::support_alpha({5, 5, 5, 5}) == 575);
  CHECK(independence_number(build_graph(spec_of({5, 5, 5, 5}))) == 575);
}

TEST_CASE("entry status names") {
  CHECK(to_string(EntryStatus::Ok) == "ok");
  CHECK(to_string(EntryStatus::Capacity) == "capacity");
  CHECK(to_string(EntryStatus::Budget) == "budget");
  CHECK(to_string(EntryStatus::Aborted) == "aborted");
}

TEST_CASE("a pre-set abort flag cancels the whole sweep") {
  SweepOptions opt;
  opt.max_factors = 3;
  opt.max_proper_ideals = 3;
  opt.zmod_list = {12};
  volatile int flag = 1;
  opt.abort_flag = &flag;
  for (const SweepResult& res : {run_sweep_serial(opt), run_sweep(opt)}) {
    CHECK(res.aborted);
    CHECK_FALSE(res.all_ok());
    REQUIRE(res.entries.size() == 19);
    for (const auto& e : res.entries) CHECK(e.status == EntryStatus::Aborted);
    CHECK(to_atlas_jsonl(res) == "{\"completed\":0,\"status\":\"aborted\"}\n");
  }
}
