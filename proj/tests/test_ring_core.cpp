#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "comaximal/comaximal_graph.hpp"
#include "comaximal/decompose.hpp"
#include "comaximal/errors.hpp"
#include "comaximal/ideal.hpp"
#include "comaximal/lattice.hpp"
#include "comaximal/ring.hpp"
#include "oracles.hpp"

using namespace comaximal;
namespace orc = comaximal::oracles;

namespace {

ElementSet multiples(int d, int n) {
  ElementSet s(n);
  for (int k = 0; k < n; k += d) s.set(k);
  return s;
}

// Checks one Z/n lattice exhaustively against divisor arithmetic.
void check_zmod_lattice(int n) {
  CAPTURE(n);
  const FiniteRing ring = make_zmod(n);
  const IdealLattice lattice = enumerate_ideals(ring);
  const auto divs = orc::divisors(n);
  REQUIRE(lattice.size() == static_cast<int>(divs.size()));

  std::set<ElementSet> got;
  for (const auto& ideal : lattice.ideals) got.insert(ideal.members);
  for (int d : divs) REQUIRE(got.count(multiples(d, n)) == 1);

  // Maximal ideals are exactly pZ/n for prime p | n; the radical collects
  // all of them.
  std::set<ElementSet> maximal;
  for (int m : lattice.maximal_indices) maximal.insert(lattice.ideals[m].members);
  std::set<ElementSet> expected_maximal;
  for (int d : divs)
    if (orc::prime(d)) expected_maximal.insert(multiples(d, n));
  CHECK(maximal == expected_maximal);
  CHECK(lattice.ideals[lattice.jacobson].members == multiples(orc::radical(n), n));

  CHECK(lattice.ideals[lattice.zero_index].members == multiples(n, n));
  CHECK(lattice.ideals[lattice.unit_index].members == multiples(1, n));

  // Labels name the smallest nonzero member, "(0)" for the zero ideal.
  for (int i = 0; i < lattice.size(); ++i) {
    const auto& members = lattice.ideals[i].members;
    int d = 0;
    for (int e = 1; e < n; ++e)
      if (members.test(e)) {
        d = e;
        break;
      }
    CHECK(ideal_label(lattice, i) == "(" + std::to_string(d) + ")");
  }
}

}  // namespace

TEST_CASE("make_zmod basics") {
  const FiniteRing r = make_zmod(12);
  CHECK(r.order == 12);
  CHECK(r.label == "Z/12");
  CHECK(r.zmod_modulus == 12);
  CHECK(r.zero == 0);
  CHECK(r.one == 1);
  CHECK(r.add_at(7, 8) == 3);
  CHECK(r.mul_at(7, 8) == 8);
  CHECK(r.neg_at(5) == 7);
  CHECK(r.sub_at(3, 5) == 10);
  CHECK(validate_ring(r));
}

TEST_CASE("make_zmod rejects degenerate and oversized orders") {
  CHECK_THROWS_AS(make_zmod(1), InvalidArgument);
  CHECK_THROWS_AS(make_zmod(0), InvalidArgument);
  CHECK_THROWS_AS(make_zmod(-7), InvalidArgument);
  CHECK_THROWS_AS(make_zmod(kDefaultOrderCap + 1), CapacityError);
  CHECK_THROWS_AS(make_zmod(10, 5), CapacityError);
  CHECK(make_zmod(10, 10).order == 10);
}

TEST_CASE("zmod ideal lattices match divisor arithmetic") {
  for (int n = 2; n <= 200; ++n) check_zmod_lattice(n);
  for (int n : {256, 360, 512, 625, 729, 840, 900, 997, 1000}) check_zmod_lattice(n);
}

TEST_CASE("locality of zmod rings") {
  for (int n : {4, 8, 9, 16, 25, 27, 32, 121}) CHECK(is_local(enumerate_ideals(make_zmod(n))));
  for (int n : {2, 3, 5, 7, 997}) CHECK(is_local(enumerate_ideals(make_zmod(n))));
  for (int n : {6, 12, 30, 100}) CHECK_FALSE(is_local(enumerate_ideals(make_zmod(n))));
}

TEST_CASE("polynomial quotient rings") {
  SUBCASE("F2[x]/(x^2) is a chain ring with three ideals") {
    const FiniteRing r = make_poly_quotient(2, {0, 0, 1});
    CHECK(r.order == 4);
    CHECK(validate_ring(r));
    const IdealLattice lattice = enumerate_ideals(r);
    REQUIRE(lattice.size() == 3);
    CHECK(is_local(lattice));
    // Chain: ideals totally ordered by inclusion.
    auto sorted = lattice.ideals;
    std::sort(sorted.begin(), sorted.end(),
              [](const Ideal& a, const Ideal& b) { return a.size() < b.size(); });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      CHECK((sorted[i].members & sorted[i + 1].members) == sorted[i].members);
  }
  SUBCASE("F2[x]/(x^2+x+1) is the field F4") {
    const FiniteRing r = make_poly_quotient(2, {1, 1, 1});
    CHECK(r.order == 4);
    CHECK(validate_ring(r));
    CHECK(enumerate_ideals(r).size() == 2);
  }
  SUBCASE("F3[x]/(x^2+1) is the field F9") {
    const FiniteRing r = make_poly_quotient(3, {1, 0, 1});
    CHECK(r.order == 9);
    CHECK(validate_ring(r));
    CHECK(enumerate_ideals(r).size() == 2);
  }
  SUBCASE("F2[x]/(x^2+x) splits as F2 x F2") {
    const FiniteRing r = make_poly_quotient(2, {0, 1, 1});
    CHECK(r.order == 4);
    CHECK(validate_ring(r));
    const IdealLattice lattice = enumerate_ideals(r);
    CHECK(lattice.size() == 4);
    CHECK_FALSE(is_local(lattice));
  }
  SUBCASE("degree one modulus gives the prime field") {
    CHECK(make_poly_quotient(5, {0, 1}).order == 5);
  }
  SUBCASE("rejects bad moduli") {
    CHECK_THROWS_AS(make_poly_quotient(4, {0, 0, 1}), InvalidArgument);   // p not prime
    CHECK_THROWS_AS(make_poly_quotient(2, {1}), InvalidArgument);        // degree 0
    CHECK_THROWS_AS(make_poly_quotient(2, {}), InvalidArgument);         // empty
    CHECK_THROWS_AS(make_poly_quotient(2, {1, 2}), InvalidArgument);     // coeff out of range
    CHECK_THROWS_AS(make_poly_quotient(2, {1, 1, 0}), InvalidArgument);  // not monic
    CHECK_THROWS_AS(make_poly_quotient(2, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, 100),
                    CapacityError);  // 2^12 over the cap
  }
}

TEST_CASE("direct products and the CRT isomorphism") {
  const FiniteRing a = make_zmod(4);
  const FiniteRing b = make_zmod(3);
  const FiniteRing p = direct_product({a, b});
  CHECK(p.order == 12);
  CHECK(p.label == "Z/4 x Z/3");
  CHECK(validate_ring(p));

  SUBCASE("mixed-radix helpers round-trip") {
    for (int i = 0; i < 12; ++i) {
      const auto t = product_tuple({a, b}, i);
      REQUIRE(t.size() == 2);
      CHECK(product_index({a, b}, t) == i);
    }
    CHECK_THROWS_AS(product_index({a, b}, {4, 0}), InvalidArgument);
    CHECK_THROWS_AS(product_tuple({a, b}, 12), InvalidArgument);
  }

  SUBCASE("componentwise tables realize CRT for Z/12") {
    const FiniteRing z12 = make_zmod(12);
    // phi(k) = (k mod 4, k mod 3) as a product index.
    std::vector<int> phi(12);
    for (int k = 0; k < 12; ++k) phi[k] = product_index({a, b}, {k % 4, k % 3});
    // Bijective ring homomorphism.
    std::vector<char> seen(12, 0);
    for (int k = 0; k < 12; ++k) seen[phi[k]] = 1;
    CHECK(std::count(seen.begin(), seen.end(), 1) == 12);
    CHECK(phi[z12.zero] == p.zero);
    CHECK(phi[z12.one] == p.one);
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 12; ++y) {
        CHECK(phi[z12.add_at(x, y)] == p.add_at(phi[x], phi[y]));
        CHECK(phi[z12.mul_at(x, y)] == p.mul_at(phi[x], phi[y]));
      }
  }

  SUBCASE("rejects empty and oversized products") {
    CHECK_THROWS_AS(direct_product({}), InvalidArgument);
    CHECK_THROWS_AS(direct_product({make_zmod(65), make_zmod(64)}), CapacityError);
  }
}

TEST_CASE("principal ideals and sums") {
  const FiniteRing r = make_zmod(12);
  CHECK(principal_ideal(r, 2).members == multiples(2, 12));
  CHECK(principal_ideal(r, 8).members == multiples(4, 12));  // (8) = (4) in Z/12
  CHECK(principal_ideal(r, 0).members == multiples(12, 12));

  const Ideal four = principal_ideal(r, 4);
  const Ideal three = principal_ideal(r, 3);
  CHECK(ideal_sum(four, three).members == multiples(1, 12));  // co-maximal pair
  CHECK(ideal_sum(four, principal_ideal(r, 2)).members == multiples(2, 12));

  const FiniteRing other = make_zmod(6);
  CHECK_THROWS_AS(ideal_sum(four, principal_ideal(other, 2)), InvalidArgument);

  CHECK(is_ideal_set(r, multiples(3, 12)));
  ElementSet not_ideal(12);
  not_ideal.set(0);
  not_ideal.set(1);
  CHECK_FALSE(is_ideal_set(r, not_ideal));  // 1*2 = 2 missing
  CHECK_FALSE(is_ideal_set(r, ElementSet(12)));  // missing zero
}

TEST_CASE("enumerate_ideals respects the order cap") {
  CHECK_THROWS_AS(enumerate_ideals(make_zmod(100), 50), CapacityError);
  CHECK(enumerate_ideals(make_zmod(100), 100).size() == 9);  // tau(100)
}

TEST_CASE("validate_ring flags corrupted tables") {
  FiniteRing r = make_zmod(6);
  std::string why;
  CHECK(validate_ring(r, &why));
  r.mul[1 * 6 + 2] = 5;  // 1*2 must equal 2
  CHECK_FALSE(validate_ring(r, &why));
  CHECK_FALSE(why.empty());
}

TEST_CASE("idempotents and decomposition") {
  CHECK(idempotents(make_zmod(12)) == std::vector<int>{0, 1, 4, 9});
  CHECK(idempotents(make_zmod(30)).size() == 8);   // 2^3 prime factors
  CHECK(idempotents(make_zmod(8)) == std::vector<int>{0, 1});

  SUBCASE("Z/12 splits into local factors of orders 4 and 3") {
    const FiniteRing r = make_zmod(12);
    const Decomposition d = decompose(r);
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].order == 4);
    CHECK(d.factors[1].order == 3);
    for (const auto& f : d.factors) {
      CHECK(validate_ring(f));
      CHECK(is_local(enumerate_ideals(f)));
    }
    // elem_coords is a bijective homomorphism onto the factor product.
    REQUIRE(d.elem_coords.size() == 12);
    std::set<std::vector<int>> images(d.elem_coords.begin(), d.elem_coords.end());
    CHECK(images.size() == 12);
    for (int x = 0; x < 12; ++x)
      for (int y = 0; y < 12; ++y) {
        const int s = r.add_at(x, y);
        const int m = r.mul_at(x, y);
        for (size_t k = 0; k < d.factors.size(); ++k) {
          CHECK(d.elem_coords[s][k] ==
                d.factors[k].add_at(d.elem_coords[x][k], d.elem_coords[y][k]));
          CHECK(d.elem_coords[m][k] ==
                d.factors[k].mul_at(d.elem_coords[x][k], d.elem_coords[y][k]));
        }
      }
  }

  SUBCASE("Z/30 splits into three prime fields, largest first") {
    const Decomposition d = decompose(make_zmod(30));
    REQUIRE(d.factors.size() == 3);
    CHECK(d.factors[0].order == 5);
    CHECK(d.factors[1].order == 3);
    CHECK(d.factors[2].order == 2);
  }

  SUBCASE("local rings stay whole and keep their label") {
    const Decomposition d = decompose(make_zmod(8));
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].order == 8);
    CHECK(d.factors[0].label == "Z/8");
  }

  SUBCASE("F2[x]/(x^2+x) splits into two copies of F2") {
    const Decomposition d = decompose(make_poly_quotient(2, {0, 1, 1}));
    REQUIRE(d.factors.size() == 2);
    CHECK(d.factors[0].order == 2);
    CHECK(d.factors[1].order == 2);
  }
}

TEST_CASE("co-maximal graph of Z/12 is the star K_{1,2} centered at (3)") {
  const Graph g = comaximal_graph(enumerate_ideals(make_zmod(12)));
  CHECK(g.labels() == std::vector<std::string>{"(4)", "(3)", "(2)"});
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("co-maximal graph of a local ring is empty") {
  for (int n : {4, 8, 9, 27}) {
    const Graph g = comaximal_graph(enumerate_ideals(make_zmod(n)));
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 0);
  }
  CHECK(comaximal_graph(enumerate_ideals(make_poly_quotient(2, {0, 0, 1}))).vertex_count() == 0);
}

TEST_CASE("co-maximal graph of Z/30 joins exactly the coprime divisor pairs") {
  const Graph g = comaximal_graph(enumerate_ideals(make_zmod(30)));
  REQUIRE(g.vertex_count() == 6);
  CHECK(g.edge_count() == 6);
  auto divisor_of = [&](int v) {
    const std::string& l = g.label(v);  // "(d)"
    return std::stoi(l.substr(1, l.size() - 2));
  };
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      CHECK(g.has_edge(u, v) == (std::gcd(divisor_of(u), divisor_of(v)) == 1));
}

TEST_CASE("vertex set excludes ideals inside the radical") {
  // In Z/36 = Z/4 x Z/9 the radical is (6); (12), (18) and (0) sit inside
  // it and must not appear, leaving the ideals with a full coordinate.
  const IdealLattice lattice = enumerate_ideals(make_zmod(36));
  const Graph g = comaximal_graph(lattice);
  std::set<std::string> labels(g.labels().begin(), g.labels().end());
  CHECK(labels == std::set<std::string>{"(2)", "(3)", "(4)", "(9)"});
  const auto vertex_ideals = comaximal_vertex_ideals(lattice);
  CHECK(vertex_ideals.size() == 4);
}

TEST_CASE("graphs transport across the CRT isomorphism") {
  // Z/12 and Z/4 x Z/3 are isomorphic rings, so their graphs must agree
  // up to labels.
  const Graph via_zmod = comaximal_graph(enumerate_ideals(make_zmod(12)));
  const Graph via_product =
      comaximal_graph(enumerate_ideals(direct_product({make_zmod(4), make_zmod(3)})));
  CHECK(via_zmod.vertex_count() == via_product.vertex_count());
  CHECK(via_zmod.edge_count() == via_product.edge_count());
  CHECK(degree_sequence(via_zmod) == degree_sequence(via_product));
}
