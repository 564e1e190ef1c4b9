#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace comaximal {

/// Table-based arithmetic is quadratic in the order, so ring construction is
/// capped. Overridable per call and, in the CLI, via COMAXIMAL_MAX_ORDER.
inline constexpr int kDefaultOrderCap = 4096;

/// A finite commutative ring with unity, given by full operation tables.
///
/// Elements are the indices 0..order-1. `add` and `mul` are row-major
/// order*order tables, `neg[i]` is the additive inverse of i. The zero ring
/// is rejected everywhere (order >= 2, one != zero).
struct FiniteRing {
  int order = 0;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  int zero = 0;
  int one = 0;
  std::string label;
  std::vector<std::uint16_t> neg;
  /// Nonzero exactly for rings built by make_zmod; selects "(d)" ideal labels.
  int zmod_modulus = 0;

  int add_at(int a, int b) const { return add[std::size_t(a) * order + b]; }
  int mul_at(int a, int b) const { return mul[std::size_t(a) * order + b]; }
  int neg_at(int a) const { return neg[a]; }
  int sub_at(int a, int b) const { return add_at(a, neg[b]); }

  bool operator==(const FiniteRing&) const = default;
};

/// Z/n with canonical indices 0..n-1. Requires n >= 2.
FiniteRing make_zmod(int n, int order_cap = kDefaultOrderCap);

/// F_p[x]/(f) for a prime p and a monic f of degree d >= 1 with coefficients
/// in 0..p-1, listed lowest degree first (f = coeffs[0] + coeffs[1] x + ...).
/// Element index encodes the residue polynomial base p, lowest digit first.
FiniteRing make_poly_quotient(int p, const std::vector<int>& coeffs,
                              int order_cap = kDefaultOrderCap);

/// Componentwise ring on the Cartesian product of the factors. The element
/// index is mixed radix with the first factor as the fastest-varying digit.
FiniteRing direct_product(const std::vector<FiniteRing>& factors,
                          int order_cap = kDefaultOrderCap);

/// Mixed-radix encoding helpers matching direct_product's element order.
int product_index(const std::vector<FiniteRing>& factors, const std::vector<int>& tuple);
std::vector<int> product_tuple(const std::vector<FiniteRing>& factors, int index);

/// Full axiom check: abelian group under add, commutative monoid under mul,
/// distributivity, one != zero. Cubic in the order; meant for tests on small
/// rings, not for construction paths.
bool validate_ring(const FiniteRing& r, std::string* why = nullptr);

bool is_prime(int p);

}  // namespace comaximal
