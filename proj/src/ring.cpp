#include "comaximal/ring.hpp"

#include <numeric>
#include <sstream>

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

void check_order_cap(long long order, int order_cap, const std::string& what) {
  if (order > order_cap) {
    std::ostringstream os;
    os << what << ": order " << order << " exceeds cap " << order_cap;
    throw CapacityError(os.str());
  }
}

void fill_neg_from_add(FiniteRing& r) {
  r.neg.assign(r.order, 0);
  for (int a = 0; a < r.order; ++a) {
    bool found = false;
    for (int b = 0; b < r.order; ++b) {
      if (r.add_at(a, b) == r.zero) {
        r.neg[a] = static_cast<std::uint16_t>(b);
        found = true;
        break;
      }
    }
    if (!found) throw InvalidArgument("element without additive inverse");
  }
}

std::string poly_string(const std::vector<int>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    int c = coeffs[k];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << "x";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

FiniteRing make_zmod(int n, int order_cap) {
  if (n < 2) throw InvalidArgument("make_zmod: order must be >= 2 (zero ring rejected)");
  check_order_cap(n, order_cap, "make_zmod");

  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.one = 1;
  r.zmod_modulus = n;
  r.label = "Z/" + std::to_string(n);
  r.add.resize(std::size_t(n) * n);
  r.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      r.add[std::size_t(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
      r.mul[std::size_t(a) * n + b] = static_cast<std::uint16_t>((static_cast<long long>(a) * b) % n);
    }
  }
  r.neg.resize(n);
  for (int a = 0; a < n; ++a) r.neg[a] = static_cast<std::uint16_t>((n - a) % n);
  return r;
}

FiniteRing make_poly_quotient(int p, const std::vector<int>& coeffs, int order_cap) {
  if (!is_prime(p)) throw InvalidArgument("make_poly_quotient: modulus p must be prime");
  if (coeffs.size() < 2) throw InvalidArgument("make_poly_quotient: degree must be >= 1");
  const int deg = static_cast<int>(coeffs.size()) - 1;
  if (coeffs[deg] != 1) throw InvalidArgument("make_poly_quotient: f must be monic");
  for (int c : coeffs)
    if (c < 0 || c >= p) throw InvalidArgument("make_poly_quotient: coefficients must lie in 0..p-1");

  long long order = 1;
  for (int k = 0; k < deg; ++k) {
    order *= p;
    check_order_cap(order, order_cap, "make_poly_quotient");
  }
  const int n = static_cast<int>(order);

  // Residue polynomials of degree < deg, index = base-p digits (lowest first).
  auto digits = [&](int idx) {
    std::vector<int> d(deg);
    for (int k = 0; k < deg; ++k) {
      d[k] = idx % p;
      idx /= p;
    }
    return d;
  };
  auto index_of = [&](const std::vector<int>& d) {
    int idx = 0;
    for (int k = deg - 1; k >= 0; --k) idx = idx * p + d[k];
    return idx;
  };
  // x^deg = -(coeffs[0] + ... + coeffs[deg-1] x^{deg-1})
  auto reduce = [&](std::vector<int> prod) {
    for (int k = static_cast<int>(prod.size()) - 1; k >= deg; --k) {
      int c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (int j = 0; j < deg; ++j) {
        int t = prod[k - deg + j] - c * coeffs[j];
        t %= p;
        if (t < 0) t += p;
        prod[k - deg + j] = t;
      }
    }
    prod.resize(deg);
    return prod;
  };

  FiniteRing r;
  r.order = n;
  r.zero = 0;
  r.one = index_of([&] {
    std::vector<int> d(deg, 0);
    d[0] = 1;
    return d;
  }());
  r.label = "F" + std::to_string(p) + "[x]/(" + poly_string(coeffs) + ")";
  r.add.resize(std::size_t(n) * n);
  r.mul.resize(std::size_t(n) * n);
  for (int a = 0; a < n; ++a) {
    const auto da = digits(a);
    for (int b = 0; b < n; ++b) {
      const auto db = digits(b);
      std::vector<int> sum(deg);
      for (int k = 0; k < deg; ++k) sum[k] = (da[k] + db[k]) % p;
      r.add[std::size_t(a) * n + b] = static_cast<std::uint16_t>(index_of(sum));

      std::vector<int> prod(2 * deg - 1, 0);
      for (int i = 0; i < deg; ++i)
        for (int j = 0; j < deg; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      r.mul[std::size_t(a) * n + b] = static_cast<std::uint16_t>(index_of(reduce(std::move(prod))));
    }
  }
  r.neg.resize(n);
  for (int a = 0; a < n; ++a) {
    auto d = digits(a);
    for (int& c : d) c = (p - c) % p;
    r.neg[a] = static_cast<std::uint16_t>(index_of(d));
  }
  return r;
}

int product_index(const std::vector<FiniteRing>& factors, const std::vector<int>& tuple) {
  if (tuple.size() != factors.size())
    throw InvalidArgument("product_index: tuple length does not match factor count");
  int idx = 0;
  for (int k = static_cast<int>(factors.size()) - 1; k >= 0; --k) {
    if (tuple[k] < 0 || tuple[k] >= factors[k].order)
      throw InvalidArgument("product_index: coordinate out of range");
    idx = idx * factors[k].order + tuple[k];
  }
  return idx;
}

std::vector<int> product_tuple(const std::vector<FiniteRing>& factors, int index) {
  long long span = 1;
  for (const auto& f : factors) span *= f.order;
  if (index < 0 || index >= span)
    throw InvalidArgument("product_tuple: index out of range");
  std::vector<int> tuple(factors.size());
  for (std::size_t k = 0; k < factors.size(); ++k) {
    tuple[k] = index % factors[k].order;
    index /= factors[k].order;
  }
  return tuple;
}

FiniteRing direct_product(const std::vector<FiniteRing>& factors, int order_cap) {
  if (factors.empty()) throw InvalidArgument("direct_product: factor list must be nonempty");
  long long order = 1;
  for (const auto& f : factors) {
    if (f.order < 2) throw InvalidArgument("direct_product: invalid factor");
    order *= f.order;
    check_order_cap(order, order_cap, "direct_product");
  }
  const int n = static_cast<int>(order);

  FiniteRing r;
  r.order = n;
  std::vector<int> zeros, ones;
  for (const auto& f : factors) {
    zeros.push_back(f.zero);
    ones.push_back(f.one);
    if (!r.label.empty()) r.label += " x ";
    r.label += f.label;
  }
  r.zero = product_index(factors, zeros);
  r.one = product_index(factors, ones);

  r.add.resize(std::size_t(n) * n);
  r.mul.resize(std::size_t(n) * n);
  r.neg.resize(n);
  const int k = static_cast<int>(factors.size());
  std::vector<std::vector<int>> tuples(n);
  for (int a = 0; a < n; ++a) tuples[a] = product_tuple(factors, a);
  std::vector<int> t(k);
  for (int a = 0; a < n; ++a) {
    const auto& ta = tuples[a];
    for (int b = 0; b < n; ++b) {
      const auto& tb = tuples[b];
      for (int i = 0; i < k; ++i) t[i] = factors[i].add_at(ta[i], tb[i]);
      r.add[std::size_t(a) * n + b] = static_cast<std::uint16_t>(product_index(factors, t));
      for (int i = 0; i < k; ++i) t[i] = factors[i].mul_at(ta[i], tb[i]);
      r.mul[std::size_t(a) * n + b] = static_cast<std::uint16_t>(product_index(factors, t));
    }
    for (int i = 0; i < k; ++i) t[i] = factors[i].neg_at(ta[i]);
    r.neg[a] = static_cast<std::uint16_t>(product_index(factors, t));
  }
  return r;
}

bool validate_ring(const FiniteRing& r, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const int n = r.order;
  if (n < 2) return fail("order < 2");
  if (r.zero == r.one) return fail("one == zero");
  if (r.add.size() != std::size_t(n) * n || r.mul.size() != std::size_t(n) * n)
    return fail("table size mismatch");
  for (int a = 0; a < n; ++a) {
    if (r.add_at(a, r.zero) != a) return fail("zero is not an additive identity");
    if (r.mul_at(a, r.one) != a) return fail("one is not a multiplicative identity");
    if (r.add_at(a, r.neg_at(a)) != r.zero) return fail("bad additive inverse");
    for (int b = 0; b < n; ++b) {
      if (r.add_at(a, b) != r.add_at(b, a)) return fail("addition not commutative");
      if (r.mul_at(a, b) != r.mul_at(b, a)) return fail("multiplication not commutative");
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.add_at(r.add_at(a, b), c) != r.add_at(a, r.add_at(b, c)))
          return fail("addition not associative");
        if (r.mul_at(r.mul_at(a, b), c) != r.mul_at(a, r.mul_at(b, c)))
          return fail("multiplication not associative");
        if (r.mul_at(a, r.add_at(b, c)) != r.add_at(r.mul_at(a, b), r.mul_at(a, c)))
          return fail("multiplication does not distribute");
      }
  return true;
}

}  // namespace comaximal
