#include "comaximal/factor_model.hpp"

#include <algorithm>
#include <climits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

using i128 = __int128;

// Clamp far above any representable graph size; callers translate a clamped
// value into a capacity error before it can reach arithmetic that matters.
constexpr i128 kClamp = static_cast<i128>(1) << 100;

i128 clamped_mul(i128 a, i128 b) {
  if (a >= kClamp || b >= kClamp) return kClamp;
  i128 r = a * b;
  return r >= kClamp ? kClamp : r;
}

long long to_ll(i128 v, const char* what) {
  if (v < 0 || v > static_cast<i128>(LLONG_MAX))
    throw CapacityError(std::string(what) + ": count out of range");
  return static_cast<long long>(v);
}

void check_spec(const ProductRingSpec& spec) {
  if (spec.factors.empty()) throw InvalidArgument("ProductRingSpec: no factors");
  for (const auto& f : spec.factors)
    if (f.proper_ideals < 1)
      throw InvalidArgument("LocalFactorSpec: proper ideal count must be >= 1");
}

}  // namespace

std::vector<int> ProductRingSpec::counts() const {
  std::vector<int> c;
  c.reserve(factors.size());
  for (const auto& f : factors) c.push_back(f.proper_ideals);
  return c;
}

ProductRingSpec ProductRingSpec::from_counts(const std::vector<int>& counts) {
  ProductRingSpec spec;
  for (std::size_t i = 0; i < counts.size(); ++i)
    spec.factors.push_back({"R" + std::to_string(i + 1), counts[i]});
  check_spec(spec);
  return spec;
}

bool code_valid(const ProductRingSpec& spec, const VertexCode& v) {
  if (static_cast<int>(v.size()) != spec.n()) return false;
  bool any_full = false, any_proper = false;
  for (int i = 0; i < spec.n(); ++i) {
    if (v[i] == kFull)
      any_full = true;
    else if (v[i] >= 0 && v[i] < spec.factors[i].proper_ideals)
      any_proper = true;
    else
      return false;
  }
  return any_full && any_proper;
}

long long vertex_count(const ProductRingSpec& spec) {
  check_spec(spec);
  i128 with_full = 1, without = 1;
  for (const auto& f : spec.factors) {
    with_full = clamped_mul(with_full, f.proper_ideals + 1);
    without = clamped_mul(without, f.proper_ideals);
  }
  return to_ll(with_full - without - 1, "vertex_count");
}

long long vertex_degree(const ProductRingSpec& spec, const VertexCode& v) {
  check_spec(spec);
  if (!code_valid(spec, v)) throw InvalidArgument("vertex_degree: invalid vertex code");
  i128 d = 1;
  for (int i = 0; i < spec.n(); ++i)
    if (v[i] == kFull) d = clamped_mul(d, spec.factors[i].proper_ideals + 1);
  return to_ll(d - 1, "vertex_degree");
}

long long edge_count(const ProductRingSpec& spec) {
  check_spec(spec);
  // Handshake sum over all codes: sum of degrees collapses to
  // prod(2c+1) - 2 prod(c+1) + 1.
  i128 odd = 1, with_full = 1;
  for (const auto& f : spec.factors) {
    odd = clamped_mul(odd, 2LL * f.proper_ideals + 1);
    with_full = clamped_mul(with_full, f.proper_ideals + 1);
  }
  i128 twice = odd - 2 * with_full + 1;
  if (odd >= kClamp) twice = kClamp;
  return to_ll(twice / 2, "edge_count");
}

std::vector<VertexCode> enumerate_codes(const ProductRingSpec& spec) {
  const long long count = vertex_count(spec);
  if (count > 5'000'000)
    throw CapacityError("enumerate_codes: too many vertex codes (" + std::to_string(count) + ")");
  const int n = spec.n();
  std::vector<VertexCode> out;
  out.reserve(static_cast<std::size_t>(count));
  // Odometer over digits 0..c_i, last coordinate fastest; digit c_i is kFull.
  std::vector<int> digit(n, 0);
  for (;;) {
    bool any_full = false, any_proper = false;
    for (int i = 0; i < n; ++i) {
      if (digit[i] == spec.factors[i].proper_ideals)
        any_full = true;
      else
        any_proper = true;
    }
    if (any_full && any_proper) {
      VertexCode code(digit.begin(), digit.end());
      for (int i = 0; i < n; ++i)
        if (code[i] == spec.factors[i].proper_ideals) code[i] = kFull;
      out.push_back(std::move(code));
    }
    int i = n - 1;
    while (i >= 0 && digit[i] == spec.factors[i].proper_ideals) digit[i--] = 0;
    if (i < 0) break;
    ++digit[i];
  }
  return out;
}

long long code_index(const ProductRingSpec& spec, const VertexCode& v) {
  check_spec(spec);
  if (!code_valid(spec, v)) throw InvalidArgument("code_index: invalid vertex code");
  const int n = spec.n();
  // Rank within the full odometer, then subtract the skipped tuples (those
  // with no kFull digit) that precede v. The all-kFull tuple is the odometer
  // maximum and never precedes a valid code.
  long long full_rank = 0, skipped = 0;
  std::vector<long long> weight_all(n, 1), weight_proper(n, 1);
  for (int i = n - 2; i >= 0; --i) {
    weight_all[i] = weight_all[i + 1] * (spec.factors[i + 1].proper_ideals + 1);
    weight_proper[i] = weight_proper[i + 1] * spec.factors[i + 1].proper_ideals;
  }
  bool prefix_properly_indexed = true;  // all earlier digits non-kFull
  for (int i = 0; i < n; ++i) {
    const int c = spec.factors[i].proper_ideals;
    const int digit = v[i] == kFull ? c : v[i];
    full_rank += digit * weight_all[i];
    if (prefix_properly_indexed) skipped += std::min(digit, c) * weight_proper[i];
    if (v[i] == kFull) prefix_properly_indexed = false;
  }
  return full_rank - skipped;
}

std::string code_label(const VertexCode& v) {
  std::string s = "⟨";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i] == kFull ? "R" : std::to_string(v[i]);
  }
  s += "⟩";
  return s;
}

bool codes_adjacent(const VertexCode& u, const VertexCode& v) {
  if (u.size() != v.size()) throw InvalidArgument("codes_adjacent: length mismatch");
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != kFull && v[i] != kFull) return false;
  return true;
}

namespace {

Graph build_graph_common(const ProductRingSpec& spec, int vertex_cap, bool parallel) {
  const long long count = vertex_count(spec);
  if (count > vertex_cap)
    throw CapacityError("build_graph: " + std::to_string(count) + " vertices exceeds cap " +
                        std::to_string(vertex_cap));
  const auto codes = enumerate_codes(spec);
  const int nv = static_cast<int>(codes.size());
  std::vector<std::string> labels;
  labels.reserve(codes.size());
  for (const auto& c : codes) labels.push_back(code_label(c));

  if (!parallel) {
    Graph g(std::move(labels));
    for (int u = 0; u < nv; ++u)
      for (int v = u + 1; v < nv; ++v)
        if (codes_adjacent(codes[u], codes[v])) g.add_edge(u, v);
    return g;
  }

  // Adjacency depends only on which coordinates are non-kFull: u ~ v iff the
  // two non-full coordinate sets are disjoint. Group vertices by that mask,
  // precompute one neighbor row per mask, then hand rows to each vertex.
  const int n = spec.n();
  std::vector<std::uint32_t> nonfull(codes.size());
  for (int v = 0; v < nv; ++v)
    for (int i = 0; i < n; ++i)
      if (codes[v][i] != kFull) nonfull[v] |= 1u << i;
  const std::uint32_t nmasks = 1u << n;
  std::vector<VertexSet> mask_members(nmasks, VertexSet(codes.size()));
  for (int v = 0; v < nv; ++v) mask_members[nonfull[v]].set(v);
  std::vector<VertexSet> mask_row(nmasks, VertexSet(codes.size()));
  for (std::uint32_t m = 0; m < nmasks; ++m) {
    if (mask_members[m].none()) continue;
    for (std::uint32_t other = 0; other < nmasks; ++other)
      if ((m & other) == 0) mask_row[m] |= mask_members[other];
  }
  std::vector<VertexSet> rows(codes.size());
#pragma omp parallel for schedule(static)
  for (int v = 0; v < nv; ++v) rows[v] = mask_row[nonfull[v]];
  return Graph(std::move(labels), std::move(rows));
}

}  // namespace

Graph build_graph(const ProductRingSpec& spec, int vertex_cap) {
  return build_graph_common(spec, vertex_cap, vertex_count(spec) >= 256);
}

Graph build_graph_serial(const ProductRingSpec& spec, int vertex_cap) {
  return build_graph_common(spec, vertex_cap, false);
}

VertexCode RingFactorModel::code_for_ideal(const ElementSet& members) const {
  const int n = spec.n();
  VertexCode code(n);
  for (int k = 0; k < n; ++k) {
    ElementSet image(factors[k].order);
    for (auto x = members.find_first(); x != ElementSet::npos; x = members.find_next(x))
      image.set(elem_coords[x][k]);
    if (image.count() == image.size()) {
      code[k] = kFull;
      continue;
    }
    const auto& proper = factor_proper_ideals[k];
    auto it = std::find(proper.begin(), proper.end(), image);
    if (it == proper.end())
      throw InvalidArgument("code_for_ideal: coordinate projection is not an ideal");
    code[k] = static_cast<int>(it - proper.begin());
  }
  if (!code_valid(spec, code))
    throw InvalidArgument("code_for_ideal: ideal is improper or inside the radical");
  return code;
}

RingFactorModel spec_from_ring(const FiniteRing& ring, int order_cap) {
  Decomposition dec = decompose(ring);
  RingFactorModel model;
  model.factors = std::move(dec.factors);
  model.elem_coords = std::move(dec.elem_coords);
  for (const auto& factor : model.factors) {
    IdealLattice lat = enumerate_ideals(factor, order_cap);
    std::vector<ElementSet> proper;
    proper.reserve(lat.ideals.size() - 1);
    for (int i = 0; i < lat.size(); ++i)
      if (i != lat.unit_index) proper.push_back(lat.ideals[i].members);
    model.spec.factors.push_back({factor.label, static_cast<int>(proper.size())});
    model.factor_proper_ideals.push_back(std::move(proper));
  }
  return model;
}

}  // namespace comaximal
