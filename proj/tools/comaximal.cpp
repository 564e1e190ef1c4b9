// Command-line front end: build finite commutative rings, construct their
// co-maximal ideal graphs, compute exact invariants, and run the full
// classification sweep.
//
// Exit codes: 0 success / all checks agree; 1 a computed invariant
// contradicts its closed-form prediction; 2 usage, parse, config, or I/O
// error; 3 a capacity or search-budget cap was hit; 130 interrupted.

#include <CLI11.hpp>

#include <algorithm>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "comaximal/atlas.hpp"
#include "comaximal/clique.hpp"
#include "comaximal/comaximal_graph.hpp"
#include "comaximal/config.hpp"
#include "comaximal/decompose.hpp"
#include "comaximal/errors.hpp"
#include "comaximal/factor_model.hpp"
#include "comaximal/graph_io.hpp"
#include "comaximal/graph_props.hpp"
#include "comaximal/lattice.hpp"
#include "comaximal/planarity.hpp"
#include "comaximal/ring.hpp"
#include "comaximal/theorems.hpp"

namespace {

using namespace comaximal;

volatile std::sig_atomic_t g_interrupted = 0;

void handle_sigint(int) { g_interrupted = 1; }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    size_t pos = 0;
    int value = std::stoi(trim(text), &pos);
    if (pos != trim(text).size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw InvalidArgument(what + ": not an integer: '" + trim(text) + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, what));
  if (out.empty()) throw InvalidArgument(what + ": empty list");
  return out;
}

// --poly takes "p:c0,c1,...,ck": characteristic p and the coefficients of a
// monic-after-normalization modulus polynomial, constant term first.
FiniteRing ring_from_poly(const std::string& text, int order_cap) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidArgument("--poly: expected 'p:c0,c1,...': '" + text + "'");
  int p = parse_int(text.substr(0, colon), "--poly characteristic");
  auto coeffs = parse_int_list(text.substr(colon + 1), "--poly coefficient");
  return make_poly_quotient(p, coeffs, order_cap);
}

// Recursive source grammar: zmod(N) | poly(p:c0,c1,...) | product(S1,S2,...).
FiniteRing ring_from_source(const std::string& text, int order_cap) {
  std::string s = trim(text);
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw InvalidArgument("--source: expected name(...): '" + s + "'");
  std::string name = trim(s.substr(0, open));
  std::string inner = s.substr(open + 1, s.size() - open - 2);
  if (name == "zmod") return make_zmod(parse_int(inner, "--source zmod"), order_cap);
  if (name == "poly") return ring_from_poly(inner, order_cap);
  if (name == "product") {
    std::vector<FiniteRing> factors;
    int depth = 0;
    std::string part;
    for (char ch : inner) {
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (ch == ',' && depth == 0) {
        factors.push_back(ring_from_source(part, order_cap));
        part.clear();
      } else {
        part += ch;
      }
    }
    if (trim(part).empty())
      throw InvalidArgument("--source: empty product factor in '" + s + "'");
    factors.push_back(ring_from_source(part, order_cap));
    return direct_product(factors, order_cap);
  }
  throw InvalidArgument("--source: unknown constructor '" + name + "'");
}

struct SourceOpts {
  int zmod = 0;
  std::string poly;
  std::string source;
  std::string factors;

  int given() const {
    return (zmod != 0) + !poly.empty() + !source.empty() + !factors.empty();
  }
};

void add_ring_source_options(CLI::App* cmd, SourceOpts& opts) {
  cmd->add_option("--zmod", opts.zmod, "Integers modulo N");
  cmd->add_option("--poly", opts.poly, "Polynomial quotient 'p:c0,c1,...'");
  cmd->add_option("--source", opts.source,
                  "Ring expression: zmod(N) | poly(p:c0,...) | product(...)");
}

FiniteRing ring_from_opts(const SourceOpts& opts, int order_cap) {
  if (opts.given() != 1)
    throw InvalidArgument("exactly one of --zmod/--poly/--source" +
                          std::string(opts.factors.empty() ? "" : "/--factors") +
                          " is required");
  if (opts.zmod != 0) return make_zmod(opts.zmod, order_cap);
  if (!opts.poly.empty()) return ring_from_poly(opts.poly, order_cap);
  return ring_from_source(opts.source, order_cap);
}

// Graph + model spec from either a concrete ring or a bare count tuple.
// For a concrete ring, model_to_ring maps each factor-model vertex (by code
// index) to the matching vertex of the concrete graph.
struct GraphInput {
  Graph graph;
  ProductRingSpec spec;
  std::optional<std::vector<int>> model_to_ring;
};

GraphInput graph_from_opts(const SourceOpts& opts, int order_cap, int vertex_cap) {
  GraphInput in;
  if (!opts.factors.empty()) {
    if (opts.given() != 1)
      throw InvalidArgument("--factors cannot be combined with a ring source");
    auto counts = parse_int_list(opts.factors, "--factors entry");
    for (int c : counts)
      if (c < 1) throw InvalidArgument("--factors entries must be >= 1");
    in.spec = ProductRingSpec::from_counts(counts);
    in.graph = build_graph(in.spec, vertex_cap);
  } else {
    FiniteRing ring = ring_from_opts(opts, order_cap);
    RingFactorModel model = spec_from_ring(ring, order_cap);
    in.spec = model.spec;
    auto lattice = enumerate_ideals(ring, order_cap);
    in.graph = comaximal_graph(lattice);
    auto vertex_ideals = comaximal_vertex_ideals(lattice);
    std::vector<int> to_ring(vertex_ideals.size(), -1);
    for (size_t v = 0; v < vertex_ideals.size(); ++v) {
      VertexCode code = model.code_for_ideal(lattice.ideals[vertex_ideals[v]].members);
      to_ring[code_index(model.spec, code)] = static_cast<int>(v);
    }
    in.model_to_ring = std::move(to_ring);
  }
  return in;
}

SubdivisionWitness remap_witness(SubdivisionWitness w, const std::vector<int>& to_ring) {
  for (int& v : w.branch_vertices) v = to_ring.at(v);
  for (auto& path : w.paths)
    for (int& v : path) v = to_ring.at(v);
  return w;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// Ring-order cap for the direct commands. COMAXIMAL_MAX_ORDER overrides the
// default, with the same validation the sweep configuration applies.
int env_order_cap() {
  SweepConfig config;
  apply_env_overrides(config);
  return config.ring_order_cap;
}

int cmd_ring(const SourceOpts& opts) {
  const int order_cap = env_order_cap();
  FiniteRing ring = ring_from_opts(opts, order_cap);
  auto lattice = enumerate_ideals(ring, order_cap);
  std::cout << "ring: " << ring.label << "\n";
  std::cout << "order: " << ring.order << "\n";
  std::cout << "ideals: " << lattice.size() << "\n";
  std::vector<std::string> maximal_labels;
  for (int m : lattice.maximal_indices) maximal_labels.push_back(ideal_label(lattice, m));
  std::sort(maximal_labels.begin(), maximal_labels.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  std::cout << "maximal: {";
  for (size_t i = 0; i < maximal_labels.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << maximal_labels[i];
  }
  std::cout << "}\n";
  std::cout << "J: " << ideal_label(lattice, lattice.jacobson) << "\n";
  bool local = is_local(lattice);
  std::cout << "local: " << yes_no(local) << "\n";
  std::cout << "idempotents: " << idempotents(ring).size() << "\n";
  RingFactorModel model = spec_from_ring(ring, order_cap);
  auto counts = model.spec.counts();
  std::cout << "factors: c=(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << counts[i];
  }
  std::cout << ")\n";
  Graph g = comaximal_graph(lattice);
  if (g.vertex_count() == 0)
    std::cout << "gamma: empty\n";
  else
    std::cout << "gamma: " << g.vertex_count() << " vertices, " << g.edge_count()
              << " edges\n";
  return 0;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  out.flush();
  if (!out) {
    std::cerr << "error: cannot write to '" << out_path << "'\n";
    return 2;
  }
  return 0;
}

int cmd_graph(const SourceOpts& opts, const std::string& format_name,
              const std::string& out_path) {
  auto format = parse_format(format_name);
  if (!format) throw InvalidArgument("--format: expected dot or json, got '" + format_name + "'");
  GraphInput in = graph_from_opts(opts, env_order_cap(), kDefaultGraphCap);
  return write_output(export_graph(in.graph, *format), out_path);
}

struct InvariantFlags {
  bool planar = false;
  bool omega = false;
  bool alpha = false;
  bool witness = false;

  bool any() const { return planar || omega || alpha || witness; }
};

int cmd_invariants(const SourceOpts& opts, InvariantFlags flags) {
  GraphInput in = graph_from_opts(opts, env_order_cap(), kDefaultGraphCap);
  const Graph& g = in.graph;
  const ProductRingSpec& spec = in.spec;
  if (!flags.any()) flags.planar = flags.omega = flags.alpha = true;

  std::cout << "vertices: " << g.vertex_count() << "\n";
  std::cout << "edges: " << g.edge_count() << "\n";

  bool disagree = false;

  std::optional<PlanarityResult> planarity;
  if (flags.planar || flags.witness) planarity = is_planar(g);

  if (flags.planar) {
    bool predicted = predicate_planar(spec);
    bool agree = planarity->planar == predicted;
    std::cout << "planar: " << yes_no(planarity->planar)
              << "; predicted: " << yes_no(predicted) << "; "
              << (agree ? "agree" : "DISAGREE") << "\n";
    if (!agree) disagree = true;
  }
  if (flags.omega) {
    try {
      std::cout << "omega: " << clique_number(g) << "\n";
    } catch (const BudgetError& e) {
      std::cout << "omega: budget exceeded (" << e.what() << ")\n";
    }
  }
  if (flags.alpha) {
    try {
      std::cout << "alpha: " << independence_number(g) << "\n";
    } catch (const BudgetError& e) {
      std::cout << "alpha: budget exceeded (" << e.what() << ")\n";
    }
  }
  if (flags.witness) {
    if (planarity->planar) {
      std::cout << "witness: none (planar graph)\n";
    } else {
      std::optional<SubdivisionWitness> witness;
      if (spec.n() >= 4) {
        witness = construct_k33_witness(spec);
        if (in.model_to_ring) witness = remap_witness(*witness, *in.model_to_ring);
      } else if (g.vertex_count() <= kDefaultWitnessCap) {
        witness = find_kuratowski(g);
      }
      if (!witness) {
        std::cout << "witness: skipped (graph larger than witness cap "
                  << kDefaultWitnessCap << ")\n";
      } else {
        std::string why;
        bool ok = verify_witness(g, *witness, &why);
        std::cout << "witness: " << to_string(witness->kind) << " ("
                  << (ok ? "verified" : "INVALID: " + why) << ")\n";
        if (!ok) disagree = true;
        auto label = [&](int v) { return g.label(v); };
        if (witness->kind == WitnessKind::K33) {
          std::cout << "side A:";
          for (int i = 0; i < 3; ++i) std::cout << " " << label(witness->branch_vertices[i]);
          std::cout << "\nside B:";
          for (int i = 3; i < 6; ++i) std::cout << " " << label(witness->branch_vertices[i]);
          std::cout << "\n";
        } else {
          std::cout << "branch:";
          for (int v : witness->branch_vertices) std::cout << " " << label(v);
          std::cout << "\n";
        }
        for (size_t k = 0; k < witness->paths.size(); ++k) {
          std::cout << "path " << (k + 1) << ":";
          for (int v : witness->paths[k]) std::cout << " " << label(v);
          std::cout << "\n";
        }
      }
    }
  }
  if (disagree) return 1;
  return 0;
}

SweepConfig config_from_path(const std::string& config_path) {
  SweepConfig config;
  if (!config_path.empty()) config = load_config(config_path);
  apply_env_overrides(config);
  return config;
}

int cmd_verify(const std::string& config_path) {
  SweepConfig config = config_from_path(config_path);
  SweepOptions options = to_sweep_options(config);
  SweepResult result = run_sweep(options);

  long long ok_entries = 0;
  long long agree_planar = 0, agree_universal = 0, agree_star = 0;
  long long counts_ok = 0, omega_entries = 0, omega_ok = 0;
  long long witness_entries = 0, witness_ok = 0, embedding_ok = 0, planar_entries = 0;
  long long capacity = 0, budget = 0;
  const ClassificationReport* first_bad = nullptr;
  for (const auto& entry : result.entries) {
    if (entry.status == EntryStatus::Capacity) { ++capacity; continue; }
    if (entry.status == EntryStatus::Budget) { ++budget; continue; }
    if (entry.status != EntryStatus::Ok) continue;
    ++ok_entries;
    agree_planar += entry.agree_planar;
    agree_universal += entry.agree_universal;
    agree_star += entry.agree_star;
    counts_ok += entry.counts_ok;
    if (entry.spec.n() >= 2) {
      ++omega_entries;
      omega_ok += entry.omega_ok;
    }
    if (entry.planar) {
      ++planar_entries;
      embedding_ok += entry.embedding_ok;
    } else {
      ++witness_entries;
      witness_ok += entry.witness_ok;
    }
    if (!entry.all_ok() && first_bad == nullptr) first_bad = &entry;
  }

  std::cout << "specs: " << result.entries.size() << "\n";
  std::cout << "planar agreement: " << agree_planar << "/" << ok_entries << "\n";
  std::cout << "universal-vertex agreement: " << agree_universal << "/" << ok_entries << "\n";
  std::cout << "star agreement: " << agree_star << "/" << ok_entries << "\n";
  std::cout << "count formulas: " << counts_ok << "/" << ok_entries << "\n";
  std::cout << "omega rule: " << omega_ok << "/" << omega_entries << "\n";
  std::cout << "embeddings validated: " << embedding_ok << "/" << planar_entries << "\n";
  std::cout << "witnesses verified: " << witness_ok << "/" << witness_entries << "\n";
  std::cout << "capped entries: " << (capacity + budget) << "\n";

  bool alpha_ok = true;
  bool alpha_skipped = false;
  try {
    alpha_ok = alpha_growth_check(2, config.max_proper_ideals, options.caps);
    if (config.max_factors >= 3)
      alpha_ok = alpha_ok && alpha_growth_check(3, std::min(config.max_proper_ideals, 4),
                                                options.caps);
  } catch (const CapacityError&) {
    alpha_skipped = true;
  } catch (const BudgetError&) {
    alpha_skipped = true;
  }
  std::cout << "alpha growth: "
            << (alpha_skipped ? "skipped (capped)" : alpha_ok ? "ok" : "FAIL") << "\n";

  long long zmod_ok = 0, zmod_done = 0;
  const ZmodCheck* first_bad_zmod = nullptr;
  for (const auto& check : result.zmod) {
    if (check.status != EntryStatus::Ok) continue;
    ++zmod_done;
    zmod_ok += check.equivalence_ok;
    if (!check.equivalence_ok && first_bad_zmod == nullptr) first_bad_zmod = &check;
  }
  std::cout << "zmod cross-checks: " << zmod_ok << "/" << zmod_done << "\n";

  bool pass = result.all_ok() && alpha_ok && !result.aborted;
  if (pass) {
    std::cout << "result: PASS\n";
    return 0;
  }
  std::cout << "result: FAIL";
  if (first_bad != nullptr) {
    auto counts = first_bad->spec.counts();
    std::cout << " (first disagreement: spec (";
    for (size_t i = 0; i < counts.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << counts[i];
    }
    std::cout << "))";
  } else if (first_bad_zmod != nullptr) {
    std::cout << " (first disagreement: zmod " << first_bad_zmod->modulus << ")";
  }
  std::cout << "\n";
  return 1;
}

int cmd_atlas(const std::string& config_path, const std::string& out_override) {
  SweepConfig config = config_from_path(config_path);
  std::string out_path = out_override.empty() ? config.atlas_out : out_override;
  SweepOptions options = to_sweep_options(config);
  options.abort_flag = &g_interrupted;
  std::signal(SIGINT, handle_sigint);
  SweepResult result = run_sweep(options);
  std::signal(SIGINT, SIG_DFL);
  int rc = write_output(to_atlas_jsonl(result), out_path);
  if (rc != 0) return rc;
  std::cerr << "atlas: " << result.entries.size() << " spec records, "
            << result.zmod.size() << " zmod records -> "
            << (out_path.empty() ? std::string("stdout") : out_path) << "\n";
  if (result.aborted) {
    std::cerr << "atlas: interrupted, partial output written\n";
    return 130;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Co-maximal ideal graphs of finite commutative rings"};
  app.require_subcommand(1);

  SourceOpts ring_opts;
  auto* ring_cmd = app.add_subcommand("ring", "Describe a ring and its ideal lattice");
  add_ring_source_options(ring_cmd, ring_opts);

  SourceOpts graph_opts;
  std::string graph_format = "dot";
  std::string graph_out;
  auto* graph_cmd = app.add_subcommand("graph", "Export the co-maximal ideal graph");
  add_ring_source_options(graph_cmd, graph_opts);
  graph_cmd->add_option("--factors", graph_opts.factors,
                        "Model spec: per-factor proper-ideal counts 'c1,c2,...'");
  graph_cmd->add_option("--format", graph_format, "Output format: dot or json");
  graph_cmd->add_option("--out", graph_out, "Output path (default stdout)");

  SourceOpts inv_opts;
  InvariantFlags inv_flags;
  auto* inv_cmd = app.add_subcommand("invariants", "Compute exact graph invariants");
  add_ring_source_options(inv_cmd, inv_opts);
  inv_cmd->add_option("--factors", inv_opts.factors,
                      "Model spec: per-factor proper-ideal counts 'c1,c2,...'");
  inv_cmd->add_flag("--planar", inv_flags.planar, "Planarity plus prediction agreement");
  inv_cmd->add_flag("--omega", inv_flags.omega, "Clique number");
  inv_cmd->add_flag("--alpha", inv_flags.alpha, "Independence number");
  inv_cmd->add_flag("--witness", inv_flags.witness, "Kuratowski subdivision witness");

  std::string verify_config;
  auto* verify_cmd = app.add_subcommand("verify", "Run the classification sweep and report");
  verify_cmd->add_option("--config", verify_config, "Sweep config file");

  std::string atlas_config;
  std::string atlas_out;
  auto* atlas_cmd = app.add_subcommand("atlas", "Write the sweep as JSON lines");
  atlas_cmd->add_option("--config", atlas_config, "Sweep config file");
  atlas_cmd->add_option("--out", atlas_out, "Output path (overrides config)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (ring_cmd->parsed()) return cmd_ring(ring_opts);
    if (graph_cmd->parsed()) return cmd_graph(graph_opts, graph_format, graph_out);
    if (inv_cmd->parsed()) return cmd_invariants(inv_opts, inv_flags);
    if (verify_cmd->parsed()) return cmd_verify(verify_config);
    if (atlas_cmd->parsed()) return cmd_atlas(atlas_config, atlas_out);
  } catch (const CapacityError& e) {
    std::cerr << "error: capacity: " << e.what() << "\n";
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "error: search budget: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
