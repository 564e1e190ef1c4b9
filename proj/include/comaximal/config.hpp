#pragma once

#include <string>
#include <vector>

#include "comaximal/theorems.hpp"

namespace comaximal {

/// Sweep configuration, loadable from a `key = value` text file:
///
///   max_factors = 4
///   max_proper_ideals = 5
///   zmod_list = 12, 30, 60, 64, 210, 720
///   ring_order_cap = 4096
///   graph_vertex_cap = 20000
///   witness_cap = 64
///   search_budget = 10000000
///   workers = 0
///   atlas_out = atlas.jsonl
///
/// '#' starts a comment; blank lines are ignored; unknown keys are errors.
struct SweepConfig {
  int max_factors = 4;
  int max_proper_ideals = 5;
  std::vector<int> zmod_list = {12, 30, 60, 64, 210, 720};
  int ring_order_cap = kDefaultOrderCap;
  int graph_vertex_cap = kDefaultGraphCap;
  int witness_cap = kDefaultWitnessCap;
  long long search_budget = kDefaultSearchBudget;
  int workers = 0;  // 0 = all available
  std::string atlas_out = "atlas.jsonl";
};

/// Parse from text / file. Throws InvalidArgument with a line-numbered
/// message on malformed input, unknown keys, or out-of-range values.
SweepConfig parse_config_text(const std::string& text);
SweepConfig load_config(const std::string& path);

/// Environment overrides, caps only: COMAXIMAL_MAX_ORDER replaces
/// ring_order_cap, COMAXIMAL_WORKERS replaces workers. Malformed values
/// throw InvalidArgument.
void apply_env_overrides(SweepConfig& config);

SweepOptions to_sweep_options(const SweepConfig& config);

}  // namespace comaximal
