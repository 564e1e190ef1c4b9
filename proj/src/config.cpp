#include "comaximal/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "comaximal/errors.hpp"

namespace comaximal {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

long long parse_int(const std::string& value, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("config: bad integer for " + key + ": '" + value + "'");
  }
}

int parse_positive(const std::string& value, const std::string& key) {
  const long long v = parse_int(value, key);
  if (v < 1 || v > 1'000'000'000)
    throw InvalidArgument("config: " + key + " must be a positive integer, got " + value);
  return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& value, const std::string& key) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw InvalidArgument("config: empty list entry for " + key);
    out.push_back(static_cast<int>(parse_int(item, key)));
  }
  return out;
}

}  // namespace

SweepConfig parse_config_text(const std::string& text) {
  SweepConfig config;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument("config line " + std::to_string(lineno) +
                            ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "max_factors") {
      config.max_factors = parse_positive(value, key);
    } else if (key == "max_proper_ideals") {
      config.max_proper_ideals = parse_positive(value, key);
    } else if (key == "zmod_list") {
      config.zmod_list = value.empty() ? std::vector<int>{} : parse_int_list(value, key);
      for (int n : config.zmod_list)
        if (n < 2)
          throw InvalidArgument("config: zmod_list entries must be >= 2, got " +
                                std::to_string(n));
    } else if (key == "ring_order_cap") {
      config.ring_order_cap = parse_positive(value, key);
    } else if (key == "graph_vertex_cap") {
      config.graph_vertex_cap = parse_positive(value, key);
    } else if (key == "witness_cap") {
      config.witness_cap = parse_positive(value, key);
    } else if (key == "search_budget") {
      config.search_budget = parse_int(value, key);
      if (config.search_budget < 1)
        throw InvalidArgument("config: search_budget must be positive");
    } else if (key == "workers") {
      const long long v = parse_int(value, key);
      if (v < 0 || v > 4096) throw InvalidArgument("config: workers must be in 0..4096");
      config.workers = static_cast<int>(v);
    } else if (key == "atlas_out") {
      if (value.empty()) throw InvalidArgument("config: atlas_out must not be empty");
      config.atlas_out = value;
    } else {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": unknown key '" +
                            key + "'");
    }
  }
  return config;
}

SweepConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("config: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

void apply_env_overrides(SweepConfig& config) {
  if (const char* v = std::getenv("COMAXIMAL_MAX_ORDER"))
    config.ring_order_cap = parse_positive(v, "COMAXIMAL_MAX_ORDER");
  if (const char* v = std::getenv("COMAXIMAL_WORKERS")) {
    const long long w = parse_int(v, "COMAXIMAL_WORKERS");
    if (w < 0 || w > 4096) throw InvalidArgument("COMAXIMAL_WORKERS must be in 0..4096");
    config.workers = static_cast<int>(w);
  }
}

SweepOptions to_sweep_options(const SweepConfig& config) {
  SweepOptions options;
  options.max_factors = config.max_factors;
  options.max_proper_ideals = config.max_proper_ideals;
  options.zmod_list = config.zmod_list;
  options.caps.ring_order_cap = config.ring_order_cap;
  options.caps.graph_vertex_cap = config.graph_vertex_cap;
  options.caps.witness_cap = config.witness_cap;
  options.caps.search_budget = config.search_budget;
  options.workers = config.workers;
  return options;
}

}  // namespace comaximal
