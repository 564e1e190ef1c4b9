#include "comaximal/graph_io.hpp"

#include <nlohmann/json.hpp>

namespace comaximal {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::optional<ExportFormat> parse_format(const std::string& name) {
  if (name == "dot") return ExportFormat::Dot;
  if (name == "json") return ExportFormat::Json;
  return std::nullopt;
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out += "  " + quoted(g.label(v)) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + quoted(g.label(u)) + " -- " + quoted(g.label(v)) + ";\n";
  out += "}\n";
  return out;
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["labels"] = g.labels();
  j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump() + "\n";
}

std::string export_graph(const Graph& g, ExportFormat format) {
  return format == ExportFormat::Dot ? to_dot(g) : to_json(g);
}

}  // namespace comaximal
