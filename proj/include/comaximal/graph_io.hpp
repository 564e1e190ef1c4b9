#pragma once

#include <optional>
#include <string>

#include "comaximal/graph.hpp"

namespace comaximal {

enum class ExportFormat { Dot, Json };

/// "dot" or "json"; anything else is nullopt.
std::optional<ExportFormat> parse_format(const std::string& name);

/// DOT export: one quoted vertex label per line in vertex order, then one
/// `"a" -- "b";` line per edge in sorted (u, v) index order. Byte-stable.
std::string to_dot(const Graph& g);

/// JSON export: {"edges": [[u, v], ...], "labels": [...]} with edges sorted
/// lexicographically by index pair. Compact, one trailing newline.
std::string to_json(const Graph& g);

std::string export_graph(const Graph& g, ExportFormat format);

}  // namespace comaximal
