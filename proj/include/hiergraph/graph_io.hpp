#pragma once

#include <string>
#include <string_view>

#include "hiergraph/graph.hpp"

namespace hiergraph {

enum class ExportFormat { Dot, Json, Csv };

ExportFormat parse_export_format(std::string_view text);

/// {"kind", "family", "vertices": [labels], "edges": [[i, j], ...]} with
/// i < j, lexicographically sorted; two-space indentation, trailing newline.
std::string to_json(const HierarchyGraph& g);
/// Undirected DOT with quoted labels and sorted edges.
std::string to_dot(const HierarchyGraph& g);
/// One "i,j" line per edge, same order as the JSON edge list.
std::string to_csv(const HierarchyGraph& g);

std::string export_graph(const HierarchyGraph& g, ExportFormat format);

/// Rebuilds a graph from to_json output. Throws Parse on schema violations.
HierarchyGraph graph_from_json(std::string_view text);

}  // namespace hiergraph
