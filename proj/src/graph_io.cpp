#include "hiergraph/graph_io.hpp"

#include <json.hpp>
#include <sstream>

#include "hiergraph/error.hpp"

namespace hiergraph {

using ordered_json = nlohmann::ordered_json;

ExportFormat parse_export_format(std::string_view text) {
  if (text == "dot") return ExportFormat::Dot;
  if (text == "json") return ExportFormat::Json;
  if (text == "csv") return ExportFormat::Csv;
  throw Error(ErrorCode::Parse, "unknown format '" + std::string(text) + "'");
}

std::string to_json(const HierarchyGraph& g) {
  ordered_json j;
  j["kind"] = kind_name(g.kind());
  j["family"] = g.family();
  j["vertices"] = g.labels();
  ordered_json edges = ordered_json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

namespace {
std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}
}  // namespace

std::string to_dot(const HierarchyGraph& g) {
  std::ostringstream os;
  os << "graph " << quoted(std::string(kind_name(g.kind())) + ":" + g.family()) << " {\n";
  for (const auto& l : g.labels()) os << "  " << quoted(l) << ";\n";
  for (const auto& [a, b] : g.edges())
    os << "  " << quoted(g.labels()[a]) << " -- " << quoted(g.labels()[b]) << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const HierarchyGraph& g) {
  std::ostringstream os;
  for (const auto& [a, b] : g.edges()) os << a << ',' << b << '\n';
  return os.str();
}

std::string export_graph(const HierarchyGraph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::Json: return to_json(g);
    case ExportFormat::Csv: return to_csv(g);
  }
  return {};
}

HierarchyGraph graph_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
  try {
    const GraphKind kind = parse_kind(j.at("kind").get<std::string>());
    auto labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Parse, "edge must be [i, j]");
      const auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
      if (a >= b) throw Error(ErrorCode::Parse, "edge endpoints must satisfy i < j");
      edges.emplace_back(a, b);
    }
    return HierarchyGraph::from_edges(kind, j.at("family").get<std::string>(), std::move(labels),
                                      edges);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

}  // namespace hiergraph
