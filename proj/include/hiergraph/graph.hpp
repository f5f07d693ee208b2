#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hiergraph/element.hpp"
#include "hiergraph/group_view.hpp"

namespace hiergraph {

/// POW, EPOW and COM are the three graphs of the hierarchy; OTHER tags
/// synthetic graphs (reconstructions, test fixtures).
enum class GraphKind { Pow, EPow, Com, Other };

std::string_view kind_name(GraphKind kind);  // "pow", "epow", "com", "other"
GraphKind parse_kind(std::string_view text);

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph with a kind tag and ordered vertex labels.
class HierarchyGraph {
 public:
  /// Edgeless graph. Throws BadParam on duplicate labels.
  HierarchyGraph(GraphKind kind, std::string family, std::vector<std::string> labels);
  /// Throws BadParam on out-of-range or loop edges.
  static HierarchyGraph from_edges(GraphKind kind, std::string family,
                                   std::vector<std::string> labels, const std::vector<Edge>& edges);

  GraphKind kind() const noexcept { return kind_; }
  const std::string& family() const noexcept { return family_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t size() const noexcept { return labels_.size(); }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * labels_.size() + j] != 0; }
  std::size_t degree(std::size_t i) const;
  std::size_t edge_count() const;
  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<Edge> edges() const;
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool operator==(const HierarchyGraph&) const = default;

 private:
  void set_edge(std::size_t i, std::size_t j);

  GraphKind kind_;
  std::string family_;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> adj_;  // row-major, symmetric, zero diagonal
};

// Adjacency predicates on distinct elements of one family. They use the
// closed forms of each family and throw FamilyMismatch across families.

bool adj_com(const GroupElement& x, const GroupElement& y);
bool adj_pow(const GroupElement& x, const GroupElement& y);
bool adj_epow(const GroupElement& x, const GroupElement& y);
/// x is a power of y.
bool in_cyclic_subgroup(const GroupElement& x, const GroupElement& y);

// Generic oracles: power enumeration, and subgroup closure inside a closed
// view followed by the cyclicity test.

bool adj_pow_enumerated(const GroupElement& x, const GroupElement& y);
/// Throws WindowNotClosed on windows.
bool adj_epow_closure(const FiniteGroupView& view, std::size_t i, std::size_t j);

bool adjacent(const GroupElement& x, const GroupElement& y, GraphKind kind);

enum class AdjacencyPath { ClosedForm, Generic };

/// Graph over all view elements in view order.
HierarchyGraph build_graph(const FiniteGroupView& view, GraphKind kind,
                           AdjacencyPath path = AdjacencyPath::ClosedForm);

/// Throw LabelMismatch unless both graphs have identical label lists.
bool edge_set_equal(const HierarchyGraph& g1, const HierarchyGraph& g2);
bool edge_subset(const HierarchyGraph& g1, const HierarchyGraph& g2);

/// First edge of `larger` (lexicographic order) that `smaller` lacks and
/// that satisfies `accept`.
template <typename Accept>
std::optional<Edge> first_missing_edge(const HierarchyGraph& smaller, const HierarchyGraph& larger,
                                       Accept accept) {
  edge_subset(smaller, larger);  // label check
  for (const auto& [i, j] : larger.edges())
    if (!smaller.adjacent(i, j) && accept(i, j)) return Edge{i, j};
  return std::nullopt;
}
std::optional<Edge> first_missing_edge(const HierarchyGraph& smaller, const HierarchyGraph& larger);

std::vector<std::size_t> universal_vertices(const HierarchyGraph& g);

/// (universal-vertex count, clique sizes) certifying g = (K_a1 u ... u K_ak) join K_u.
struct DecompositionSignature {
  std::int64_t universal = 0;
  std::vector<std::int64_t> cliques;  // non-increasing

  bool operator==(const DecompositionSignature&) const = default;
  std::string to_string() const;  // "(2, {6,2,2,2,2})"
};

/// nullopt when some component left after removing the universal vertices
/// is not a clique.
std::optional<DecompositionSignature> decomposition_signature(const HierarchyGraph& g);

/// The graph (K_a1 u ... u K_ak) join K_u, universal vertices first.
HierarchyGraph graph_from_signature(const DecompositionSignature& sig);

/// Label order is inherited from g. Throws UnknownLabel.
HierarchyGraph induced_subgraph(const HierarchyGraph& g, const std::vector<std::string>& labels);

struct IsoOptions {
  std::size_t max_backtrack_vertices = 16;
};

struct IsoResult {
  bool isomorphic = false;
  /// mapping[i] is the g2 vertex matched to g1 vertex i (when isomorphic).
  std::vector<std::size_t> mapping;
  bool via_signature = false;
};

/// Signature fast path when both graphs decompose; otherwise cheap
/// invariants, then backtracking (TooLarge above the vertex bound).
IsoResult graphs_isomorphic(const HierarchyGraph& g1, const HierarchyGraph& g2,
                            const IsoOptions& options = {});

/// Degree-partitioned backtracking search only. Throws TooLarge above the bound.
IsoResult backtracking_isomorphic(const HierarchyGraph& g1, const HierarchyGraph& g2,
                                  const IsoOptions& options = {});

/// Whether mapping is a bijection carrying edges to edges and non-edges to
/// non-edges.
bool is_isomorphism(const HierarchyGraph& g1, const HierarchyGraph& g2,
                    const std::vector<std::size_t>& mapping);

}  // namespace hiergraph
