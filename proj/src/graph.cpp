#include "hiergraph/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hiergraph/error.hpp"

namespace hiergraph {

std::string_view kind_name(GraphKind kind) {
  switch (kind) {
    case GraphKind::Pow: return "pow";
    case GraphKind::EPow: return "epow";
    case GraphKind::Com: return "com";
    case GraphKind::Other: return "other";
  }
  return "other";
}

GraphKind parse_kind(std::string_view text) {
  if (text == "pow" || text == "POW") return GraphKind::Pow;
  if (text == "epow" || text == "EPOW") return GraphKind::EPow;
  if (text == "com" || text == "COM") return GraphKind::Com;
  if (text == "other") return GraphKind::Other;
  throw Error(ErrorCode::Parse, "unknown graph kind '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// HierarchyGraph

HierarchyGraph::HierarchyGraph(GraphKind kind, std::string family, std::vector<std::string> labels)
    : kind_(kind),
      family_(std::move(family)),
      labels_(std::move(labels)),
      adj_(labels_.size() * labels_.size(), 0) {
  std::set<std::string_view> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw Error(ErrorCode::BadParam, "duplicate vertex label " + l);
}

HierarchyGraph HierarchyGraph::from_edges(GraphKind kind, std::string family,
                                          std::vector<std::string> labels,
                                          const std::vector<Edge>& edges) {
  HierarchyGraph g(kind, std::move(family), std::move(labels));
  for (const auto& [i, j] : edges) g.set_edge(i, j);
  return g;
}

void HierarchyGraph::set_edge(std::size_t i, std::size_t j) {
  const std::size_t n = labels_.size();
  if (i >= n || j >= n) throw Error(ErrorCode::BadParam, "edge endpoint out of range");
  if (i == j) throw Error(ErrorCode::BadParam, "self-loop at " + labels_[i]);
  adj_[i * n + j] = adj_[j * n + i] = 1;
}

std::size_t HierarchyGraph::degree(std::size_t i) const {
  const std::size_t n = labels_.size();
  return static_cast<std::size_t>(
      std::count(adj_.begin() + static_cast<std::ptrdiff_t>(i * n),
                 adj_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n), std::uint8_t{1}));
}

std::size_t HierarchyGraph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), std::uint8_t{1})) / 2;
}

std::vector<Edge> HierarchyGraph::edges() const {
  std::vector<Edge> out;
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::optional<std::size_t> HierarchyGraph::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

// ---------------------------------------------------------------------------
// Predicates

namespace {

void require_same_family(const GroupElement& x, const GroupElement& y) {
  if (!same_family(x, y))
    throw Error(ErrorCode::FamilyMismatch, elem_label(x) + " vs " + elem_label(y));
}

bool divides(std::int64_t a, std::int64_t b) { return b % a == 0; }

// Rotation part and coset bit for the semidirect families.
struct Split {
  RationalAngle angle;
  bool coset;
};

std::optional<Split> split_finite_semidirect(const GroupElement& x) {
  switch (x.family()) {
    case Family::Dihedral: return Split{x.as<DihedralElem>().angle, x.as<DihedralElem>().flip};
    case Family::Dicyclic: return Split{x.as<DicyclicElem>().angle, x.as<DicyclicElem>().jpart};
    case Family::LocallyDihedral:
      return Split{x.as<LocallyDihedralElem>().angle.angle(), x.as<LocallyDihedralElem>().flip};
    case Family::LocallyQuaternion:
      return Split{x.as<LocallyQuaternionElem>().angle.angle(),
                   x.as<LocallyQuaternionElem>().jpart};
    default: return std::nullopt;
  }
}

bool is_quaternionic(Family f) {
  return f == Family::Dicyclic || f == Family::LocallyQuaternion ||
         f == Family::InfiniteQuaternion;
}

// x in <y> for y = x_b (a rotation of the infinite quaternion group).
bool in_toral_cyclic(const ToralParam& a, const ToralParam& b) {
  if (b.is_torsion())
    return a.is_torsion() && divides(angle_order(a.angle()), angle_order(b.angle()));
  // Solve a = b^k: the free parts fix k.
  std::size_t lead = 0;
  while (b.free()[lead] == 0) ++lead;
  if (a.free()[lead] % b.free()[lead] != 0) return false;
  const std::int64_t k = a.free()[lead] / b.free()[lead];
  return b.pow(k) == a;
}

// All elements of <gens> for torsion elements, by worklist saturation.
std::vector<GroupElement> generated_elements(const std::vector<GroupElement>& gens) {
  constexpr std::size_t kCap = std::size_t{1} << 20;
  std::set<GroupElement> seen{identity_like(gens.front())};
  std::vector<GroupElement> work{identity_like(gens.front())};
  while (!work.empty()) {
    GroupElement a = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      GroupElement b = elem_mul(a, g);
      if (seen.insert(b).second) {
        if (seen.size() > kCap) throw Error(ErrorCode::TooLarge, "generated subgroup too large");
        work.push_back(std::move(b));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool in_powers_enumerated(const GroupElement& x, const GroupElement& y) {
  const Order o = elem_order(y);
  if (o.is_infinite())
    throw Error(ErrorCode::BadParam, "cannot enumerate powers of infinite-order " + elem_label(y));
  GroupElement p = identity_like(y);
  for (std::int64_t k = 0; k < o.value(); ++k) {
    if (p == x) return true;
    p = elem_mul(p, y);
  }
  return false;
}

}  // namespace

bool adj_com(const GroupElement& x, const GroupElement& y) {
  return elem_mul(x, y) == elem_mul(y, x);
}

bool in_cyclic_subgroup(const GroupElement& x, const GroupElement& y) {
  require_same_family(x, y);
  if (is_identity(x) || x == y) return true;
  const Family f = y.family();
  if (f == Family::Cyclic)
    return divides(angle_order(x.as<CyclicElem>().angle), angle_order(y.as<CyclicElem>().angle));
  if (auto sy = split_finite_semidirect(y)) {
    const auto sx = *split_finite_semidirect(x);
    if (sy->coset) {
      if (!is_quaternionic(f)) return false;  // <y> = {e, y}
      // <y> = {e, z, y, y z}
      if (!sx.coset) return sx.angle == RationalAngle::half();
      return sx.angle == sy->angle + RationalAngle::half();
    }
    return !sx.coset && divides(angle_order(sx.angle), angle_order(sy->angle));
  }
  if (f == Family::InfiniteDihedral) {
    const auto &a = x.as<InfiniteDihedralElem>(), &b = y.as<InfiniteDihedralElem>();
    if (b.flip || b.shift == 0 || a.flip) return false;
    return a.shift % b.shift == 0;
  }
  if (f == Family::InfiniteQuaternion) {
    const auto &a = x.as<InfiniteQuaternionElem>(), &b = y.as<InfiniteQuaternionElem>();
    if (b.jpart) {
      const ToralParam z = ToralParam::torsion(RationalAngle::half(), b.param.rank());
      if (!a.jpart) return a.param == z;
      return a.param == toral_mul(b.param, z);
    }
    return !a.jpart && in_toral_cyclic(a.param, b.param);
  }
  return in_powers_enumerated(x, y);  // products of finite groups
}

bool adj_pow(const GroupElement& x, const GroupElement& y) {
  return in_cyclic_subgroup(x, y) || in_cyclic_subgroup(y, x);
}

bool adj_epow(const GroupElement& x, const GroupElement& y) {
  require_same_family(x, y);
  if (!adj_com(x, y)) return false;
  if (is_identity(x) || is_identity(y)) return true;
  const Family f = x.family();
  switch (f) {
    case Family::Cyclic:
      return true;
    case Family::Dihedral:
    case Family::LocallyDihedral:
      // A commuting pair with a flip and a non-identity partner spans C2 x C2.
      return !split_finite_semidirect(x)->coset && !split_finite_semidirect(y)->coset;
    case Family::Dicyclic:
    case Family::LocallyQuaternion:
      // Commuting pairs lie inside a cyclic <c x> or in the locally cyclic rotations.
      return true;
    case Family::InfiniteDihedral:
      return !x.as<InfiniteDihedralElem>().flip && !y.as<InfiniteDihedralElem>().flip;
    case Family::InfiniteQuaternion: {
      const auto &a = x.as<InfiniteQuaternionElem>(), &b = y.as<InfiniteQuaternionElem>();
      if (!a.jpart && !b.jpart) return cyclic_two_gen_abelian(a.param, b.param);
      return true;
    }
    case Family::Product: {
      const auto group = generated_elements({x, y});
      const auto n = static_cast<std::int64_t>(group.size());
      return std::any_of(group.begin(), group.end(), [n](const GroupElement& g) {
        return elem_order(g) == Order::finite(n);
      });
    }
  }
  return false;
}

bool adj_pow_enumerated(const GroupElement& x, const GroupElement& y) {
  require_same_family(x, y);
  const auto member = [](const GroupElement& a, const GroupElement& b) {
    return elem_order(b).is_finite() ? in_powers_enumerated(a, b) : in_cyclic_subgroup(a, b);
  };
  return member(x, y) || member(y, x);
}

bool adj_epow_closure(const FiniteGroupView& view, std::size_t i, std::size_t j) {
  view.require_closed("enhanced power adjacency (generic path)");
  return is_cyclic_subgroup(view, subgroup_closure(view, {i, j}));
}

bool adjacent(const GroupElement& x, const GroupElement& y, GraphKind kind) {
  switch (kind) {
    case GraphKind::Pow: return adj_pow(x, y);
    case GraphKind::EPow: return adj_epow(x, y);
    case GraphKind::Com: return adj_com(x, y);
    case GraphKind::Other: break;
  }
  throw Error(ErrorCode::BadParam, "no adjacency predicate for kind other");
}

HierarchyGraph build_graph(const FiniteGroupView& view, GraphKind kind, AdjacencyPath path) {
  if (kind == GraphKind::EPow && path == AdjacencyPath::Generic)
    view.require_closed("enhanced power adjacency (generic path)");
  std::vector<Edge> edges;
  const std::size_t n = view.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto &x = view.element(i), &y = view.element(j);
      bool adj = false;
      if (path == AdjacencyPath::Generic && kind == GraphKind::Pow)
        adj = adj_pow_enumerated(x, y);
      else if (path == AdjacencyPath::Generic && kind == GraphKind::EPow)
        adj = adj_epow_closure(view, i, j);
      else
        adj = adjacent(x, y, kind);
      if (adj) edges.emplace_back(i, j);
    }
  }
  return HierarchyGraph::from_edges(kind, view.name(), view.labels(), edges);
}

// ---------------------------------------------------------------------------
// Edge-set comparison

namespace {
void require_same_labels(const HierarchyGraph& g1, const HierarchyGraph& g2) {
  if (g1.labels() != g2.labels())
    throw Error(ErrorCode::LabelMismatch, "graphs over different vertex lists (" + g1.family() +
                                              " vs " + g2.family() + ")");
}
}  // namespace

bool edge_set_equal(const HierarchyGraph& g1, const HierarchyGraph& g2) {
  require_same_labels(g1, g2);
  return g1.edges() == g2.edges();
}

bool edge_subset(const HierarchyGraph& g1, const HierarchyGraph& g2) {
  require_same_labels(g1, g2);
  for (const auto& [i, j] : g1.edges())
    if (!g2.adjacent(i, j)) return false;
  return true;
}

std::optional<Edge> first_missing_edge(const HierarchyGraph& smaller, const HierarchyGraph& larger) {
  return first_missing_edge(smaller, larger, [](std::size_t, std::size_t) { return true; });
}

// ---------------------------------------------------------------------------
// Structure

std::vector<std::size_t> universal_vertices(const HierarchyGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) + 1 == g.size()) out.push_back(i);
  return out;
}

std::string DecompositionSignature::to_string() const {
  std::ostringstream os;
  os << '(' << universal << ", {";
  for (std::size_t i = 0; i < cliques.size(); ++i) os << (i ? "," : "") << cliques[i];
  os << "})";
  return os.str();
}

namespace {

struct Decomposition {
  std::vector<std::size_t> universal;
  std::vector<std::vector<std::size_t>> cliques;  // sorted by size desc, then first vertex
};

std::optional<Decomposition> decompose(const HierarchyGraph& g) {
  Decomposition d;
  d.universal = universal_vertices(g);
  std::vector<bool> removed(g.size(), false);
  for (auto u : d.universal) removed[u] = true;
  std::vector<bool> visited(removed);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (visited[s]) continue;
    std::vector<std::size_t> comp{s};
    visited[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t v = 0; v < g.size(); ++v)
        if (!visited[v] && g.adjacent(comp[k], v)) {
          visited[v] = true;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        if (!g.adjacent(comp[a], comp[b])) return std::nullopt;
    d.cliques.push_back(std::move(comp));
  }
  std::stable_sort(d.cliques.begin(), d.cliques.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return d;
}

}  // namespace

std::optional<DecompositionSignature> decomposition_signature(const HierarchyGraph& g) {
  auto d = decompose(g);
  if (!d) return std::nullopt;
  DecompositionSignature sig;
  sig.universal = static_cast<std::int64_t>(d->universal.size());
  for (const auto& c : d->cliques) sig.cliques.push_back(static_cast<std::int64_t>(c.size()));
  return sig;
}

HierarchyGraph graph_from_signature(const DecompositionSignature& sig) {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> blocks;
  for (std::int64_t i = 0; i < sig.universal; ++i) labels.push_back("u" + std::to_string(i));
  for (std::size_t c = 0; c < sig.cliques.size(); ++c) {
    blocks.emplace_back();
    for (std::int64_t i = 0; i < sig.cliques[c]; ++i) {
      blocks.back().push_back(labels.size());
      labels.push_back("k" + std::to_string(c) + "." + std::to_string(i));
    }
  }
  std::vector<Edge> edges;
  const auto u = static_cast<std::size_t>(sig.universal);
  for (std::size_t i = 0; i < u; ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) edges.emplace_back(i, j);
  for (const auto& b : blocks)
    for (std::size_t a = 0; a < b.size(); ++a)
      for (std::size_t c = a + 1; c < b.size(); ++c) edges.emplace_back(b[a], b[c]);
  return HierarchyGraph::from_edges(GraphKind::Other, "signature" + sig.to_string(),
                                    std::move(labels), edges);
}

HierarchyGraph induced_subgraph(const HierarchyGraph& g, const std::vector<std::string>& labels) {
  std::vector<bool> keep(g.size(), false);
  for (const auto& l : labels) {
    auto idx = g.index_of(l);
    if (!idx) throw Error(ErrorCode::UnknownLabel, "no vertex labelled " + l);
    keep[*idx] = true;
  }
  std::vector<std::size_t> old_index;
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) {
      old_index.push_back(i);
      kept.push_back(g.labels()[i]);
    }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < old_index.size(); ++a)
    for (std::size_t b = a + 1; b < old_index.size(); ++b)
      if (g.adjacent(old_index[a], old_index[b])) edges.emplace_back(a, b);
  return HierarchyGraph::from_edges(g.kind(), g.family(), std::move(kept), edges);
}

// ---------------------------------------------------------------------------
// Isomorphism

bool is_isomorphism(const HierarchyGraph& g1, const HierarchyGraph& g2,
                    const std::vector<std::size_t>& mapping) {
  const std::size_t n = g1.size();
  if (g2.size() != n || mapping.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto m : mapping) {
    if (m >= n || hit[m]) return false;
    hit[m] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g1.adjacent(i, j) != g2.adjacent(mapping[i], mapping[j])) return false;
  return true;
}

namespace {

std::vector<std::size_t> degree_sequence(const HierarchyGraph& g) {
  std::vector<std::size_t> d(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) d[i] = g.degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

class Backtracker {
 public:
  Backtracker(const HierarchyGraph& g1, const HierarchyGraph& g2) : g1_(g1), g2_(g2) {
    const std::size_t n = g1.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Highest degree first; ties keep index order.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return g1.degree(a) > g1.degree(b); });
    map_.assign(n, kUnset);
    used_.assign(n, false);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < g2_.size(); ++w) {
      if (used_[w] || g2_.degree(w) != g1_.degree(v)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order_[k];
        ok = g1_.adjacent(u, v) == g2_.adjacent(map_[u], w);
      }
      if (!ok) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kUnset;
    }
    return false;
  }

  const HierarchyGraph& g1_;
  const HierarchyGraph& g2_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

IsoResult backtracking_isomorphic(const HierarchyGraph& g1, const HierarchyGraph& g2,
                                  const IsoOptions& options) {
  if (g1.size() > options.max_backtrack_vertices || g2.size() > options.max_backtrack_vertices)
    throw Error(ErrorCode::TooLarge, "backtracking isomorphism limited to " +
                                         std::to_string(options.max_backtrack_vertices) +
                                         " vertices");
  IsoResult r;
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return r;
  if (auto m = Backtracker(g1, g2).run()) {
    r.isomorphic = true;
    r.mapping = std::move(*m);
  }
  return r;
}

IsoResult graphs_isomorphic(const HierarchyGraph& g1, const HierarchyGraph& g2,
                            const IsoOptions& options) {
  IsoResult r;
  const auto d1 = decompose(g1), d2 = decompose(g2);
  if (d1 && d2) {
    r.via_signature = true;
    if (d1->universal.size() != d2->universal.size() ||
        d1->cliques.size() != d2->cliques.size())
      return r;
    for (std::size_t c = 0; c < d1->cliques.size(); ++c)
      if (d1->cliques[c].size() != d2->cliques[c].size()) return r;
    r.isomorphic = true;
    r.mapping.assign(g1.size(), 0);
    for (std::size_t k = 0; k < d1->universal.size(); ++k)
      r.mapping[d1->universal[k]] = d2->universal[k];
    for (std::size_t c = 0; c < d1->cliques.size(); ++c)
      for (std::size_t k = 0; k < d1->cliques[c].size(); ++k)
        r.mapping[d1->cliques[c][k]] = d2->cliques[c][k];
    return r;
  }
  // Being a join of cliques is an isomorphism invariant.
  if (d1.has_value() != d2.has_value()) return r;
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count() ||
      degree_sequence(g1) != degree_sequence(g2))
    return r;
  return backtracking_isomorphic(g1, g2, options);
}

}  // namespace hiergraph
