#include "hiergraph/theorems.hpp"

#include "hiergraph/error.hpp"

namespace hiergraph {

using ordered_json = nlohmann::ordered_json;

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::int64_t> prime_order(const GroupElement& x) {
  const Order o = elem_order(x);
  if (o.is_finite() && is_prime(o.value())) return o.value();
  return std::nullopt;
}

std::string graph_name(GraphKind kind, const std::string& family) {
  return std::string(kind_name(kind)) + ":" + family;
}

ordered_json pair_json(const std::optional<std::pair<std::string, std::string>>& p) {
  if (!p) return nullptr;
  return ordered_json::array({p->first, p->second});
}

template <typename Accept>
StrictStep strict_step_if(const HierarchyGraph& lower, const HierarchyGraph& upper, Accept accept) {
  StrictStep s;
  s.lower = kind_name(lower.kind());
  s.upper = kind_name(upper.kind());
  s.subset = edge_subset(lower, upper);
  if (auto e = first_missing_edge(lower, upper, accept))
    s.witness = std::pair{upper.labels()[e->first], upper.labels()[e->second]};
  return s;
}

TheoremVerdict verdict(std::string claim, const FiniteGroupView& view, GraphKind lower,
                       GraphKind upper, std::optional<ObstructionWitness> obstruction) {
  TheoremVerdict v;
  v.claim = std::move(claim);
  v.family = view.name();
  v.graphs_equal = edge_set_equal(build_graph(view, lower), build_graph(view, upper));
  v.obstruction = std::move(obstruction);
  v.consistent = v.graphs_equal == !v.obstruction.has_value();
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// Obstructions

std::string_view witness_kind_name(ObstructionWitness::Kind kind) {
  switch (kind) {
    case ObstructionWitness::Kind::Cpq: return "CPQ";
    case ObstructionWitness::Kind::Cpp: return "CPP";
    case ObstructionWitness::Kind::ZFlag: return "Z_FLAG";
  }
  return "?";
}

ordered_json to_json(const ObstructionWitness& w) {
  ordered_json j;
  j["kind"] = witness_kind_name(w.kind);
  j["x"] = w.x ? ordered_json(*w.x) : ordered_json(nullptr);
  j["y"] = w.y ? ordered_json(*w.y) : ordered_json(nullptr);
  j["p"] = w.p ? ordered_json(*w.p) : ordered_json(nullptr);
  j["q"] = w.q ? ordered_json(*w.q) : ordered_json(nullptr);
  return j;
}

std::optional<ObstructionWitness> find_cpq(const FiniteGroupView& view) {
  view.require_closed("find_cpq");
  const std::size_t n = view.size();
  std::vector<std::optional<std::int64_t>> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = prime_order(view.element(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (!orders[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!orders[j] || *orders[j] == *orders[i]) continue;
      if (!adj_com(view.element(i), view.element(j))) continue;
      return ObstructionWitness{ObstructionWitness::Kind::Cpq, elem_label(view.element(i)),
                                elem_label(view.element(j)), orders[i], orders[j]};
    }
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> find_cpp(const FiniteGroupView& view) {
  view.require_closed("find_cpp");
  const std::size_t n = view.size();
  std::vector<std::optional<std::int64_t>> orders(n);
  for (std::size_t i = 0; i < n; ++i) orders[i] = prime_order(view.element(i));
  for (std::size_t i = 0; i < n; ++i) {
    if (!orders[i]) continue;
    const std::int64_t p = *orders[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (orders[j] != p || !adj_com(view.element(i), view.element(j))) continue;
      if (static_cast<std::int64_t>(subgroup_closure(view, {i, j}).size()) != p * p) continue;
      return ObstructionWitness{ObstructionWitness::Kind::Cpp, elem_label(view.element(i)),
                                elem_label(view.element(j)), p, std::nullopt};
    }
  }
  return std::nullopt;
}

std::optional<ObstructionWitness> find_infinite_order(const FiniteGroupView& view) {
  for (const auto& e : view.elements())
    if (elem_order(e).is_infinite())
      return ObstructionWitness{ObstructionWitness::Kind::ZFlag, elem_label(e), std::nullopt,
                                std::nullopt, std::nullopt};
  return std::nullopt;
}

ordered_json to_json(const TheoremVerdict& v) {
  ordered_json j;
  j["claim"] = v.claim;
  j["family"] = v.family;
  j["graphs_equal"] = v.graphs_equal;
  j["obstruction"] = v.obstruction ? to_json(*v.obstruction) : ordered_json(nullptr);
  j["consistent"] = v.consistent;
  return j;
}

TheoremVerdict check_thm1(const FiniteGroupView& view) {
  view.require_closed("check_thm1");
  return verdict("thm1", view, GraphKind::Pow, GraphKind::EPow, find_cpq(view));
}

TheoremVerdict check_thm2(const FiniteGroupView& view) {
  view.require_closed("check_thm2");
  return verdict("thm2", view, GraphKind::EPow, GraphKind::Com, find_cpp(view));
}

TheoremVerdict check_thm3(const FiniteGroupView& view) {
  view.require_closed("check_thm3");
  auto w = find_cpq(view);
  if (!w) w = find_cpp(view);
  return verdict("thm3", view, GraphKind::Pow, GraphKind::Com, std::move(w));
}

// ---------------------------------------------------------------------------
// Chains

Chain parse_chain(std::string_view text) {
  if (text == "lq") return Chain::LocallyQuaternion;
  if (text == "ld") return Chain::LocallyDihedral;
  throw Error(ErrorCode::Parse, "unknown chain '" + std::string(text) + "' (expected lq or ld)");
}

std::string_view chain_name(Chain c) { return c == Chain::LocallyQuaternion ? "lq" : "ld"; }

FamilySpec chain_level(Chain c, int n) {
  if (c == Chain::LocallyQuaternion) return {LocallyQuaternionTruncSpec{n}};
  return {LocallyDihedralTruncSpec{n}};
}

bool restriction_consistency(Chain chain, GraphKind kind, int n) {
  if (n < 2) throw Error(ErrorCode::BadParam, "chain level must be at least 2");
  const FiniteGroupView lower = build_family(chain_level(chain, n));
  const FiniteGroupView upper = build_family(chain_level(chain, n + 1));
  const HierarchyGraph g_lower = build_graph(lower, kind);
  const HierarchyGraph restricted = induced_subgraph(build_graph(upper, kind), g_lower.labels());
  return edge_set_equal(restricted, g_lower);
}

// ---------------------------------------------------------------------------
// Bijections

ordered_json to_json(const BijectionReport& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["level"] = r.level;
  j["source"] = r.source;
  j["target"] = r.target;
  j["bijective"] = r.bijective;
  j["pass"] = r.pass;
  j["counterexample"] = pair_json(r.counterexample);
  j["source_signature"] =
      r.source_signature ? ordered_json(r.source_signature->to_string()) : ordered_json(nullptr);
  j["target_signature"] =
      r.target_signature ? ordered_json(r.target_signature->to_string()) : ordered_json(nullptr);
  j["isomorphic"] = r.isomorphic;
  ordered_json m = ordered_json::array();
  for (const auto& [a, b] : r.map) m.push_back({a, b});
  j["map"] = std::move(m);
  return j;
}

BijectionReport verify_graph_map(const HierarchyGraph& source, const HierarchyGraph& target,
                                 const std::vector<std::size_t>& mapping) {
  BijectionReport r;
  r.source = graph_name(source.kind(), source.family());
  r.target = graph_name(target.kind(), target.family());
  const std::size_t n = source.size();
  r.bijective = mapping.size() == n && target.size() == n;
  std::vector<bool> hit(target.size(), false);
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] >= target.size() || hit[mapping[i]]) {
      r.bijective = false;
      continue;
    }
    hit[mapping[i]] = true;
    r.map.emplace_back(source.labels()[i], target.labels()[mapping[i]]);
  }
  if (r.bijective) {
    for (std::size_t i = 0; i < n && !r.counterexample; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (source.adjacent(i, j) != target.adjacent(mapping[i], mapping[j])) {
          r.counterexample = std::pair{source.labels()[i], source.labels()[j]};
          break;
        }
  }
  r.pass = r.bijective && !r.counterexample;
  r.source_signature = decomposition_signature(source);
  r.target_signature = decomposition_signature(target);
  r.isomorphic = graphs_isomorphic(source, target).isomorphic;
  return r;
}

namespace {

void require_level(int n) {
  if (n < 2) throw Error(ErrorCode::BadParam, "level must be at least 2");
}

}  // namespace

std::vector<std::size_t> theorem4_map(int n) {
  require_level(n);
  const FiniteGroupView lq = build_family({LocallyQuaternionTruncSpec{n}});
  const FiniteGroupView ld = build_family({LocallyDihedralTruncSpec{n}});
  std::vector<std::size_t> map;
  for (const auto& e : lq.elements()) {
    const auto& q = e.as<LocallyQuaternionElem>();
    map.push_back(*ld.index_of(LocallyDihedralElem{q.angle, q.jpart}));
  }
  return map;
}

BijectionReport theorem4_witness(int n, const std::optional<std::vector<std::size_t>>& mapping) {
  require_level(n);
  const FiniteGroupView lq = build_family({LocallyQuaternionTruncSpec{n}});
  const FiniteGroupView ld = build_family({LocallyDihedralTruncSpec{n}});
  BijectionReport r = verify_graph_map(build_graph(lq, GraphKind::Pow),
                                       build_graph(ld, GraphKind::Com),
                                       mapping ? *mapping : theorem4_map(n));
  r.claim = "thm4";
  r.level = n;
  return r;
}

std::vector<std::size_t> theorem5_map(int n) {
  require_level(n);
  const FiniteGroupView dinf = build_family({InfiniteDihedralWindowSpec{default_dinf_window(n)}});
  const FiniteGroupView ld = build_family({LocallyDihedralTruncSpec{n}});
  // Rotations of ld in view order; index 0 is the identity.
  std::vector<DyadicAngle> rotations;
  for (const auto& e : ld.elements())
    if (!e.as<LocallyDihedralElem>().flip) rotations.push_back(e.as<LocallyDihedralElem>().angle);
  std::vector<std::size_t> map;
  for (const auto& e : dinf.elements()) {
    const auto& d = e.as<InfiniteDihedralElem>();
    const auto& angle = rotations.at(static_cast<std::size_t>(d.shift));
    map.push_back(*ld.index_of(LocallyDihedralElem{angle, d.flip}));
  }
  return map;
}

BijectionReport theorem5_witness(int n, const std::optional<std::vector<std::size_t>>& mapping) {
  require_level(n);
  const FiniteGroupView dinf = build_family({InfiniteDihedralWindowSpec{default_dinf_window(n)}});
  const FiniteGroupView ld = build_family({LocallyDihedralTruncSpec{n}});
  BijectionReport r = verify_graph_map(build_graph(dinf, GraphKind::Com),
                                       build_graph(ld, GraphKind::Pow),
                                       mapping ? *mapping : theorem5_map(n));
  r.claim = "thm5";
  r.level = n;
  return r;
}

// ---------------------------------------------------------------------------
// Strictness and corollaries

ordered_json to_json(const StrictStep& s) {
  ordered_json j;
  j["lower"] = s.lower;
  j["upper"] = s.upper;
  j["subset"] = s.subset;
  j["strict"] = s.strict();
  j["witness"] = pair_json(s.witness);
  j["status"] = s.strict() ? "STRICT" : (s.subset ? "NOT_WITNESSED" : "NOT_SUBSET");
  return j;
}

StrictStep strict_step(const HierarchyGraph& lower, const HierarchyGraph& upper) {
  return strict_step_if(lower, upper, [](std::size_t, std::size_t) { return true; });
}

ordered_json to_json(const StrictnessReport& r) {
  ordered_json j;
  j["claim"] = "prop33";
  j["window"] = r.window;
  j["pow_epow"] = to_json(r.pow_epow);
  j["epow_com"] = to_json(r.epow_com);
  j["insufficient_window"] = r.insufficient_window();
  j["pass"] = r.pass();
  return j;
}

StrictnessReport qinf_strictness(const std::vector<ToralParam>& params) {
  const FiniteGroupView view = build_family({InfiniteQuaternionWindowSpec{params}});
  const HierarchyGraph pow = build_graph(view, GraphKind::Pow);
  const HierarchyGraph epow = build_graph(view, GraphKind::EPow);
  const HierarchyGraph com = build_graph(view, GraphKind::Com);
  StrictnessReport r;
  r.window = view.name();
  r.pow_epow = strict_step(pow, epow);
  r.epow_com = strict_step(epow, com);
  return r;
}

ordered_json to_json(const CorollaryReport& r) {
  ordered_json j;
  j["claim"] = "corollaries";
  j["level"] = r.level;
  j["lq"] = {{"pow_eq_epow", r.lq_pow_epow},
             {"epow_eq_com", r.lq_epow_com},
             {"pow_eq_com", r.lq_pow_com},
             {"pass", r.lq_pass()}};
  j["ld"] = {{"pow_eq_epow", r.ld_pow_epow}, {"epow_com", to_json(r.ld_epow_com)},
             {"pass", r.ld_pass()}};
  j["dinf"] = {{"pow_epow", to_json(r.dinf_pow_epow)},
               {"epow_eq_com", r.dinf_epow_com},
               {"z_flag", r.dinf_z ? to_json(*r.dinf_z) : ordered_json(nullptr)},
               {"pass", r.dinf_pass()}};
  j["pass"] = r.pass();
  return j;
}

CorollaryReport corollary_checks(int n) {
  require_level(n);
  CorollaryReport r;
  r.level = n;
  {
    const FiniteGroupView v = build_family({LocallyQuaternionTruncSpec{n}});
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    r.lq_pow_epow = edge_set_equal(pow, epow);
    r.lq_epow_com = edge_set_equal(epow, com);
    r.lq_pow_com = edge_set_equal(pow, com);
  }
  {
    const FiniteGroupView v = build_family({LocallyDihedralTruncSpec{n}});
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    r.ld_pow_epow = edge_set_equal(pow, epow);
    const auto is_reflection = [&v](std::size_t i) {
      return v.element(i).as<LocallyDihedralElem>().flip;
    };
    r.ld_epow_com = strict_step_if(epow, com, [&](std::size_t i, std::size_t j) {
      return is_reflection(i) && is_reflection(j);
    });
  }
  {
    const FiniteGroupView v =
        build_family({InfiniteDihedralWindowSpec{default_dinf_window(n)}});
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    r.dinf_pow_epow = strict_step(pow, epow);
    r.dinf_epow_com = edge_set_equal(epow, com);
    r.dinf_z = find_infinite_order(v);
  }
  return r;
}

}  // namespace hiergraph
