#include "hiergraph/suite.hpp"

#include <json.hpp>
#include <sstream>

#include "hiergraph/error.hpp"
#include "hiergraph/graph.hpp"
#include "hiergraph/theorems.hpp"

namespace hiergraph {

namespace {

DecompositionSignature join_signature(std::int64_t big, std::int64_t pairs) {
  DecompositionSignature s{2, {big}};
  for (std::int64_t i = 0; i < pairs; ++i) s.cliques.push_back(2);
  std::sort(s.cliques.begin(), s.cliques.end(), std::greater<>());
  return s;
}

std::string sig_text(const std::optional<DecompositionSignature>& s) {
  return s ? s->to_string() : std::string("NOT_RECOGNIZED");
}

std::string pair_text(const std::optional<std::pair<std::string, std::string>>& p) {
  return p ? "(" + p->first + ", " + p->second + ")" : std::string("none");
}

class Matrix {
 public:
  void add(std::string claim, std::optional<int> level, bool pass, std::string detail) {
    rows_.push_back({std::move(claim), level, pass, std::move(detail)});
  }

  // Runs fn, turning an exception into a failed row.
  template <typename Fn>
  void guarded(const std::string& claim, std::optional<int> level, Fn fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(claim, level, false, std::string("error: ") + e.what());
    }
  }

  std::vector<SuiteRow> take() { return std::move(rows_); }

 private:
  std::vector<SuiteRow> rows_;
};

std::vector<FamilySpec> oracle_truncations() {
  std::vector<FamilySpec> out;
  for (const auto& s : theorem_corpus())
    if (family_size(s) <= 64) out.push_back(s);
  for (int n = 1; n <= 5; ++n) {
    out.push_back({LocallyQuaternionTruncSpec{n}});
    out.push_back({LocallyDihedralTruncSpec{n}});
    out.push_back({GenQuaternionSpec{n}});
  }
  for (int k = 0; k <= 6; ++k) out.push_back({PruferTruncSpec{k}});
  return out;
}

std::vector<HierarchyGraph> small_recognized_graphs() {
  std::vector<FamilySpec> specs;
  for (std::int64_t n = 1; n <= 12; ++n) specs.push_back({CyclicSpec{n}});
  for (std::int64_t m = 1; m <= 6; ++m) specs.push_back({DihedralSpec{m}});
  for (std::int64_t m = 1; m <= 3; ++m) specs.push_back({DicyclicSpec{m}});
  for (int n = 1; n <= 2; ++n) {
    specs.push_back({LocallyQuaternionTruncSpec{n}});
    specs.push_back({LocallyDihedralTruncSpec{n}});
  }
  specs.push_back(product_spec({CyclicSpec{2}}, {CyclicSpec{2}}));
  specs.push_back(product_spec({CyclicSpec{2}}, {CyclicSpec{3}}));
  specs.push_back(product_spec({CyclicSpec{2}}, {CyclicSpec{5}}));
  specs.push_back(product_spec({CyclicSpec{3}}, {CyclicSpec{3}}));
  specs.push_back({InfiniteDihedralWindowSpec{{0, 1}}});
  specs.push_back({InfiniteDihedralWindowSpec{{-1, 0, 1}}});
  specs.push_back({InfiniteDihedralWindowSpec{{0, 1, 2, 3}}});
  specs.push_back({InfiniteDihedralWindowSpec{{-2, -1, 0, 1, 2, 3}}});
  specs.push_back({InfiniteQuaternionWindowSpec{{ToralParam::identity(),
                                                 ToralParam::torsion(RationalAngle(1, 2)),
                                                 ToralParam(RationalAngle{}, {1, 0})}}});
  std::vector<HierarchyGraph> out;
  for (const auto& s : specs) {
    const FiniteGroupView v = build_family(s);
    for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com}) {
      HierarchyGraph g = build_graph(v, k);
      if (decomposition_signature(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace

std::vector<FamilySpec> theorem_corpus() {
  std::vector<FamilySpec> out;
  for (std::int64_t n = 1; n <= 36; ++n) out.push_back({CyclicSpec{n}});
  for (std::int64_t m = 1; m <= 16; ++m) out.push_back({DihedralSpec{m}});
  for (std::int64_t m = 1; m <= 8; ++m) out.push_back({DicyclicSpec{m}});
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t q : {2, 3, 5, 7}) out.push_back(product_spec({CyclicSpec{p}}, {CyclicSpec{q}}));
  return out;
}

std::vector<SuiteRow> run_suite(const SuiteOptions& options) {
  if (options.max_level < 2) throw Error(ErrorCode::BadParam, "max level must be at least 2");
  const int top = options.max_level;
  Matrix m;

  for (int n = 2; n <= top; ++n) {
    m.guarded("cor32-lq", n, [&] {
      const CorollaryReport r = corollary_checks(n);
      m.add("cor32-lq", n, r.lq_pass(), "pow = epow = com on lq:" + std::to_string(n));
    });
    m.guarded("cor32-ld", n, [&] {
      const FiniteGroupView v = options.corrupt_family_table
                                    ? build_family({LocallyQuaternionTruncSpec{n}})
                                    : build_family({LocallyDihedralTruncSpec{n}});
      const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
                 com = build_graph(v, GraphKind::Com);
      const bool eq = edge_set_equal(pow, epow);
      const auto reflection = [&v](std::size_t i) {
        const auto* e = v.element(i).get_if<LocallyDihedralElem>();
        return e != nullptr && e->flip;
      };
      const auto missing = first_missing_edge(
          epow, com, [&](std::size_t i, std::size_t j) { return reflection(i) && reflection(j); });
      std::optional<std::pair<std::string, std::string>> witness;
      if (missing) witness = {{com.labels()[missing->first], com.labels()[missing->second]}};
      m.add("cor32-ld", n, eq && edge_subset(epow, com) && witness.has_value(),
            v.name() + ": pow = epow " + (eq ? "yes" : "no") + ", epow < com witness " +
                pair_text(witness));
    });
  }

  for (int n = 2; n <= top; ++n)
    m.guarded("decomp-genq", n, [&] {
      const auto sig = decomposition_signature(
          build_graph(build_family({GenQuaternionSpec{n}}), GraphKind::Pow));
      const auto want = join_signature((std::int64_t{1} << n) - 2, std::int64_t{1} << (n - 1));
      m.add("decomp-genq", n, sig == want, "pow:genq:" + std::to_string(n) + " " + sig_text(sig));
    });
  for (int mm = 2; mm <= top + 3; ++mm)
    m.guarded("decomp-dicyclic", mm, [&] {
      const auto sig = decomposition_signature(
          build_graph(build_family({DicyclicSpec{mm}}), GraphKind::Com));
      const auto want = join_signature(2 * mm - 2, mm);
      m.add("decomp-dicyclic", mm, sig == want,
            "com:dicyclic:" + std::to_string(mm) + " " + sig_text(sig));
    });

  for (int n = 2; n <= top; ++n) {
    m.guarded("thm4", n, [&] {
      const BijectionReport r = theorem4_witness(n);
      m.add("thm4", n, r.pass && r.isomorphic,
            sig_text(r.source_signature) + " counterexample " + pair_text(r.counterexample));
    });
    m.guarded("thm5", n, [&] {
      const BijectionReport r = theorem5_witness(n);
      m.add("thm5", n, r.pass && r.isomorphic,
            sig_text(r.source_signature) + " counterexample " + pair_text(r.counterexample));
    });
  }

  m.guarded("thm1-thm2-corpus", std::nullopt, [&] {
    std::size_t checked = 0;
    std::string failure;
    for (const auto& spec : theorem_corpus()) {
      const FiniteGroupView v = build_family(spec);
      for (const auto& verdict : {check_thm1(v), check_thm2(v)}) {
        ++checked;
        if (!verdict.consistent && failure.empty())
          failure = verdict.claim + " inconsistent on " + verdict.family;
      }
    }
    m.add("thm1-thm2-corpus", std::nullopt, failure.empty(),
          failure.empty() ? std::to_string(checked) + " verdicts consistent" : failure);
  });

  for (int n = 2; n <= top; ++n)
    m.guarded("chain", n, [&] {
      std::string failed;
      for (Chain c : {Chain::LocallyQuaternion, Chain::LocallyDihedral})
        for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com})
          if (!restriction_consistency(c, k, n))
            failed += std::string(chain_name(c)) + "/" + std::string(kind_name(k)) + " ";
      m.add("chain", n, failed.empty(),
            failed.empty() ? "lq, ld x pow, epow, com restrict consistently" : "failed: " + failed);
    });

  for (int n = 2; n <= top; ++n)
    m.guarded("cor34", n, [&] {
      const CorollaryReport r = corollary_checks(n);
      const bool named = r.dinf_pow_epow.witness ==
                         std::optional<std::pair<std::string, std::string>>{{"r(2)", "r(3)"}};
      m.add("cor34", n, r.dinf_pass() && named,
            "pow < epow witness " + pair_text(r.dinf_pow_epow.witness) + ", epow = com " +
                (r.dinf_epow_com ? "yes" : "no"));
    });

  m.guarded("prop33", std::nullopt, [&] {
    const StrictnessReport r = qinf_strictness(default_qinf_params());
    m.add("prop33", std::nullopt, r.pass(),
          "pow < epow " + pair_text(r.pow_epow.witness) + ", epow < com " +
              pair_text(r.epow_com.witness));
  });

  m.guarded("oracle-adjacency", std::nullopt, [&] {
    std::size_t views = 0;
    std::string failure;
    for (const auto& spec : oracle_truncations()) {
      const FiniteGroupView v = build_family(spec);
      ++views;
      for (GraphKind k : {GraphKind::Pow, GraphKind::EPow})
        if (build_graph(v, k, AdjacencyPath::ClosedForm) !=
                build_graph(v, k, AdjacencyPath::Generic) &&
            failure.empty())
          failure = std::string(kind_name(k)) + ":" + v.name() + " closed form != generic";
    }
    m.add("oracle-adjacency", std::nullopt, failure.empty(),
          failure.empty() ? std::to_string(views) + " truncations agree" : failure);
  });

  m.guarded("oracle-iso", std::nullopt, [&] {
    const auto graphs = small_recognized_graphs();
    std::size_t pairs = 0;
    std::string failure;
    for (std::size_t a = 0; a < graphs.size(); ++a)
      for (std::size_t b = a; b < graphs.size(); ++b) {
        if (graphs[a].size() != graphs[b].size()) continue;
        ++pairs;
        const bool fast = graphs_isomorphic(graphs[a], graphs[b]).isomorphic;
        const bool slow = backtracking_isomorphic(graphs[a], graphs[b]).isomorphic;
        if (fast != slow && failure.empty())
          failure = graphs[a].family() + " vs " + graphs[b].family();
      }
    m.add("oracle-iso", std::nullopt, failure.empty(),
          failure.empty() ? std::to_string(pairs) + " pairs agree" : "disagreement: " + failure);
  });

  return m.take();
}

std::string suite_report_json(const std::vector<SuiteRow>& rows, int max_level) {
  nlohmann::ordered_json j;
  j["max_level"] = max_level;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::size_t passed = 0;
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["claim"] = r.claim;
    row["level"] = r.level ? nlohmann::ordered_json(*r.level) : nlohmann::ordered_json(nullptr);
    row["pass"] = r.pass;
    row["detail"] = r.detail;
    arr.push_back(std::move(row));
    passed += r.pass ? 1 : 0;
  }
  j["rows"] = std::move(arr);
  j["summary"] = {{"total", rows.size()}, {"passed", passed}, {"failed", rows.size() - passed}};
  j["all_pass"] = passed == rows.size();
  return j.dump(2) + "\n";
}

std::string suite_report_text(const std::vector<SuiteRow>& rows, int max_level) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.claim.size());
  std::size_t passed = 0;
  os << "suite (max level " << max_level << ")\n";
  for (const auto& r : rows) {
    os << r.claim << std::string(width - r.claim.size() + 2, ' ');
    const std::string level = r.level ? std::to_string(*r.level) : "-";
    os << level << std::string(4 - std::min<std::size_t>(level.size(), 3), ' ');
    os << (r.pass ? "PASS" : "FAIL") << "  " << r.detail << '\n';
    passed += r.pass ? 1 : 0;
  }
  os << passed << "/" << rows.size() << " passed\n";
  return os.str();
}

}  // namespace hiergraph
