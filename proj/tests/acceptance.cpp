// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "hiergraph/family.hpp"
#include "hiergraph/graph.hpp"
#include "hiergraph/suite.hpp"
#include "hiergraph/theorems.hpp"

using namespace hiergraph;

namespace {

constexpr int kTopLevel = 7;            // criteria 1-5
constexpr int kChainTop = 6;            // criterion 7
constexpr int kDinfTop = 6;             // criterion 8
constexpr std::int64_t kDicyclicTop = 8;
constexpr double kCriterion1Seconds = 5.0;
constexpr double kCriterion6Seconds = 30.0;
constexpr std::int64_t kOracleMaxElements = 64;
constexpr std::size_t kIsoMaxVertices = 12;
constexpr int kDeterminismLevel = 5;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string pair_text(const std::optional<std::pair<std::string, std::string>>& p) {
  return p ? "(" + p->first + ", " + p->second + ")" : "none";
}

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome criterion1() {
  const auto t0 = Clock::now();
  for (int n = 2; n <= kTopLevel; ++n) {
    const FiniteGroupView v = build_family({LocallyQuaternionTruncSpec{n}});
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    if (!edge_set_equal(pow, epow) || !edge_set_equal(epow, com))
      return {false, "graphs differ on lq:" + std::to_string(n)};
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << "lq:2..7 all equal in " << s << " s (limit " << kCriterion1Seconds << " s)";
  return {s < kCriterion1Seconds, os.str()};
}

Outcome criterion2() {
  std::string last;
  for (int n = 2; n <= kTopLevel; ++n) {
    const CorollaryReport r = corollary_checks(n);
    if (!r.ld_pass()) return {false, "ld:" + std::to_string(n) + " split not confirmed"};
    const auto& w = r.ld_epow_com.witness;
    if (!w->first.ends_with("*s") || !w->second.ends_with("*s"))
      return {false, "witness is not a pair of reflections: " + pair_text(w)};
    last = pair_text(w);
  }
  return {true, "ld:2..7 pow = epow < com, witness " + last};
}

DecompositionSignature join(std::int64_t big, std::int64_t pairs) {
  DecompositionSignature s{2, {big}};
  for (std::int64_t i = 0; i < pairs; ++i) s.cliques.push_back(2);
  std::sort(s.cliques.begin(), s.cliques.end(), std::greater<>());
  return s;
}

Outcome criterion3() {
  for (int n = 2; n <= kTopLevel; ++n) {
    const auto sig =
        decomposition_signature(build_graph(build_family({GenQuaternionSpec{n}}), GraphKind::Pow));
    const auto want = join((std::int64_t{1} << n) - 2, std::int64_t{1} << (n - 1));
    if (sig != want) return {false, "pow:genq:" + std::to_string(n) + " signature mismatch"};
  }
  for (std::int64_t m = 2; m <= kDicyclicTop; ++m) {
    const auto sig =
        decomposition_signature(build_graph(build_family({DicyclicSpec{m}}), GraphKind::Com));
    if (sig != join(2 * m - 2, m)) return {false, "com:dicyclic:" + std::to_string(m) + " mismatch"};
  }
  return {true, "genq:2..7 and dicyclic:2..8 signatures exact"};
}

Outcome criterion4() {
  for (int n = 2; n <= kTopLevel; ++n) {
    const BijectionReport r = theorem4_witness(n);
    const IsoResult iso = graphs_isomorphic(
        build_graph(build_family({LocallyQuaternionTruncSpec{n}}), GraphKind::Pow),
        build_graph(build_family({LocallyDihedralTruncSpec{n}}), GraphKind::Com));
    if (!r.pass || !iso.isomorphic || !iso.via_signature)
      return {false, "level " + std::to_string(n) + " counterexample " + pair_text(r.counterexample)};
  }
  return {true, "levels 2..7 pass, isomorphic via signatures"};
}

Outcome criterion5() {
  for (int n = 2; n <= kTopLevel; ++n) {
    const BijectionReport r = theorem5_witness(n);
    if (!r.pass)
      return {false, "level " + std::to_string(n) + " counterexample " + pair_text(r.counterexample)};
  }
  return {true, "levels 2..7 pass"};
}

Outcome criterion6() {
  const auto t0 = Clock::now();
  std::size_t verdicts = 0;
  for (const auto& spec : theorem_corpus()) {
    const FiniteGroupView v = build_family(spec);
    for (const auto& verdict : {check_thm1(v), check_thm2(v)}) {
      ++verdicts;
      if (!verdict.consistent) return {false, verdict.claim + " inconsistent on " + verdict.family};
    }
  }
  const double s = seconds_since(t0);
  std::ostringstream os;
  os << verdicts << " verdicts consistent in " << s << " s (limit " << kCriterion6Seconds << " s)";
  return {s < kCriterion6Seconds, os.str()};
}

Outcome criterion7() {
  for (int n = 2; n <= kChainTop; ++n)
    for (Chain c : {Chain::LocallyQuaternion, Chain::LocallyDihedral})
      for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com})
        if (!restriction_consistency(c, k, n))
          return {false, std::string(chain_name(c)) + " " + std::string(kind_name(k)) + " level " +
                             std::to_string(n)};
  return {true, "lq, ld x pow, epow, com for levels 2..6"};
}

Outcome criterion8() {
  const std::pair<std::string, std::string> named{"r(2)", "r(3)"};
  for (int n = 2; n <= kDinfTop; ++n) {
    const FiniteGroupView v = build_family({InfiniteDihedralWindowSpec{default_dinf_window(n)}});
    const auto pow = build_graph(v, GraphKind::Pow), epow = build_graph(v, GraphKind::EPow),
               com = build_graph(v, GraphKind::Com);
    const StrictStep step = strict_step(pow, epow);
    if (!step.strict() || step.witness != named || !edge_set_equal(epow, com))
      return {false, "window level " + std::to_string(n) + " witness " + pair_text(step.witness)};
  }
  return {true, "windows 0..2^n-1, n = 2..6: pow < epow = com, witness (r(2), r(3))"};
}

Outcome criterion9() {
  const StrictnessReport r = qinf_strictness(default_qinf_params());
  const bool named =
      r.pow_epow.witness == std::pair<std::string, std::string>{"x(0/1;2,0)", "x(0/1;3,0)"} &&
      r.epow_com.witness == std::pair<std::string, std::string>{"x(0/1;0,1)", "x(0/1;1,0)"};
  return {r.pass() && named, "pow < epow " + pair_text(r.pow_epow.witness) + ", epow < com " +
                                 pair_text(r.epow_com.witness)};
}

std::vector<FamilySpec> oracle_truncations() {
  std::vector<FamilySpec> out;
  for (std::int64_t n = 1; n <= kOracleMaxElements; ++n) out.push_back({CyclicSpec{n}});
  for (std::int64_t m = 1; 2 * m <= kOracleMaxElements; ++m) out.push_back({DihedralSpec{m}});
  for (std::int64_t m = 1; 4 * m <= kOracleMaxElements; ++m) out.push_back({DicyclicSpec{m}});
  for (int n = 1; (std::int64_t{1} << (n + 1)) <= kOracleMaxElements; ++n) {
    out.push_back({GenQuaternionSpec{n}});
    out.push_back({LocallyQuaternionTruncSpec{n}});
    out.push_back({LocallyDihedralTruncSpec{n}});
  }
  for (int k = 0; (std::int64_t{1} << k) <= kOracleMaxElements; ++k) out.push_back({PruferTruncSpec{k}});
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t q : {2, 3, 5, 7}) out.push_back(product_spec({CyclicSpec{p}}, {CyclicSpec{q}}));
  out.push_back(product_spec({DihedralSpec{2}}, {CyclicSpec{2}}));
  out.push_back(product_spec({DicyclicSpec{2}}, {CyclicSpec{3}}));
  return out;
}

std::vector<HierarchyGraph> recognized_small_graphs() {
  std::vector<FamilySpec> specs;
  for (std::int64_t n = 1; n <= 12; ++n) specs.push_back({CyclicSpec{n}});
  for (std::int64_t m = 1; m <= 6; ++m) specs.push_back({DihedralSpec{m}});
  for (std::int64_t m = 1; m <= 3; ++m) specs.push_back({DicyclicSpec{m}});
  for (int n = 1; n <= 2; ++n) {
    specs.push_back({LocallyQuaternionTruncSpec{n}});
    specs.push_back({LocallyDihedralTruncSpec{n}});
  }
  for (int k = 0; k <= 3; ++k) specs.push_back({PruferTruncSpec{k}});
  for (std::int64_t p : {2, 3})
    for (std::int64_t q : {2, 3, 5}) specs.push_back(product_spec({CyclicSpec{p}}, {CyclicSpec{q}}));
  for (const char* w : {"dinf:0..1", "dinf:-1..1", "dinf:0..3", "dinf:-2..3", "dinf:0,2,3"})
    specs.push_back(parse_family_spec(w));
  specs.push_back(parse_family_spec("qinf:0/1;0,0|1/2;0,0|0/1;1,0"));
  specs.push_back(parse_family_spec("qinf:0/1;0,0|0/1;1,0|0/1;0,1"));
  std::vector<HierarchyGraph> out;
  for (const auto& s : specs) {
    const FiniteGroupView v = build_family(s);
    if (v.size() > kIsoMaxVertices) continue;
    for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com}) {
      HierarchyGraph g = build_graph(v, k);
      if (decomposition_signature(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

Outcome criterion10() {
  std::size_t views = 0;
  for (const auto& spec : oracle_truncations()) {
    if (family_size(spec) > kOracleMaxElements) continue;
    const FiniteGroupView v = build_family(spec);
    ++views;
    for (GraphKind k : {GraphKind::Pow, GraphKind::EPow, GraphKind::Com})
      if (build_graph(v, k, AdjacencyPath::ClosedForm) != build_graph(v, k, AdjacencyPath::Generic))
        return {false, std::string(kind_name(k)) + ":" + v.name() + " fast path != generic"};
  }
  const auto graphs = recognized_small_graphs();
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < graphs.size(); ++a)
    for (std::size_t b = a; b < graphs.size(); ++b) {
      ++pairs;
      if (graphs_isomorphic(graphs[a], graphs[b]).isomorphic !=
          backtracking_isomorphic(graphs[a], graphs[b]).isomorphic)
        return {false, "iso disagreement: " + graphs[a].family() + " vs " + graphs[b].family()};
    }
  return {true, std::to_string(views) + " truncations, " + std::to_string(pairs) +
                    " recognized graph pairs agree"};
}

std::optional<std::string> capture(const std::string& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  if (!pipe) return std::nullopt;
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
  if (pclose(pipe.release()) != 0) return std::nullopt;
  return out;
}

Outcome criterion11() {
  const std::string cmd = std::string(HIERGRAPH_CLI_PATH) + " suite --max-level " +
                          std::to_string(kDeterminismLevel) + " --format json";
  const auto a = capture(cmd), b = capture(cmd);
  if (!a || !b) return {false, "suite run failed"};
  return {*a == *b && !a->empty(), std::to_string(a->size()) + " bytes, identical: " +
                                       (*a == *b ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"hierarchy equality on lq truncations", criterion1},
      {"ld split with reflection witness", criterion2},
      {"decomposition signatures", criterion3},
      {"lq/ld bijection", criterion4},
      {"dinf/ld bijection", criterion5},
      {"equality characterizations on corpus", criterion6},
      {"restriction consistency", criterion7},
      {"dinf strictness", criterion8},
      {"qinf strictness", criterion9},
      {"oracle agreement", criterion10},
      {"suite determinism", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  " << criteria[i].first
              << ": " << o.detail << std::endl;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
