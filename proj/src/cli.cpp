#include "hiergraph/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "hiergraph/error.hpp"
#include "hiergraph/family.hpp"
#include "hiergraph/graph.hpp"
#include "hiergraph/graph_io.hpp"
#include "hiergraph/suite.hpp"
#include "hiergraph/theorems.hpp"

namespace hiergraph::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

// Error raised for usage problems detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSpec {
  GraphKind kind;
  FamilySpec family;
};

GraphSpec parse_graph_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::Parse, "expected <kind>:<family>, got '" + text + "'");
  const GraphKind kind = parse_kind(text.substr(0, colon));
  if (kind == GraphKind::Other) throw Error(ErrorCode::Parse, "kind must be pow, epow or com");
  return {kind, parse_family_spec(text.substr(colon + 1))};
}

void check_level(int level, int cap) {
  if (level < 2) throw UsageError("level must be at least 2, got " + std::to_string(level));
  if (level > cap)
    throw UsageError("resource guard: level " + std::to_string(level) + " exceeds the cap of " +
                     std::to_string(cap) + " (graph size doubles per level; raise with --level-cap)");
}

void check_size(const FamilySpec& spec, int cap) {
  const std::int64_t limit = std::int64_t{1} << (cap + 1);
  const std::int64_t size = family_size(spec);
  if (size > limit)
    throw UsageError("resource guard: " + to_string(spec) + " has " + std::to_string(size) +
                     " elements, above the limit of " + std::to_string(limit) +
                     " for level cap " + std::to_string(cap));
}

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative())
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0')
      return std::filesystem::path(dir) / p;
  return p;
}

void flatten(const ordered_json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_array() && prefix == "map") {
    for (const auto& pair : j) os << "map: " << pair[0].get<std::string>() << " -> "
                                  << pair[1].get<std::string>() << '\n';
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const ordered_json& j, bool as_json, std::ostream& out) {
  if (as_json)
    out << j.dump(2) << '\n';
  else
    flatten(j, "", out);
}

struct GraphArgs {
  std::string spec;
  std::string format = "dot";
  std::string out;
  int level_cap = kDefaultLevelCap;
};

int cmd_graph(const GraphArgs& a, std::ostream& out, std::ostream& err) {
  GraphSpec spec{GraphKind::Pow, {}};
  ExportFormat format{};
  try {
    spec = parse_graph_spec(a.spec);
    format = parse_export_format(a.format);
    check_size(spec.family, a.level_cap);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  std::string text;
  try {
    text = export_graph(build_graph(build_family(spec.family), spec.kind), format);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBuildError;
  }
  if (a.out.empty() || a.out == "-") {
    out << text;
    return kOk;
  }
  const auto path = resolve_out(a.out);
  std::ofstream file(path, std::ios::binary);
  if (!(file << text)) {
    err << "error: cannot write " << path.string() << '\n';
    return kBuildError;
  }
  return kOk;
}

struct CheckArgs {
  std::string claim;
  std::string family;
  int level = 3;
  std::string chain;
  std::string kind;
  bool json = false;
  int level_cap = kDefaultLevelCap;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const std::string& c = a.claim;
    if (c == "thm1" || c == "thm2" || c == "thm3") {
      if (a.family.empty()) throw UsageError(c + " needs a family, e.g. 'check " + c + " cyclic:6'");
      const FamilySpec spec = parse_family_spec(a.family);
      check_size(spec, a.level_cap);
      const FiniteGroupView view = build_family(spec);
      const TheoremVerdict v = c == "thm1"   ? check_thm1(view)
                               : c == "thm2" ? check_thm2(view)
                                             : check_thm3(view);
      emit(to_json(v), a.json, out);
      if (!v.consistent) err << "inconsistent verdict for " << c << " on " << v.family << '\n';
      return v.consistent ? kOk : kFailed;
    }
    if (c == "thm4" || c == "thm5") {
      check_level(a.level, a.level_cap);
      const BijectionReport r = c == "thm4" ? theorem4_witness(a.level) : theorem5_witness(a.level);
      emit(to_json(r), a.json, out);
      if (!r.pass) err << "VERIFICATION_FAILED at " << r.counterexample->first << ", "
                       << r.counterexample->second << '\n';
      return r.pass ? kOk : kFailed;
    }
    if (c == "cor32" || c == "cor34") {
      check_level(a.level, a.level_cap);
      const CorollaryReport r = corollary_checks(a.level);
      ordered_json j = to_json(r);
      if (c == "cor32") {
        j.erase("dinf");
        j["claim"] = "cor32";
      } else {
        j.erase("lq");
        j.erase("ld");
        j["claim"] = "cor34";
      }
      const bool pass = c == "cor32" ? r.lq_pass() && r.ld_pass() : r.dinf_pass();
      j["pass"] = pass;
      emit(j, a.json, out);
      return pass ? kOk : kFailed;
    }
    if (c == "chain") {
      check_level(a.level, a.level_cap);
      std::vector<Chain> chains = {Chain::LocallyQuaternion, Chain::LocallyDihedral};
      if (!a.chain.empty()) chains = {parse_chain(a.chain)};
      std::vector<GraphKind> kinds = {GraphKind::Pow, GraphKind::EPow, GraphKind::Com};
      if (!a.kind.empty()) kinds = {parse_kind(a.kind)};
      ordered_json j;
      j["claim"] = "chain";
      j["level"] = a.level;
      bool pass = true;
      for (Chain ch : chains)
        for (GraphKind k : kinds) {
          const bool ok = restriction_consistency(ch, k, a.level);
          j["results"][std::string(chain_name(ch)) + "." + std::string(kind_name(k))] = ok;
          pass &= ok;
        }
      j["pass"] = pass;
      emit(j, a.json, out);
      return pass ? kOk : kFailed;
    }
    if (c == "prop33") {
      const FamilySpec spec = parse_family_spec(a.family.empty() ? "qinf:default" : a.family);
      const auto* window = std::get_if<InfiniteQuaternionWindowSpec>(&spec.value);
      if (window == nullptr) throw UsageError("prop33 needs a qinf window");
      check_size(spec, a.level_cap);
      const StrictnessReport r = qinf_strictness(window->params);
      emit(to_json(r), a.json, out);
      if (r.insufficient_window())
        err << "INSUFFICIENT_WINDOW: " << r.window << " lacks a witness for a strict step\n";
      return r.pass() ? kOk : kFailed;
    }
    throw UsageError("unknown claim '" + c + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

struct SuiteArgs {
  int max_level = 5;
  std::string format = "text";
  int level_cap = kDefaultLevelCap;
  bool corrupt = false;
};

int cmd_suite(const SuiteArgs& a, std::ostream& out, std::ostream& err) {
  if (a.format != "text" && a.format != "json") {
    err << "error: unknown format '" << a.format << "' (expected text or json)\n";
    return kUsage;
  }
  try {
    check_level(a.max_level, a.level_cap);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto rows = run_suite({a.max_level, a.corrupt});
  out << (a.format == "json" ? suite_report_json(rows, a.max_level)
                             : suite_report_text(rows, a.max_level));
  for (const auto& r : rows)
    if (!r.pass) {
      err << "FAILED " << r.claim;
      if (r.level) err << " level " << *r.level;
      err << ": " << r.detail << '\n';
      return kFailed;
    }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power, enhanced power and commuting graphs of groups"};
  app.name("hiergraph");
  app.require_subcommand(1);

  GraphArgs graph_args;
  auto* graph = app.add_subcommand("graph", "Build one graph and export it");
  graph->add_option("spec", graph_args.spec, "<kind>:<family>, e.g. pow:genq:3")->required();
  graph->add_option("--format", graph_args.format, "dot, json or csv")
      ->check(CLI::IsMember({"dot", "json", "csv"}));
  graph->add_option("--out", graph_args.out,
                    std::string("Output file (default stdout); relative paths resolve against $") +
                        kOutDirEnv);
  graph->add_option("--level-cap", graph_args.level_cap, "Resource guard on view size");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Verify one claim and print its report");
  check->add_option("claim", check_args.claim,
                    "thm1|thm2|thm3|thm4|thm5|cor32|cor34|prop33|chain")
      ->required();
  check->add_option("family", check_args.family, "Family for thm1-3 and prop33");
  check->add_option("--level", check_args.level, "Truncation level for thm4/thm5/cor32/cor34/chain");
  check->add_option("--chain", check_args.chain, "lq or ld (chain only; default both)");
  check->add_option("--kind", check_args.kind, "pow, epow or com (chain only; default all)");
  check->add_flag("--json", check_args.json, "Print the report as JSON");
  check->add_option("--level-cap", check_args.level_cap, "Resource guard on levels");

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "Run the full claim matrix");
  suite->add_option("--max-level", suite_args.max_level, "Highest truncation level");
  suite->add_option("--format", suite_args.format, "text or json");
  suite->add_option("--level-cap", suite_args.level_cap, "Resource guard on levels");
  suite->add_flag("--corrupt-family-table", suite_args.corrupt)->group("");  // test hook

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (graph->parsed()) return cmd_graph(graph_args, out, err);
  if (check->parsed()) return cmd_check(check_args, out, err);
  return cmd_suite(suite_args, out, err);
}

}  // namespace hiergraph::cli
