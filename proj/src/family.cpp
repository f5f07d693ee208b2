#include "hiergraph/family.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "hiergraph/checked.hpp"
#include "hiergraph/error.hpp"

namespace hiergraph {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t to_int(std::string_view s) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::Parse, "expected integer, got '" + std::string(s) + "'");
  return v;
}

int to_level(std::string_view s) {
  const std::int64_t v = to_int(s);
  if (v > 62 || v < -62) throw Error(ErrorCode::BadParam, "level out of range");
  return static_cast<int>(v);
}

std::vector<std::string> read_param_file(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw Error(ErrorCode::Parse, "cannot read parameter file " + std::string(path));
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view v = line;
    if (auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
    v = trim(v);
    if (!v.empty()) out.emplace_back(v);
  }
  return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  while (true) {
    const auto pos = s.find(sep);
    out.emplace_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::vector<std::int64_t> parse_shifts(std::string_view arg) {
  std::vector<std::int64_t> out;
  if (!arg.empty() && arg.front() == '@') {
    for (const auto& line : read_param_file(arg.substr(1))) out.push_back(to_int(line));
    return out;
  }
  if (auto dots = arg.find(".."); dots != std::string_view::npos) {
    const std::int64_t lo = to_int(arg.substr(0, dots)), hi = to_int(arg.substr(dots + 2));
    if (hi < lo) throw Error(ErrorCode::Parse, "empty range " + std::string(arg));
    if (hi - lo > (std::int64_t{1} << 20)) throw Error(ErrorCode::BadParam, "range too large");
    for (std::int64_t i = lo; i <= hi; ++i) out.push_back(i);
    return out;
  }
  for (const auto& tok : split(arg, ',')) out.push_back(to_int(tok));
  return out;
}

std::vector<ToralParam> parse_params(std::string_view arg) {
  if (arg == "default") return default_qinf_params();
  std::vector<std::string> entries;
  if (!arg.empty() && arg.front() == '@')
    entries = read_param_file(arg.substr(1));
  else
    entries = split(arg, '|');
  std::vector<ToralParam> out;
  for (const auto& e : entries) out.push_back(ToralParam::parse(e));
  return out;
}

// Splits "a,b" at the top-level comma of a prod(...) argument list.
std::pair<std::string_view, std::string_view> split_product_args(std::string_view inner) {
  int depth = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (inner[i] == '(') ++depth;
    if (inner[i] == ')') --depth;
    if (inner[i] == ',' && depth == 0) return {inner.substr(0, i), inner.substr(i + 1)};
  }
  throw Error(ErrorCode::Parse, "prod(...) needs two comma-separated families");
}

void require_positive(std::int64_t v, const char* what) {
  if (v <= 0) throw Error(ErrorCode::BadParam, std::string(what) + " must be positive");
}

std::int64_t pow2(int k) {
  if (k < 0 || k > 62) throw Error(ErrorCode::BadParam, "exponent out of range");
  return std::int64_t{1} << k;
}

std::vector<RationalAngle> angles_with_den_dividing(std::int64_t n) {
  std::vector<RationalAngle> out;
  out.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out.emplace_back(i, n);
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Elem, typename Angle>
std::vector<GroupElement> semidirect_elements(const std::vector<RationalAngle>& angles) {
  std::vector<GroupElement> out;
  for (bool coset : {false, true})
    for (const auto& a : angles) out.push_back(Elem{Angle(a), coset});
  return out;
}

}  // namespace

bool FamilySpec::is_window() const noexcept {
  return std::holds_alternative<InfiniteDihedralWindowSpec>(value) ||
         std::holds_alternative<InfiniteQuaternionWindowSpec>(value);
}

FamilySpec product_spec(FamilySpec left, FamilySpec right) {
  ProductSpec p;
  p.parts.push_back(std::move(left));
  p.parts.push_back(std::move(right));
  return FamilySpec{std::move(p)};
}

FamilySpec parse_family_spec(std::string_view text) {
  text = trim(text);
  if (text.starts_with("prod(")) {
    if (!text.ends_with(")")) throw Error(ErrorCode::Parse, "unterminated prod(");
    auto [l, r] = split_product_args(text.substr(5, text.size() - 6));
    return product_spec(parse_family_spec(l), parse_family_spec(r));
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(ErrorCode::Parse, "expected <family>:<param>, got '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon), arg = trim(text.substr(colon + 1));
  if (name == "cyclic") return {CyclicSpec{to_int(arg)}};
  if (name == "dihedral") return {DihedralSpec{to_int(arg)}};
  if (name == "dicyclic") return {DicyclicSpec{to_int(arg)}};
  if (name == "genq") return {GenQuaternionSpec{to_level(arg)}};
  if (name == "prufer") return {PruferTruncSpec{to_level(arg)}};
  if (name == "lq") return {LocallyQuaternionTruncSpec{to_level(arg)}};
  if (name == "ld") return {LocallyDihedralTruncSpec{to_level(arg)}};
  if (name == "dinf") return {InfiniteDihedralWindowSpec{parse_shifts(arg)}};
  if (name == "qinf") return {InfiniteQuaternionWindowSpec{parse_params(arg)}};
  throw Error(ErrorCode::Parse, "unknown family '" + std::string(name) + "'");
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) return "cyclic:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, DihedralSpec>) return "dihedral:" + std::to_string(s.m);
        if constexpr (std::is_same_v<T, DicyclicSpec>) return "dicyclic:" + std::to_string(s.m);
        if constexpr (std::is_same_v<T, GenQuaternionSpec>) return "genq:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, PruferTruncSpec>) return "prufer:" + std::to_string(s.k);
        if constexpr (std::is_same_v<T, LocallyQuaternionTruncSpec>)
          return "lq:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, LocallyDihedralTruncSpec>)
          return "ld:" + std::to_string(s.n);
        if constexpr (std::is_same_v<T, InfiniteDihedralWindowSpec>) {
          auto v = s.shifts;
          std::sort(v.begin(), v.end());
          bool contiguous = !v.empty();
          for (std::size_t i = 1; i < v.size(); ++i) contiguous &= v[i] == v[i - 1] + 1;
          if (contiguous)
            return "dinf:" + std::to_string(v.front()) + ".." + std::to_string(v.back());
          std::string out = "dinf:";
          for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
          return out;
        }
        if constexpr (std::is_same_v<T, InfiniteQuaternionWindowSpec>) {
          auto params = s.params, defaults = default_qinf_params();
          std::sort(params.begin(), params.end());
          std::sort(defaults.begin(), defaults.end());
          if (params == defaults) return "qinf:default";
          std::string out = "qinf:";
          for (std::size_t i = 0; i < params.size(); ++i)
            out += (i ? "|" : "") + params[i].to_string();
          return out;
        }
        if constexpr (std::is_same_v<T, ProductSpec>)
          return "prod(" + to_string(s.parts[0]) + "," + to_string(s.parts[1]) + ")";
      },
      spec.value);
}

std::int64_t family_size(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::int64_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) return s.n;
        if constexpr (std::is_same_v<T, DihedralSpec>) return checked::mul(2, s.m);
        if constexpr (std::is_same_v<T, DicyclicSpec>) return checked::mul(4, s.m);
        if constexpr (std::is_same_v<T, GenQuaternionSpec>) return pow2(s.n + 1);
        if constexpr (std::is_same_v<T, PruferTruncSpec>) return pow2(s.k);
        if constexpr (std::is_same_v<T, LocallyQuaternionTruncSpec>) return pow2(s.n + 1);
        if constexpr (std::is_same_v<T, LocallyDihedralTruncSpec>) return pow2(s.n + 1);
        if constexpr (std::is_same_v<T, InfiniteDihedralWindowSpec>)
          return 2 * static_cast<std::int64_t>(s.shifts.size());
        if constexpr (std::is_same_v<T, InfiniteQuaternionWindowSpec>)
          return 2 * static_cast<std::int64_t>(s.params.size());
        if constexpr (std::is_same_v<T, ProductSpec>)
          return checked::mul(family_size(s.parts[0]), family_size(s.parts[1]));
      },
      spec.value);
}

FiniteGroupView build_family(const FamilySpec& spec, const BuildLimits& limits) {
  const std::string name = to_string(spec);
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) require_positive(s.n, "cyclic order");
        if constexpr (std::is_same_v<T, DihedralSpec> || std::is_same_v<T, DicyclicSpec>)
          require_positive(s.m, "m");
        if constexpr (std::is_same_v<T, GenQuaternionSpec> ||
                      std::is_same_v<T, LocallyQuaternionTruncSpec> ||
                      std::is_same_v<T, LocallyDihedralTruncSpec>)
          require_positive(s.n, "level");
        if constexpr (std::is_same_v<T, PruferTruncSpec>)
          if (s.k < 0) throw Error(ErrorCode::BadParam, "level must be non-negative");
      },
      spec.value);
  const std::int64_t size = family_size(spec);
  if (size > limits.max_elements)
    throw Error(ErrorCode::BadParam, name + " has " + std::to_string(size) +
                                         " elements, above the limit of " +
                                         std::to_string(limits.max_elements));

  std::vector<GroupElement> elems;
  bool closed = true;
  if (const auto* s = std::get_if<CyclicSpec>(&spec.value)) {
    for (const auto& a : angles_with_den_dividing(s->n)) elems.push_back(CyclicElem{a});
  } else if (const auto* s = std::get_if<PruferTruncSpec>(&spec.value)) {
    for (const auto& a : angles_with_den_dividing(pow2(s->k))) elems.push_back(CyclicElem{a});
  } else if (const auto* s = std::get_if<DihedralSpec>(&spec.value)) {
    elems = semidirect_elements<DihedralElem, RationalAngle>(angles_with_den_dividing(s->m));
  } else if (const auto* s = std::get_if<DicyclicSpec>(&spec.value)) {
    elems = semidirect_elements<DicyclicElem, RationalAngle>(angles_with_den_dividing(2 * s->m));
  } else if (const auto* s = std::get_if<GenQuaternionSpec>(&spec.value)) {
    elems = semidirect_elements<DicyclicElem, RationalAngle>(angles_with_den_dividing(pow2(s->n)));
  } else if (const auto* s = std::get_if<LocallyQuaternionTruncSpec>(&spec.value)) {
    elems = semidirect_elements<LocallyQuaternionElem, DyadicAngle>(
        angles_with_den_dividing(pow2(s->n)));
  } else if (const auto* s = std::get_if<LocallyDihedralTruncSpec>(&spec.value)) {
    elems = semidirect_elements<LocallyDihedralElem, DyadicAngle>(
        angles_with_den_dividing(pow2(s->n)));
  } else if (const auto* s = std::get_if<InfiniteDihedralWindowSpec>(&spec.value)) {
    closed = false;
    std::vector<std::int64_t> shifts = s->shifts;
    std::sort(shifts.begin(), shifts.end());
    if (std::adjacent_find(shifts.begin(), shifts.end()) != shifts.end())
      throw Error(ErrorCode::BadParam, "duplicate shift in " + name);
    if (!std::binary_search(shifts.begin(), shifts.end(), 0))
      throw Error(ErrorCode::BadParam, "window " + name + " must contain shift 0");
    for (bool flip : {false, true})
      for (auto i : shifts) elems.push_back(InfiniteDihedralElem{i, flip});
  } else if (const auto* s = std::get_if<InfiniteQuaternionWindowSpec>(&spec.value)) {
    closed = false;
    std::vector<ToralParam> params = s->params;
    if (params.empty()) throw Error(ErrorCode::BadParam, "empty window");
    for (const auto& p : params)
      if (p.rank() != params[0].rank())
        throw Error(ErrorCode::MismatchedRank, "window " + name + " mixes parameter ranks");
    std::sort(params.begin(), params.end());
    if (std::adjacent_find(params.begin(), params.end()) != params.end())
      throw Error(ErrorCode::BadParam, "duplicate parameter in " + name);
    if (!std::binary_search(params.begin(), params.end(), ToralParam::identity(params[0].rank())))
      throw Error(ErrorCode::BadParam, "window " + name + " must contain the identity parameter");
    for (bool j : {false, true})
      for (const auto& p : params) elems.push_back(InfiniteQuaternionElem{p, j});
  } else if (const auto* s = std::get_if<ProductSpec>(&spec.value)) {
    if (s->parts.size() != 2) throw Error(ErrorCode::BadParam, "product needs two factors");
    if (s->parts[0].is_window() || s->parts[1].is_window())
      throw Error(ErrorCode::BadParam, "products of windows are not supported");
    const FiniteGroupView left = build_family(s->parts[0], limits);
    const FiniteGroupView right = build_family(s->parts[1], limits);
    for (const auto& l : left.elements())
      for (const auto& r : right.elements()) elems.push_back(GroupElement::product(l, r));
  }
  return FiniteGroupView(name, std::move(elems), closed);
}

std::vector<std::int64_t> default_dinf_window(int n) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < pow2(n); ++i) out.push_back(i);
  return out;
}

std::vector<ToralParam> default_qinf_params() {
  return {
      ToralParam::identity(),
      ToralParam::torsion(RationalAngle(1, 2)),
      ToralParam::torsion(RationalAngle(1, 4)),
      ToralParam(RationalAngle{}, {1, 0}),
      ToralParam(RationalAngle{}, {2, 0}),
      ToralParam(RationalAngle{}, {3, 0}),
      ToralParam(RationalAngle{}, {0, 1}),
  };
}

}  // namespace hiergraph
