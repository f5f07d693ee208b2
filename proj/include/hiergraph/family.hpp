#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hiergraph/angle.hpp"
#include "hiergraph/group_view.hpp"

namespace hiergraph {

struct CyclicSpec { std::int64_t n; };
/// D_2m, order 2m.
struct DihedralSpec { std::int64_t m; };
/// Q_4m, order 4m.
struct DicyclicSpec { std::int64_t m; };
/// Q_{2^{n+1}} = Dicyclic(2^{n-1}).
struct GenQuaternionSpec { int n; };
/// Cyclic subgroup of order 2^k of the Prüfer 2-group.
struct PruferTruncSpec { int k; };
/// Level-n subgroup of the locally quaternion group (order 2^{n+1}).
struct LocallyQuaternionTruncSpec { int n; };
/// Level-n subgroup of the locally dihedral group (order 2^{n+1}).
struct LocallyDihedralTruncSpec { int n; };
/// Window of the infinite dihedral group: every r^i and r^i t for listed i.
struct InfiniteDihedralWindowSpec { std::vector<std::int64_t> shifts; };
/// Window of the infinite quaternion group: every x_a and x_a j for listed a.
struct InfiniteQuaternionWindowSpec { std::vector<ToralParam> params; };
struct FamilySpec;
struct ProductSpec { std::vector<FamilySpec> parts; };

/// Description of a finite truncation or window of one of the group families.
struct FamilySpec {
  std::variant<CyclicSpec, DihedralSpec, DicyclicSpec, GenQuaternionSpec, PruferTruncSpec,
               LocallyQuaternionTruncSpec, LocallyDihedralTruncSpec, InfiniteDihedralWindowSpec,
               InfiniteQuaternionWindowSpec, ProductSpec>
      value;

  bool is_window() const noexcept;
};

FamilySpec product_spec(FamilySpec left, FamilySpec right);

/// Parses the family mini-language:
///   cyclic:12  dihedral:8  dicyclic:3  genq:4  prufer:5  lq:4  ld:4
///   dinf:0..7  dinf:-1,0,1,2  dinf:@file
///   qinf:default  qinf:@file  qinf:0/1;0,0|1/2;0,0|0/1;1,0
///   prod(cyclic:2,cyclic:3)
/// Parameter files hold one entry per line; '#' starts a comment.
/// Throws Parse on malformed text.
FamilySpec parse_family_spec(std::string_view text);

/// Canonical text form; parse_family_spec(to_string(s)) describes the same view.
std::string to_string(const FamilySpec& spec);

/// Number of elements the view for spec will have.
std::int64_t family_size(const FamilySpec& spec);

struct BuildLimits {
  std::int64_t max_elements = std::int64_t{1} << 16;
};

/// Enumerates the view in deterministic order: rotation-like elements by
/// (den, num) or shift, then the flip / jpart coset in the same order;
/// products left-major. Windows are marked not closed.
/// Throws BadParam for non-positive parameters, windows missing the
/// identity, duplicate window entries, products of windows, or views larger
/// than limits.max_elements.
FiniteGroupView build_family(const FamilySpec& spec, const BuildLimits& limits = {});

/// Shifts {0, 1, ..., 2^n - 1}.
std::vector<std::int64_t> default_dinf_window(int n);

/// Rank-2 parameters {1, -1, i, g, g^2, g^3, h} with g = (0;1,0), h = (0;0,1).
std::vector<ToralParam> default_qinf_params();

}  // namespace hiergraph
