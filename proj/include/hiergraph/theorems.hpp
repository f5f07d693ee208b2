#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hiergraph/family.hpp"
#include "hiergraph/graph.hpp"

namespace hiergraph {

// ---------------------------------------------------------------------------
// Obstructions

/// A subgroup certifying that two hierarchy graphs differ:
///   Cpq   commuting x, y of distinct prime orders p, q (C_p x C_q)
///   Cpp   commuting x, y of prime order p with |<x, y>| = p^2 (C_p x C_p)
///   ZFlag an element of infinite order (a copy of Z); x names it
struct ObstructionWitness {
  enum class Kind { Cpq, Cpp, ZFlag };
  Kind kind;
  std::optional<std::string> x, y;
  std::optional<std::int64_t> p, q;

  bool operator==(const ObstructionWitness&) const = default;
};

std::string_view witness_kind_name(ObstructionWitness::Kind kind);
nlohmann::ordered_json to_json(const ObstructionWitness& w);

/// First commuting pair (view order) of distinct prime orders. Closed views only.
std::optional<ObstructionWitness> find_cpq(const FiniteGroupView& view);
/// First commuting pair of equal prime order p generating a group of order p^2.
std::optional<ObstructionWitness> find_cpp(const FiniteGroupView& view);
/// First element of infinite order, on any view.
std::optional<ObstructionWitness> find_infinite_order(const FiniteGroupView& view);

struct TheoremVerdict {
  std::string claim;
  std::string family;
  bool graphs_equal = false;
  std::optional<ObstructionWitness> obstruction;
  /// graphs_equal iff no obstruction was found.
  bool consistent = false;
};

nlohmann::ordered_json to_json(const TheoremVerdict& v);

/// Pow vs EPow against C_p x C_q.
TheoremVerdict check_thm1(const FiniteGroupView& view);
/// EPow vs Com against C_p x C_p.
TheoremVerdict check_thm2(const FiniteGroupView& view);
/// Pow vs Com against C_p x C_q with p, q not necessarily distinct.
TheoremVerdict check_thm3(const FiniteGroupView& view);

// ---------------------------------------------------------------------------
// Chains

enum class Chain { LocallyQuaternion, LocallyDihedral };

Chain parse_chain(std::string_view text);  // "lq" | "ld"
std::string_view chain_name(Chain c);
FamilySpec chain_level(Chain c, int n);

/// The level-(n+1) graph induced on the level-n elements equals the
/// level-n graph.
bool restriction_consistency(Chain chain, GraphKind kind, int n);

// ---------------------------------------------------------------------------
// Bijections

struct BijectionReport {
  std::string claim;
  int level = 0;
  std::string source;  // e.g. "pow:lq:3"
  std::string target;
  std::vector<std::pair<std::string, std::string>> map;
  bool bijective = false;
  bool pass = false;
  /// First source pair whose adjacency is not preserved (source labels).
  std::optional<std::pair<std::string, std::string>> counterexample;
  std::optional<DecompositionSignature> source_signature, target_signature;
  /// Independent verdict of graphs_isomorphic on the two graphs.
  bool isomorphic = false;
};

nlohmann::ordered_json to_json(const BijectionReport& r);

/// Checks that mapping (source index -> target index) is a bijection that
/// preserves adjacency in both directions.
BijectionReport verify_graph_map(const HierarchyGraph& source, const HierarchyGraph& target,
                                 const std::vector<std::size_t>& mapping);

/// f(c) = c, f(c x) = c s from the level-n locally quaternion truncation to
/// the level-n locally dihedral truncation, as view indices.
std::vector<std::size_t> theorem4_map(int n);
/// Pow(lq:n) -> Com(ld:n) under theorem4_map, or under `mapping` if given.
BijectionReport theorem4_witness(int n,
                                 const std::optional<std::vector<std::size_t>>& mapping = {});

/// From the D-infinity window {0..2^n - 1} to ld:n: r^0 -> 0, remaining
/// shifts in order onto the remaining rotations in view order, and
/// f(r^i t) = f(r^i) s.
std::vector<std::size_t> theorem5_map(int n);
/// Com(dinf window) -> Pow(ld:n) under theorem5_map, or `mapping`.
BijectionReport theorem5_witness(int n,
                                 const std::optional<std::vector<std::size_t>>& mapping = {});

// ---------------------------------------------------------------------------
// Strictness and corollaries

struct StrictStep {
  std::string lower, upper;  // "pow" / "epow" / "com"
  bool subset = false;       // E(lower) within E(upper) on the window
  /// First edge of upper missing from lower; a strict inclusion is only
  /// claimed when this is present.
  std::optional<std::pair<std::string, std::string>> witness;
  bool strict() const { return subset && witness.has_value(); }
};

nlohmann::ordered_json to_json(const StrictStep& s);

struct StrictnessReport {
  std::string window;
  StrictStep pow_epow, epow_com;
  /// Neither step may be left without a witness for the claim to be checked.
  bool insufficient_window() const { return !pow_epow.witness || !epow_com.witness; }
  bool pass() const { return pow_epow.strict() && epow_com.strict(); }
};

nlohmann::ordered_json to_json(const StrictnessReport& r);

/// Pow within EPow within Com on an infinite quaternion window, each step
/// witnessed by a missing edge when the window contains one.
StrictnessReport qinf_strictness(const std::vector<ToralParam>& params);

struct CorollaryReport {
  int level = 0;
  // Locally quaternion: all three equal.
  bool lq_pow_epow = false, lq_epow_com = false, lq_pow_com = false;
  // Locally dihedral: Pow = EPow, EPow strictly inside Com.
  bool ld_pow_epow = false;
  StrictStep ld_epow_com;
  // D-infinity window: Pow strictly inside EPow = Com.
  StrictStep dinf_pow_epow;
  bool dinf_epow_com = false;
  std::optional<ObstructionWitness> dinf_z;

  bool lq_pass() const { return lq_pow_epow && lq_epow_com && lq_pow_com; }
  bool ld_pass() const { return ld_pow_epow && ld_epow_com.strict(); }
  bool dinf_pass() const { return dinf_pow_epow.strict() && dinf_epow_com; }
  bool pass() const { return lq_pass() && ld_pass() && dinf_pass(); }
};

nlohmann::ordered_json to_json(const CorollaryReport& r);

/// Locally quaternion, locally dihedral and D-infinity checks at level n.
/// The locally dihedral witness is the first pair of commuting reflections.
CorollaryReport corollary_checks(int n);

/// Strict-inclusion step between two graphs on the same vertices; the
/// witness is the first edge of upper missing from lower.
StrictStep strict_step(const HierarchyGraph& lower, const HierarchyGraph& upper);

}  // namespace hiergraph
