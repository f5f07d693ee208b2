#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hiergraph/family.hpp"

namespace hiergraph {

struct SuiteOptions {
  int max_level = 5;
  /// Test hook: builds the locally quaternion group where the locally
  /// dihedral one belongs, so the "cor32-ld" rows must fail.
  bool corrupt_family_table = false;
};

struct SuiteRow {
  std::string claim;
  std::optional<int> level;
  bool pass = false;
  std::string detail;
};

/// Finite groups on which the equality characterizations are exercised:
/// cyclic:1..36, dihedral:1..16, dicyclic:1..8, and prod(cyclic:p,cyclic:q)
/// for p, q in {2, 3, 5, 7}.
std::vector<FamilySpec> theorem_corpus();

/// Runs the whole claim matrix for levels 2..max_level.
std::vector<SuiteRow> run_suite(const SuiteOptions& options);

std::string suite_report_json(const std::vector<SuiteRow>& rows, int max_level);
std::string suite_report_text(const std::vector<SuiteRow>& rows, int max_level);

}  // namespace hiergraph
