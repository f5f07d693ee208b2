#pragma once

#include <iosfwd>

namespace hiergraph::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      // inconsistent verdict or failed suite claim
  kUsage = 2,       // parse error, bad parameter, resource guard
  kBuildError = 3,  // graph construction or output failure
};

/// Environment variable naming the directory that relative --out paths
/// resolve against.
inline constexpr const char* kOutDirEnv = "HIERGRAPH_OUT_DIR";

/// Default cap on truncation levels; graphs double in size per level.
inline constexpr int kDefaultLevelCap = 10;

/// Entry point of the hiergraph command line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hiergraph::cli
