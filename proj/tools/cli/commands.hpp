#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "json_io.hpp"

namespace qslice::cli {

/// Exit codes of the qslice tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFailed = 1,
  kExitBadInput = 2,
  kExitOutOfDomain = 3,
  kExitLibraryError = 4,
};

struct Options {
  std::uint64_t seed = 1;
  int samples = 64;
  std::map<std::string, double> tolerances;
  bool csv = false;

  /// Tolerance by key, falling back to the built-in default.
  double tol(const std::string& key) const;
  /// Throws InputError on unknown keys, non-positive values or samples < 1.
  void validate() const;
};

/// Keys accepted by --tol KEY=VAL with their defaults.
const std::map<std::string, double>& default_tolerances();

struct Output {
  json data;
  std::optional<std::string> csv;  // set for sample-grid verbs under --csv
  int exit_code = kExitOk;
};

Output eval_cmd(const json& fn, const Quaternion& q, const Options& opt);
Output log_cmd(const json& fn, BranchIndex h, std::optional<Complex> basepoint, const Options& opt);
Output root_cmd(const json& fn, int n, BranchIndex h, std::optional<Complex> basepoint, const Options& opt);
Output bch_cmd(const json& f, const json& g, const Options& opt);
Output dexp_cmd(const json& f, const Quaternion& q, const Options& opt);
Output lift_cmd(const json& path, BranchIndex h, const Options& opt);
Output monodromy_cmd(const json& path, const Options& opt);
Output verify_cmd(const std::string& suite, const Options& opt);

}  // namespace qslice::cli
