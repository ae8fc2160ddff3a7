#pragma once

#include <string>

#include "commands.hpp"

namespace qslice::cli {

/// Suite names accepted by `verify --suite`.
const std::vector<std::string>& suite_names();

/// Runs one suite or "all" (in alphabetical order). The report depends only on
/// the seed, the sample count and the tolerances.
json run_suites(const std::string& suite, const Options& opt);

}  // namespace qslice::cli
