// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace conedet::cli {

/// Exit codes: 0 = verdict computed, 1 = invalid input, 2 = inconclusive
/// (heuristic routes produced conflicting evidence; numerical backend only).
struct RunResult {
  int exit_code = 0;
  std::string output;
};

/// Runs one invocation (argv without the program name).  Never throws: every
/// failure becomes an {"error": ...} report with exit code 1.  Identical
/// (inputs, options, seed) produce byte-identical output.
RunResult run(const std::vector<std::string>& args);

}  // namespace conedet::cli
