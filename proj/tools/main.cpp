// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdio>
#include <string>
#include <vector>

#include "conedet/cli/run.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const conedet::cli::RunResult result = conedet::cli::run(args);
  std::fputs(result.output.c_str(), stdout);
  return result.exit_code;
}
