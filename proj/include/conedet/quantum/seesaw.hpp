// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "conedet/quantum/hermitian.hpp"

namespace conedet::quantum {

/// Multistart alternating minimization of <phi (x) psi | W | phi (x) psi>.
/// Each half-step contracts W against one factor and takes the bottom
/// eigenvector of the resulting local operator, so the objective never
/// increases.  starts = 0 means the default 64 * d1 * d2.
struct SeesawOptions {
  int starts = 0;
  int max_iters = 500;
  double conv_tol = 1e-12;
  std::uint64_t seed = 0;

  int effective_starts(BipartiteDims dims) const {
    return starts > 0 ? starts : 64 * dims.d1 * dims.d2;
  }
};

struct SeesawResult {
  double value = 0.0;
  ProductVector argmin;
};

/// One converged local minimum per start, in start order (deterministic for
/// a fixed seed).
std::vector<SeesawResult> seesaw_runs(const Matrix& w, BipartiteDims dims,
                                      const SeesawOptions& opts);

/// The best (smallest) local minimum across the multistart.
SeesawResult seesaw_min_product(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts);

/// Contract W against the first factor: M2 = (phi (x) id)^dagger W (phi (x) id).
Matrix contract_first(const Matrix& w, BipartiteDims dims, const Vector& phi);
/// Contract W against the second factor.
Matrix contract_second(const Matrix& w, BipartiteDims dims, const Vector& psi);

}  // namespace conedet::quantum
