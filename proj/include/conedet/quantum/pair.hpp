// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conedet/detect/oracle.hpp"
#include "conedet/quantum/seesaw.hpp"

namespace conedet::quantum {

/// Numerical oracle for the pair K = PSD cone inside L = cone of operators
/// with nonnegative expectation on every product vector, acting on a fixed
/// bipartite space.  Dual side: K* = PSD (self-dual) and L* = separable
/// states.
///
/// Honest limits, reflected in the `heuristic` flags of returned verdicts:
///  - membership in L relies on a multistart alternating minimization of the
///    product expectation; a nonnegative minimum is evidence, not proof;
///  - membership in L* is decided through positivity of the partial
///    transpose, which is exact for 2x2 and 2x3 systems and a relaxation
///    (superset) otherwise;
///  - eigenvalue-based checks (PSD membership, pairings) are plain floating
///    point and are treated as exact up to the stated tolerance.
///
/// All verdicts scale-invariantly use tol_rel * ||argument||_op as the
/// working tolerance.
class WitnessPairOracle {
 public:
  using Element = Matrix;
  using Functional = Matrix;
  using Scalar = double;

  WitnessPairOracle(BipartiteDims dims, SeesawOptions opts = {}, double tol_rel = 1e-9);

  const BipartiteDims& dims() const { return dims_; }
  const SeesawOptions& options() const { return opts_; }
  double tol_rel() const { return tol_rel_; }

  bool in_K(const Matrix& w) const;
  bool in_L(const Matrix& w) const;
  bool in_Kstar(const Matrix& y) const;
  bool in_Lstar(const Matrix& y) const;
  bool interior_Kstar(const Matrix& y) const;

  double pairing(const Matrix& y, const Matrix& w) const;

  std::vector<Matrix> zero_functionals(const Matrix& w) const;
  Matrix combine(const std::vector<Matrix>& ys, const std::vector<double>& weights) const;
  std::optional<std::vector<double>> interior_combination(const std::vector<Matrix>& ys) const;

  std::vector<Matrix> sample_Kstar(int count, std::uint64_t seed) const;
  std::vector<Matrix> subtract_directions(int count, std::uint64_t seed) const;

  detect::KOrder<Matrix, Matrix, double> decide_k_order(const Matrix& w1, const Matrix& w2) const;

  /// Largest lambda with w - lambda*k still in L, by doubling plus bisection
  /// against the membership test, with the boundary resolved in favor of
  /// membership.  A multiple of the identity is handled in closed form: the
  /// minimal product expectation shifts linearly under w -> w - lambda*I.
  double lambda_max(const Matrix& w, const Matrix& k) const;

  double tolerance(const Matrix& w) const;
  /// Improvements below this threshold are indistinguishable from membership
  /// slack and are not reported as genuine (used by the optimality search).
  double improvement_threshold(const Matrix& w) const;
  bool is_zero(const Matrix& w) const;
  Matrix subtract_scaled(const Matrix& w, double s, const Matrix& k) const;

 private:
  bool in_L_with_margin(const Matrix& w, double margin) const;
  double seesaw_value(const Matrix& w) const;

  BipartiteDims dims_;
  SeesawOptions opts_;
  double tol_rel_;
};

static_assert(detect::ConePairOracle<WitnessPairOracle>);

}  // namespace conedet::quantum
