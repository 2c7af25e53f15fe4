// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "conedet/exact/linalg.hpp"
#include "conedet/rational.hpp"

namespace conedet::exact {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Outcome of an exact LP solve, always with a checkable certificate:
///  - Optimal:    x (primal), objective = cost.x, dual y with y.b = objective
///                and cost_j - y.A_j >= 0 for every column j (strong duality).
///  - Infeasible: farkas y with y.A_j <= 0 for every column j and y.b > 0.
///  - Unbounded:  no certificate carried (callers treat it as a hard error
///                unless the model is known to be unbounded).
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  Rational objective = 0;
  Vec dual;
  Vec farkas;
};

/// min cost.x  subject to  A x = b, x >= 0.
///
/// Dense two-phase tableau simplex over exact rationals with Bland's
/// anti-cycling pivot rule, so it terminates on every input.  A is given as
/// rows; redundant equality rows are detected and dropped internally.
LpResult solve_lp(const Mat& a, const Vec& b, const Vec& cost);

/// Feasibility of {x >= 0 : Ax = b} (an LP with zero objective).
LpResult lp_feasible(const Mat& a, const Vec& b);

}  // namespace conedet::exact
