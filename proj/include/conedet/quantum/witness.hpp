// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "conedet/quantum/seesaw.hpp"

namespace conedet::quantum {

/// Relative tolerance defaults shared across the module.  Everything scales
/// with the operator norm of the input so verdicts are invariant under
/// positive rescaling.
inline constexpr double kDefaultTolRel = 1e-9;
/// Zero-set admission: |expectation| <= 1e-7 * ||W||.
inline constexpr double kZeroValueRel = 1e-7;
/// Product projectors closer than this (Hilbert-Schmidt) count as one.
inline constexpr double kProjectorDedupTol = 1e-6;
/// Relative singular-value threshold for the span rank.
inline constexpr double kSpanRankRelTol = 1e-6;

enum class WitnessClass { Positive, Witness, NotInW1 };

std::string to_string(WitnessClass c);

/// Where W sits relative to the PSD cone and the product-positive cone.
/// A found negative product vector certifies NotInW1 exactly; the Witness
/// verdict leans on the see-saw minimum staying nonnegative, hence
/// heuristic = true exactly there.
struct WitnessReport {
  double min_eigenvalue = 0.0;
  double min_product_value = 0.0;
  WitnessClass classification = WitnessClass::Positive;
  bool heuristic = false;
  std::optional<ProductVector> negative_certificate;
};

WitnessReport classify_witness(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                               double tol_rel = kDefaultTolRel);

/// Product vectors annihilating a witness, found by multistart see-saw and
/// deduplicated by projector distance.  span_rank counts the independent
/// tensor vectors among them.
struct ZeroSet {
  std::vector<ProductVector> vectors;
  std::vector<double> values;
  int span_rank = 0;
};

ZeroSet witness_zero_set(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                         double tol_rel = kDefaultTolRel);

/// Optimality of a witness within the product-positive cone over the PSD
/// cone, reported through two independent routes (see detect::is_optimal):
/// (a) the zero set spans the full tensor space, (b) no PSD direction can be
/// peeled off.  Both are kept, with agreement recorded.
struct WitnessOptimality {
  ZeroSet zero_set;
  bool optimal = false;    // spanning route
  bool spanning = false;   // == optimal, kept for readability
  std::optional<std::vector<double>> interior_combination;
  bool improvable = false;
  std::optional<std::pair<Matrix, double>> improvement;  // (direction, lambda_max)
  bool verdicts_agree = false;
};

WitnessOptimality lkch_optimality(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                                  double tol_rel = kDefaultTolRel, int directions = 32);

/// The necessary condition for optimality against the PPT-detecting pair:
/// both W and its partial transpose must be optimal against the PSD cone.
/// Never a sufficiency claim.  applicable = false when the partial transpose
/// is PSD (such a W detects no PPT state).
struct NdNecessaryReport {
  bool applicable = false;
  std::string explanation;
  std::optional<bool> w_spanning;
  std::optional<bool> w_gamma_spanning;
  bool passes = false;
};

NdNecessaryReport nd_optimality_necessary(const Matrix& w, BipartiteDims dims,
                                          const SeesawOptions& opts,
                                          double tol_rel = kDefaultTolRel);

/// Exact separability for 2x2 and 2x3 systems, where it coincides with the
/// positivity of the partial transpose.  Other dimensions are refused
/// (Undecidable) rather than silently approximated.
bool separability_small(const Matrix& rho, BipartiteDims dims, double tol_rel = kDefaultTolRel);

/// Consistency check of the two routes to "rho and its partial transpose are
/// both PSD": sampled pairings against rank-one projectors and their partial
/// transposes versus the direct eigenvalue test.
struct WdPairingReport {
  bool pairing_ok = false;  // all sampled pairings nonnegative within tol
  bool direct_ok = false;   // is_psd(rho) and is_psd(rho^Gamma)
  bool consistent = false;  // the two routes agree
};

WdPairingReport wd_pairing_check(const Matrix& rho, BipartiteDims dims, int samples = 128,
                                 std::uint64_t seed = 0, double tol_rel = kDefaultTolRel);

}  // namespace conedet::quantum
