// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "conedet/detect/oracle.hpp"
#include "conedet/exact/cone.hpp"

namespace conedet::exact {

/// Exact-arithmetic oracle for a nested pair of proper polyhedral cones.
/// Every answer is certified: tolerances are identically zero and the
/// k-order decision returns either the minimal scale with its inner-cone
/// element or a Farkas counterexample functional.
class ExactConePair {
 public:
  using Element = Vec;
  using Functional = Vec;
  using Scalar = Rational;

  /// Requires inner and outer to share the space and inner to be contained
  /// in outer (checked ray-by-ray against the outer facets).
  ExactConePair(Cone inner, Cone outer);

  const Cone& inner() const { return inner_; }
  const Cone& outer() const { return outer_; }
  int space_dim() const { return inner_.space_dim; }

  bool in_K(const Vec& x) const { return contains(inner_, x); }
  bool in_L(const Vec& x) const { return contains(outer_, x); }
  bool in_Kstar(const Vec& y) const;
  bool in_Lstar(const Vec& y) const;
  bool interior_Kstar(const Vec& y) const;
  Rational pairing(const Vec& y, const Vec& x) const { return dot(y, x); }

  /// Extreme rays of the outer dual cone vanishing on w: exactly the outer
  /// facets tight at w.
  std::vector<Vec> zero_functionals(const Vec& w) const;

  Vec combine(const std::vector<Vec>& ys, const std::vector<Rational>& weights) const;

  /// Convex weights placing a combination of ys strictly inside the inner
  /// dual cone, found by maximizing the worst slack over the inner rays.
  std::optional<std::vector<Rational>> interior_combination(const std::vector<Vec>& ys) const;

  /// The inner dual's extreme rays first, then random nonnegative integer
  /// combinations until there are max(n, extreme count) samples.
  std::vector<Vec> sample_Kstar(int n, std::uint64_t seed) const;

  /// The inner cone's extreme rays first, then random combinations.  If any
  /// inner-cone element can be peeled off an outer element, some extreme ray
  /// can, so including all rays makes the subtraction search complete.
  std::vector<Vec> subtract_directions(int n, std::uint64_t seed) const;

  detect::KOrder<Vec, Vec, Rational> decide_k_order(const Vec& w1, const Vec& w2) const;

  Rational lambda_max(const Vec& w, const Vec& k) const;

  Rational tolerance(const Vec&) const { return Rational(0); }
  Rational improvement_threshold(const Vec&) const { return Rational(0); }
  bool is_zero(const Vec& x) const { return is_zero_vec(x); }
  Vec subtract_scaled(const Vec& w, const Rational& s, const Vec& k) const {
    return axpy(w, -s, k);
  }

  /// Does the face (of the outer cone) meet the inner cone only at zero?
  bool face_meets_inner_trivially(const Face& outer_face) const;

 private:
  Cone inner_;
  Cone outer_;
};

static_assert(detect::ConePairOracle<ExactConePair>);

}  // namespace conedet::exact
