// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

namespace conedet::detect {

/// What a backend must answer about w1 "is at least as fine as" w2:
/// either the smallest lambda > 0 with w2 - lambda*w1 in the inner cone
/// (plus that inner-cone element), or a functional in the inner dual cone
/// that is strictly negative on w2 and nonnegative on w1.
template <class Element, class Functional, class Scalar>
struct KOrder {
  bool feasible = false;
  Scalar lambda{};
  std::optional<Element> k;
  std::optional<Functional> counterexample;
  bool heuristic = false;  // true when the answer leans on numerical search
};

/// Capabilities a nested cone pair (inner K inside outer L) must provide for
/// the generic detection and optimality operations.  Exact backends answer
/// with zero tolerance; numerical ones scale their tolerance by the operand.
template <class O>
concept ConePairOracle = requires(const O& o, const typename O::Element& w,
                                  const typename O::Functional& y,
                                  const std::vector<typename O::Functional>& ys,
                                  const std::vector<typename O::Scalar>& weights,
                                  const typename O::Scalar& s, int n, std::uint64_t seed) {
  typename O::Element;
  typename O::Functional;
  typename O::Scalar;
  { o.in_K(w) } -> std::convertible_to<bool>;
  { o.in_L(w) } -> std::convertible_to<bool>;
  { o.in_Kstar(y) } -> std::convertible_to<bool>;
  { o.in_Lstar(y) } -> std::convertible_to<bool>;
  { o.interior_Kstar(y) } -> std::convertible_to<bool>;
  { o.pairing(y, w) } -> std::convertible_to<typename O::Scalar>;
  // Extreme points of the face of the outer dual cone annihilated by w.
  { o.zero_functionals(w) } -> std::convertible_to<std::vector<typename O::Functional>>;
  { o.combine(ys, weights) } -> std::convertible_to<typename O::Functional>;
  {
    o.interior_combination(ys)
  } -> std::convertible_to<std::optional<std::vector<typename O::Scalar>>>;
  { o.sample_Kstar(n, seed) } -> std::convertible_to<std::vector<typename O::Functional>>;
  { o.subtract_directions(n, seed) } -> std::convertible_to<std::vector<typename O::Element>>;
  {
    o.decide_k_order(w, w)
  } -> std::convertible_to<KOrder<typename O::Element, typename O::Functional, typename O::Scalar>>;
  // sup {lambda >= 0 : w - lambda*k stays in the outer cone}.
  { o.lambda_max(w, w) } -> std::convertible_to<typename O::Scalar>;
  { o.tolerance(w) } -> std::convertible_to<typename O::Scalar>;
  // Smallest subtraction weight that counts as a genuine improvement of w;
  // anything below is membership slack (zero for exact backends).
  { o.improvement_threshold(w) } -> std::convertible_to<typename O::Scalar>;
  { o.is_zero(w) } -> std::convertible_to<bool>;
  { o.subtract_scaled(w, s, w) } -> std::convertible_to<typename O::Element>;
};

}  // namespace conedet::detect
