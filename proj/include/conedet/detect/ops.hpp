// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "conedet/detect/oracle.hpp"
#include "conedet/errors.hpp"

namespace conedet::detect {

namespace detail {
template <class T>
T abs_val(const T& t) {
  using std::abs;
  return abs(t);
}
}  // namespace detail

/// Knobs for the sampled searches; all draws are seed-controlled so repeated
/// runs reproduce byte-identical results.
struct SearchOptions {
  int kstar_samples = 64;
  int directions = 32;
  std::uint64_t seed = 0;
};

template <ConePairOracle O>
struct DetectionVerdict {
  bool detected = false;
  typename O::Scalar value{};
  bool domain_ok = false;  // functional in inner dual but not outer dual
};

template <ConePairOracle O>
struct FinerVerdict {
  bool finer = false;
  bool vacuous = false;  // w2 in the inner cone: it detects nothing at all
  std::optional<typename O::Scalar> lambda;
  std::optional<typename O::Element> k;
  std::optional<typename O::Functional> counterexample;
  bool heuristic = false;
};

template <ConePairOracle O>
struct OptimalityVerdict {
  // Route (a): the zero functionals reach the inner dual interior.
  bool optimal = false;
  std::vector<typename O::Functional> zero_set;
  std::optional<std::vector<typename O::Scalar>> interior_combination;
  // Route (b): an inner-cone element can be peeled off w.
  bool improvable = false;
  std::optional<std::pair<typename O::Element, typename O::Scalar>> improvement;
  // The two routes are reported independently and never merged.
  bool verdicts_agree = false;
};

template <ConePairOracle O>
struct ImproveResult {
  typename O::Element improved;
  typename O::Scalar lambda{};
};

/// Does the functional rho catch w?  Requires w in the outer cone.  The
/// domain check keeps rho inside the inner dual and outside the outer dual;
/// inner-cone elements are never detected by inner-dual functionals, so the
/// verdict is automatically false for them.
template <ConePairOracle O>
DetectionVerdict<O> detects(const O& o, const typename O::Element& w,
                            const typename O::Functional& rho) {
  if (!o.in_L(w)) throw InvalidArgument("detects: element outside the outer cone");
  DetectionVerdict<O> v;
  v.value = o.pairing(rho, w);
  v.domain_ok = o.in_Kstar(rho) && !o.in_Lstar(rho);
  v.detected = v.domain_ok && v.value < -o.tolerance(w);
  return v;
}

/// Does w1 catch everything w2 catches?  Decided through the inner-cone
/// order: yes iff some lambda > 0 has w2 - lambda*w1 in the inner cone.
/// When w2 already lies in the inner cone the comparison is vacuous (w2
/// detects nothing) and is flagged as such with lambda = 0.
template <ConePairOracle O>
FinerVerdict<O> is_finer(const O& o, const typename O::Element& w1,
                         const typename O::Element& w2) {
  if (!o.in_L(w1) || !o.in_L(w2)) {
    throw InvalidArgument("is_finer: both elements must lie in the outer cone");
  }
  FinerVerdict<O> v;
  if (o.in_K(w2)) {
    v.finer = true;
    v.vacuous = true;
    v.lambda = typename O::Scalar{};
    v.k = w2;
    return v;
  }
  auto ko = o.decide_k_order(w1, w2);
  v.heuristic = ko.heuristic;
  if (ko.feasible) {
    v.finer = true;
    v.lambda = ko.lambda;
    v.k = std::move(ko.k);
  } else {
    v.counterexample = std::move(ko.counterexample);
  }
  return v;
}

/// Smallest |rho(w1)| / |rho(w2)| over the sampled functionals that detect
/// with w2.  Throws EmptySampleError when none of them does.
template <ConePairOracle O>
typename O::Scalar lambda_star(const O& o, const typename O::Element& w1,
                               const typename O::Element& w2,
                               const std::vector<typename O::Functional>& samples) {
  if (!o.in_L(w1) || !o.in_L(w2)) {
    throw InvalidArgument("lambda_star: both elements must lie in the outer cone");
  }
  bool any = false;
  typename O::Scalar best{};
  for (const auto& rho : samples) {
    if (!o.in_Kstar(rho)) continue;
    const auto p2 = o.pairing(rho, w2);
    if (!(p2 < -o.tolerance(w2))) continue;
    const auto p1 = o.pairing(rho, w1);
    const auto ratio = detail::abs_val(p1) / detail::abs_val(p2);
    if (!any || ratio < best) {
      best = ratio;
      any = true;
    }
  }
  if (!any) throw EmptySampleError("lambda_star: no sampled functional detects with w2");
  return best;
}

/// Extreme points of the zero face {rho in outer dual : rho(w) = 0}.
template <ConePairOracle O>
std::vector<typename O::Functional> zero_set(const O& o, const typename O::Element& w) {
  if (!o.in_L(w)) throw InvalidArgument("zero_set: element outside the outer cone");
  return o.zero_functionals(w);
}

/// Optimality of w (no strictly finer element exists above it), reported
/// through two independent routes:
///  (a) some convex combination of the zero functionals lies in the interior
///      of the inner dual cone;
///  (b) a subtraction search for a nonzero inner-cone element k and
///      lambda > 0 with w - lambda*k still in the outer cone.
/// Route (a) decides `optimal`; route (b) is `improvable`/`improvement`;
/// `verdicts_agree` records whether they point the same way.
template <ConePairOracle O>
OptimalityVerdict<O> is_optimal(const O& o, const typename O::Element& w,
                                const SearchOptions& opt = {},
                                const std::vector<typename O::Element>& extra_directions = {}) {
  if (!o.in_L(w)) throw InvalidArgument("is_optimal: element outside the outer cone");
  if (o.in_K(w)) {
    throw InvalidArgument("is_optimal: element lies in the inner cone and detects nothing");
  }
  OptimalityVerdict<O> v;
  v.zero_set = o.zero_functionals(w);
  if (!v.zero_set.empty()) {
    v.interior_combination = o.interior_combination(v.zero_set);
    if (v.interior_combination) {
      const auto witness_point = o.combine(v.zero_set, *v.interior_combination);
      if (!o.interior_Kstar(witness_point)) {
        throw Error("is_optimal: interior certificate failed re-verification");
      }
    }
  }
  v.optimal = v.interior_combination.has_value();

  auto dirs = o.subtract_directions(opt.directions, opt.seed);
  dirs.insert(dirs.end(), extra_directions.begin(), extra_directions.end());
  for (const auto& k : dirs) {
    if (o.is_zero(k) || !o.in_K(k)) continue;
    const auto lam = o.lambda_max(w, k);
    if (lam > o.improvement_threshold(w)) {
      v.improvable = true;
      v.improvement = std::make_pair(k, lam);
      break;
    }
  }
  v.verdicts_agree = (v.optimal == !v.improvable);
  return v;
}

/// Peel as much of k off w as the outer cone allows.  With lambda supplied,
/// validates that exact step instead of maximizing.  The result is
/// re-verified to stay in the outer cone.
template <ConePairOracle O>
ImproveResult<O> improve(const O& o, const typename O::Element& w, const typename O::Element& k,
                         const std::optional<typename O::Scalar>& requested = std::nullopt) {
  if (!o.in_L(w)) throw InvalidArgument("improve: element outside the outer cone");
  if (o.is_zero(k) || !o.in_K(k)) {
    throw InvalidArgument("improve: direction must be a nonzero inner-cone element");
  }
  typename O::Scalar lam;
  if (requested) {
    lam = *requested;
  } else {
    lam = o.lambda_max(w, k);
  }
  ImproveResult<O> res{o.subtract_scaled(w, lam, k), lam};
  if (!o.in_L(res.improved)) {
    throw InvalidArgument("improve: w - lambda*k leaves the outer cone for this lambda");
  }
  return res;
}

/// Sampled implication check: everything the sampled functionals catch with
/// w2 they must also catch with w1.
template <ConePairOracle O>
bool detection_superset_check(const O& o, const typename O::Element& w1,
                              const typename O::Element& w2,
                              const std::vector<typename O::Functional>& samples) {
  for (const auto& rho : samples) {
    if (!o.in_Kstar(rho)) continue;
    const bool catches_w2 = o.pairing(rho, w2) < -o.tolerance(w2);
    const bool catches_w1 = o.pairing(rho, w1) < -o.tolerance(w1);
    if (catches_w2 && !catches_w1) return false;
  }
  return true;
}

template <ConePairOracle O>
bool detection_superset_check(const O& o, const typename O::Element& w1,
                              const typename O::Element& w2, const SearchOptions& opt) {
  return detection_superset_check(o, w1, w2, o.sample_Kstar(opt.kstar_samples, opt.seed));
}

}  // namespace conedet::detect
