// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/audit.hpp"

#include <random>
#include <set>
#include <string>
#include <vector>

#include "conedet/detect/ops.hpp"
#include "conedet/errors.hpp"
#include "conedet/exact/pair.hpp"
#include "conedet/exact/sampling.hpp"

namespace conedet {

namespace {

using exact::Cone;
using exact::ExactConePair;
using exact::Face;
using exact::Rational;
using exact::Vec;

/// A point of the outer cone that stays outside the inner one (nullopt when
/// the two cones coincide for all practical purposes).
std::optional<Vec> sample_outside_inner(const ExactConePair& pair, std::mt19937_64& rng) {
  for (int t = 0; t < 200; ++t) {
    Vec x = exact::random_point_in(pair.outer(), rng);
    if (!pair.in_K(x)) return x;
  }
  return std::nullopt;
}

/// The finer-than claim, cross-checked against what sampled functionals
/// actually detect, with every certificate re-verified from scratch.
bool audit_finer(const ExactConePair& pair, const Vec& w1, const Vec& w2, std::uint64_t seed,
                 std::string* why) {
  const auto verdict = detect::is_finer(pair, w1, w2);
  auto samples = pair.sample_Kstar(32, seed);
  if (verdict.finer && !verdict.vacuous) {
    const Vec k = exact::axpy(w2, -*verdict.lambda, w1);
    if (!pair.in_K(k)) {
      *why = "claimed inner-cone certificate is not in the inner cone";
      return false;
    }
    if (!(*verdict.lambda > Rational(0))) {
      *why = "claimed scale is not positive";
      return false;
    }
    if (!detect::detection_superset_check(pair, w1, w2, samples)) {
      *why = "finer verdict contradicted by a sampled functional";
      return false;
    }
  } else if (verdict.finer && verdict.vacuous) {
    if (!pair.in_K(w2)) {
      *why = "vacuous verdict on an element outside the inner cone";
      return false;
    }
  } else {
    if (!verdict.counterexample) {
      *why = "not-finer verdict without a counterexample functional";
      return false;
    }
    const Vec& rho = *verdict.counterexample;
    if (!pair.in_Kstar(rho)) {
      *why = "counterexample functional is not in the inner dual cone";
      return false;
    }
    if (!(pair.pairing(rho, w2) < Rational(0)) || pair.pairing(rho, w1) < Rational(0)) {
      *why = "counterexample functional does not separate the detection sets";
      return false;
    }
    samples.push_back(rho);
    if (detect::detection_superset_check(pair, w1, w2, samples)) {
      *why = "counterexample functional failed to break the sampled superset check";
      return false;
    }
  }
  return true;
}

/// The two optimality routes must agree on exact pairs, and any improvement
/// claim must survive re-application.
bool audit_optimality(const ExactConePair& pair, const Vec& w, std::uint64_t seed,
                      std::string* why) {
  detect::SearchOptions opt;
  opt.directions = 8;
  opt.seed = seed;
  const auto verdict = detect::is_optimal(pair, w, opt);
  if (!verdict.verdicts_agree) {
    *why = "interior-combination and subtraction verdicts disagree";
    return false;
  }
  if (verdict.improvable) {
    const auto& [k, lam] = *verdict.improvement;
    const Vec improved = exact::axpy(w, -lam, k);
    if (!pair.in_L(improved)) {
      *why = "claimed improvement leaves the outer cone";
      return false;
    }
  }
  return true;
}

/// Face law: a face of the outer cone meets the inner cone only at the apex
/// exactly when its relative-interior points are optimal.
bool audit_faces(const ExactConePair& pair, std::uint64_t seed, std::string* why) {
  // A small spread of genuine faces: those generated by single extreme rays,
  // a couple of ray sums, and the whole cone.
  const Cone& outer = pair.outer();
  std::vector<Vec> probes;
  for (std::size_t i = 0; i < outer.rays.size() && probes.size() < 5; ++i) {
    probes.push_back(outer.rays[i]);
  }
  if (outer.rays.size() >= 2) {
    probes.push_back(exact::add(outer.rays[0], outer.rays[1]));
    probes.push_back(exact::add(outer.rays.back(), outer.rays[outer.rays.size() / 2]));
  }
  {
    Vec all(outer.space_dim, Rational(0));
    for (const auto& r : outer.rays) all = exact::add(all, r);
    probes.push_back(all);
  }

  std::set<std::vector<int>> seen;
  detect::SearchOptions opt;
  opt.directions = 8;
  opt.seed = seed;
  for (const Vec& p : probes) {
    const Face f = exact::face_of(outer, p);
    if (f.ray_ids.empty()) continue;  // the apex is outside the law's scope
    if (!seen.insert(f.ray_ids).second) continue;
    const bool trivial = pair.face_meets_inner_trivially(f);
    const Vec x = exact::relint_point(outer, f);
    if (pair.in_K(x)) {
      if (trivial) {
        *why = "face contains an inner-cone point yet claims trivial intersection";
        return false;
      }
      continue;  // optimality is undefined inside the inner cone
    }
    const auto verdict = detect::is_optimal(pair, x, opt);
    if (verdict.optimal != trivial) {
      *why = trivial ? "trivially-meeting face carries a non-optimal relative-interior point"
                     : "optimal point found on a face that meets the inner cone";
      return false;
    }
    if (!verdict.verdicts_agree) {
      *why = "optimality routes disagree on a face relative-interior point";
      return false;
    }
  }
  return true;
}

}  // namespace

AuditReport theorem_audit(int trials, std::uint64_t seed) {
  if (trials < 0) throw InvalidArgument("theorem_audit: trials must be nonnegative");
  AuditReport report;
  report.trials = trials;
  std::mt19937_64 rng(seed ^ 0x94d049bb133111ebULL);

  for (int trial = 0; trial < trials; ++trial) {
    const int dim = 3 + trial % 3;
    std::string why;
    std::string part;
    bool ok = false;
    try {
      exact::SampledPair sampled;
      std::optional<Vec> w1;
      std::optional<Vec> w2;
      for (int attempt = 0; attempt < 50; ++attempt) {
        sampled = exact::random_nested_pair(dim, rng);
        ExactConePair probe(sampled.inner, sampled.outer);
        w1 = sample_outside_inner(probe, rng);
        w2 = sample_outside_inner(probe, rng);
        if (w1 && w2) break;
        w1.reset();
        w2.reset();
      }
      if (!w1 || !w2) {
        why = "could not sample outer-cone elements outside the inner cone";
        part = "setup";
      } else {
        const ExactConePair pair(sampled.inner, sampled.outer);
        const std::uint64_t trial_seed = seed * 1000003ULL + static_cast<std::uint64_t>(trial);
        part = "finer";
        ok = audit_finer(pair, *w1, *w2, trial_seed, &why) &&
             audit_finer(pair, *w2, *w1, trial_seed + 1, &why);
        if (ok) {
          part = "optimality";
          ok = audit_optimality(pair, *w1, trial_seed + 2, &why);
        }
        if (ok) {
          part = "faces";
          ok = audit_faces(pair, trial_seed + 3, &why);
        }
      }
    } catch (const std::exception& e) {
      ok = false;
      why = std::string("exception: ") + e.what();
      if (part.empty()) part = "setup";
    }
    if (ok) {
      ++report.agreements;
    } else {
      report.counterexamples.push_back(
          {{"trial", trial}, {"dimension", dim}, {"part", part}, {"reason", why}});
    }
  }
  return report;
}

}  // namespace conedet
