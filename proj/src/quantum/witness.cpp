// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/quantum/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "conedet/detect/ops.hpp"
#include "conedet/errors.hpp"
#include "conedet/quantum/pair.hpp"

namespace conedet::quantum {

namespace {

constexpr double kTiny = 1e-300;

void check_shape(const Matrix& w, BipartiteDims dims, const char* what) {
  const int n = dims.total();
  if (w.rows() != n || w.cols() != n) {
    throw InvalidArgument(std::string(what) + ": matrix size does not match the bipartite dimensions");
  }
}

/// Orthonormal basis of the span of the given (normalized) tensor vectors via
/// SVD of the stacked matrix; returns the rank and, optionally, the projector
/// onto the orthogonal complement.
int span_rank_of(const std::vector<ProductVector>& vecs, int n, Matrix* complement) {
  if (vecs.empty()) {
    if (complement) *complement = Matrix::Identity(n, n);
    return 0;
  }
  Matrix stacked(static_cast<Eigen::Index>(vecs.size()), n);
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    Vector t = vecs[i].tensor();
    const double nrm = t.norm();
    if (nrm > kTiny) t /= nrm;
    stacked.row(static_cast<Eigen::Index>(i)) = t.transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * kSpanRankRelTol;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > kTiny) ++rank;
  }
  if (complement) {
    // Row space of `stacked` is the span of the tensors' conjugates; the
    // right singular vectors live in that conjugated picture, so conjugate
    // back before building the projector.
    Matrix basis = svd.matrixV().leftCols(rank).conjugate();
    *complement = Matrix::Identity(n, n) - basis * basis.adjoint();
  }
  return rank;
}

}  // namespace

std::string to_string(WitnessClass c) {
  switch (c) {
    case WitnessClass::Positive:
      return "positive";
    case WitnessClass::Witness:
      return "witness";
    case WitnessClass::NotInW1:
      return "not_in_w1";
  }
  return "unknown";
}

WitnessReport classify_witness(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                               double tol_rel) {
  check_shape(w, dims, "classify_witness");
  WitnessReport r;
  r.min_eigenvalue = min_eigenvalue(w);
  const SeesawResult best = seesaw_min_product(w, dims, opts);
  r.min_product_value = best.value;
  const double tol = tol_rel * std::max(operator_norm(w), kTiny);
  if (r.min_eigenvalue >= -tol) {
    // PSD: nonnegative on all states, products included.  Nothing heuristic.
    r.classification = WitnessClass::Positive;
    r.heuristic = false;
    return r;
  }
  if (r.min_product_value < -tol) {
    // A concrete product vector with negative expectation certifies the
    // verdict; re-evaluate it directly rather than trusting the search value.
    const double direct = product_expectation(w, dims, best.argmin);
    if (direct < -tol) {
      r.classification = WitnessClass::NotInW1;
      r.heuristic = false;
      r.negative_certificate = best.argmin;
      return r;
    }
  }
  // Negative somewhere, but no product vector goes negative as far as the
  // search can tell: an entanglement witness, modulo the search being global.
  r.classification = WitnessClass::Witness;
  r.heuristic = true;
  return r;
}

ZeroSet witness_zero_set(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                         double tol_rel) {
  check_shape(w, dims, "witness_zero_set");
  (void)tol_rel;
  ZeroSet zs;
  const double zero_tol = kZeroValueRel * std::max(operator_norm(w), kTiny);
  std::vector<Matrix> projs;
  for (const SeesawResult& run : seesaw_runs(w, dims, opts)) {
    if (std::abs(run.value) > zero_tol) continue;
    const Matrix p = run.argmin.projector();
    bool dup = false;
    for (const Matrix& q : projs) {
      if ((p - q).norm() < kProjectorDedupTol) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    projs.push_back(p);
    zs.vectors.push_back(run.argmin);
    zs.values.push_back(run.value);
  }
  zs.span_rank = span_rank_of(zs.vectors, dims.total(), nullptr);
  return zs;
}

WitnessOptimality lkch_optimality(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts,
                                  double tol_rel, int directions) {
  check_shape(w, dims, "lkch_optimality");
  const int n = dims.total();
  WitnessPairOracle oracle(dims, opts, tol_rel);

  WitnessOptimality out;
  out.zero_set = witness_zero_set(w, dims, opts, tol_rel);
  out.spanning = (out.zero_set.span_rank == n);

  // The subtraction search gets one extra tailored direction: the projector
  // onto the orthogonal complement of the zero-set span.  Whenever the span
  // is deficient this is the canonical candidate for peeling something off.
  std::vector<Matrix> extras;
  if (!out.zero_set.vectors.empty() && out.zero_set.span_rank < n) {
    Matrix complement;
    span_rank_of(out.zero_set.vectors, n, &complement);
    const double nrm = operator_norm(complement);
    if (nrm > kTiny) extras.push_back(complement / nrm);
  }

  detect::SearchOptions sopt;
  sopt.directions = directions;
  sopt.seed = opts.seed;
  const auto verdict = detect::is_optimal(oracle, w, sopt, extras);
  out.optimal = verdict.optimal;
  out.interior_combination = verdict.interior_combination;
  out.improvable = verdict.improvable;
  out.improvement = verdict.improvement;
  out.verdicts_agree = verdict.verdicts_agree;
  return out;
}

NdNecessaryReport nd_optimality_necessary(const Matrix& w, BipartiteDims dims,
                                          const SeesawOptions& opts, double tol_rel) {
  check_shape(w, dims, "nd_optimality_necessary");
  const int n = dims.total();
  NdNecessaryReport r;
  const Matrix g = partial_transpose(w, dims);
  if (is_psd(g, tol_rel)) {
    r.applicable = false;
    r.explanation =
        "the partial transpose is positive semidefinite, so the operator detects no state "
        "with positive partial transpose and the criterion does not apply";
    return r;
  }
  r.applicable = true;
  const ZeroSet zw = witness_zero_set(w, dims, opts, tol_rel);
  const ZeroSet zg = witness_zero_set(g, dims, opts, tol_rel);
  r.w_spanning = (zw.span_rank == n);
  r.w_gamma_spanning = (zg.span_rank == n);
  r.passes = *r.w_spanning && *r.w_gamma_spanning;
  r.explanation = r.passes
                      ? "the zero products of the operator and of its partial transpose both span "
                        "the full tensor space"
                      : "a zero-product span is deficient, so optimality against the "
                        "positive-partial-transpose pair fails the necessary condition";
  return r;
}

bool separability_small(const Matrix& rho, BipartiteDims dims, double tol_rel) {
  check_shape(rho, dims, "separability_small");
  if (!is_psd(rho, tol_rel)) {
    throw InvalidArgument("separability_small: input is not positive semidefinite");
  }
  const bool small = (dims.d1 == 2 && dims.d2 == 2) || (dims.d1 == 2 && dims.d2 == 3) ||
                     (dims.d1 == 3 && dims.d2 == 2);
  if (!small) {
    throw Undecidable(
        "separability_small: only 2x2 and 2x3 systems are decided exactly; larger systems are "
        "refused rather than approximated");
  }
  return is_ppt(rho, dims, tol_rel);
}

WdPairingReport wd_pairing_check(const Matrix& rho, BipartiteDims dims, int samples,
                                 std::uint64_t seed, double tol_rel) {
  check_shape(rho, dims, "wd_pairing_check");
  const int n = dims.total();
  const Matrix g = partial_transpose(rho, dims);
  const double tol_r = tol_rel * std::max(operator_norm(rho), kTiny);
  const double tol_g = tol_rel * std::max(operator_norm(g), kTiny);

  WdPairingReport rep;
  rep.direct_ok = is_psd(rho, tol_rel) && is_psd(g, tol_rel);

  // Candidate pure states: the eigenvectors of both operators (they attain
  // the extremal expectations, making the sampled route as sharp as the
  // direct one) plus seeded random states.
  std::vector<Vector> cands;
  {
    Eigen::SelfAdjointEigenSolver<Matrix> es_r(rho);
    Eigen::SelfAdjointEigenSolver<Matrix> es_g(g);
    for (int c = 0; c < n; ++c) {
      cands.push_back(es_r.eigenvectors().col(c));
      cands.push_back(es_g.eigenvectors().col(c));
    }
  }
  std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int i = 0; i < samples; ++i) {
    Vector v(n);
    for (int j = 0; j < n; ++j) v(j) = Complex(gauss(rng), gauss(rng));
    const double nrm = v.norm();
    if (nrm < 1e-12) continue;
    cands.push_back(v / nrm);
  }

  rep.pairing_ok = true;
  for (const Vector& v : cands) {
    const double on_rho = std::real((v.adjoint() * (rho * v)).value());
    const double on_gamma = std::real((v.adjoint() * (g * v)).value());
    if (on_rho < -tol_r || on_gamma < -tol_g) {
      rep.pairing_ok = false;
      break;
    }
  }
  rep.consistent = (rep.pairing_ok == rep.direct_ok);
  return rep;
}

}  // namespace conedet::quantum
