// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/pair.hpp"

#include <random>

#include "conedet/errors.hpp"
#include "conedet/exact/simplex.hpp"

namespace conedet::exact {

namespace {

// Equality system "sum_j coeff_j * cols[j] = rhs" as LP data (one row per
// coordinate).
Mat columns_system(const std::vector<Vec>& cols, int space_dim) {
  Mat a(space_dim, Vec(cols.size(), Rational(0)));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (int i = 0; i < space_dim; ++i) a[i][j] = cols[j][i];
  }
  return a;
}

}  // namespace

ExactConePair::ExactConePair(Cone inner, Cone outer)
    : inner_(std::move(inner)), outer_(std::move(outer)) {
  if (inner_.space_dim != outer_.space_dim) {
    throw InvalidArgument("cone pair: inner and outer live in different spaces");
  }
  for (const auto& ray : inner_.rays) {
    if (!contains(outer_, ray)) {
      throw InvalidArgument("cone pair: inner cone is not contained in the outer cone");
    }
  }
}

bool ExactConePair::in_Kstar(const Vec& y) const {
  for (const auto& ray : inner_.rays) {
    if (dot(y, ray) < 0) return false;
  }
  return true;
}

bool ExactConePair::in_Lstar(const Vec& y) const {
  for (const auto& ray : outer_.rays) {
    if (dot(y, ray) < 0) return false;
  }
  return true;
}

bool ExactConePair::interior_Kstar(const Vec& y) const {
  for (const auto& ray : inner_.rays) {
    if (dot(y, ray) <= 0) return false;
  }
  return true;
}

std::vector<Vec> ExactConePair::zero_functionals(const Vec& w) const {
  std::vector<Vec> zs;
  for (const auto& facet : outer_.facets) {
    if (dot(facet, w) == 0) zs.push_back(facet);
  }
  return zs;
}

Vec ExactConePair::combine(const std::vector<Vec>& ys, const std::vector<Rational>& weights) const {
  if (ys.size() != weights.size()) throw InvalidArgument("combine: weight count mismatch");
  Vec out(space_dim(), Rational(0));
  for (std::size_t i = 0; i < ys.size(); ++i) out = axpy(out, weights[i], ys[i]);
  return out;
}

std::optional<std::vector<Rational>> ExactConePair::interior_combination(
    const std::vector<Vec>& ys) const {
  if (ys.empty()) return std::nullopt;
  // Maximize t subject to: sum_i c_i <ys_i, r> >= t on every inner ray r,
  // sum_i c_i = 1, c >= 0.  Strict feasibility means t* > 0.  Variables:
  // c (|ys|), t+ and t- (t free), one slack per inner ray.
  const std::size_t k = ys.size();
  const std::size_t rays = inner_.rays.size();
  const std::size_t nvar = k + 2 + rays;
  Mat a(rays + 1, Vec(nvar, Rational(0)));
  Vec b(rays + 1, Rational(0));
  for (std::size_t j = 0; j < rays; ++j) {
    for (std::size_t i = 0; i < k; ++i) a[j][i] = dot(ys[i], inner_.rays[j]);
    a[j][k] = -1;      // -t+
    a[j][k + 1] = 1;   // +t-
    a[j][k + 2 + j] = -1;
  }
  for (std::size_t i = 0; i < k; ++i) a[rays][i] = 1;
  b[rays] = 1;
  Vec cost(nvar, Rational(0));
  cost[k] = -1;  // maximize t = t+ - t-
  cost[k + 1] = 1;
  const auto lp = solve_lp(a, b, cost);
  if (lp.status != LpStatus::Optimal) {
    throw Error("interior_combination: slack maximization did not solve");
  }
  if (-lp.objective <= 0) return std::nullopt;  // best t is not strictly positive
  std::vector<Rational> weights(lp.x.begin(), lp.x.begin() + static_cast<std::ptrdiff_t>(k));
  return weights;
}

std::vector<Vec> ExactConePair::sample_Kstar(int n, std::uint64_t seed) const {
  std::vector<Vec> out = inner_.facets;  // extreme rays of the inner dual
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(0, 4);
  const std::size_t target = std::max<std::size_t>(static_cast<std::size_t>(n), out.size());
  while (out.size() < target) {
    Vec y(space_dim(), Rational(0));
    bool nonzero = false;
    for (const auto& f : inner_.facets) {
      const long c = coeff(rng);
      if (c == 0) continue;
      y = axpy(y, Rational(c), f);
      nonzero = true;
    }
    if (!nonzero || is_zero_vec(y)) continue;
    out.push_back(canonical_ray(y));
  }
  return out;
}

std::vector<Vec> ExactConePair::subtract_directions(int n, std::uint64_t seed) const {
  std::vector<Vec> out = inner_.rays;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coeff(0, 4);
  const std::size_t target = std::max<std::size_t>(static_cast<std::size_t>(n), out.size());
  while (out.size() < target) {
    Vec x(space_dim(), Rational(0));
    bool nonzero = false;
    for (const auto& ray : inner_.rays) {
      const long c = coeff(rng);
      if (c == 0) continue;
      x = axpy(x, Rational(c), ray);
      nonzero = true;
    }
    if (!nonzero || is_zero_vec(x)) continue;
    out.push_back(canonical_ray(x));
  }
  return out;
}

detect::KOrder<Vec, Vec, Rational> ExactConePair::decide_k_order(const Vec& w1,
                                                                 const Vec& w2) const {
  // min lambda subject to lambda*w1 + sum_i a_i r_i = w2, lambda >= 0, a >= 0
  // over the inner extreme rays r_i.
  std::vector<Vec> cols;
  cols.push_back(w1);
  cols.insert(cols.end(), inner_.rays.begin(), inner_.rays.end());
  Mat a = columns_system(cols, space_dim());
  Vec cost(cols.size(), Rational(0));
  cost[0] = 1;
  const auto lp = solve_lp(a, w2, cost);
  detect::KOrder<Vec, Vec, Rational> res;
  if (lp.status == LpStatus::Optimal) {
    res.feasible = true;
    res.lambda = lp.x[0];
    res.k = axpy(w2, -res.lambda, w1);
    if (!in_K(*res.k)) throw Error("decide_k_order: certificate left the inner cone");
    return res;
  }
  if (lp.status != LpStatus::Infeasible) {
    throw Error("decide_k_order: unexpected unbounded order program");
  }
  // Farkas vector y: y.w1 <= 0, y.r <= 0 on inner rays, y.w2 > 0; its
  // negation is an inner-dual functional nonnegative on w1, negative on w2.
  Vec rho = canonical_ray(scale(lp.farkas, Rational(-1)));
  if (!in_Kstar(rho) || !(dot(rho, w2) < 0) || dot(rho, w1) < 0) {
    throw Error("decide_k_order: counterexample failed re-verification");
  }
  res.counterexample = std::move(rho);
  return res;
}

Rational ExactConePair::lambda_max(const Vec& w, const Vec& k) const {
  // max lambda subject to lambda*k + sum_j b_j l_j = w over outer rays l_j.
  std::vector<Vec> cols;
  cols.push_back(k);
  cols.insert(cols.end(), outer_.rays.begin(), outer_.rays.end());
  Mat a = columns_system(cols, space_dim());
  Vec cost(cols.size(), Rational(0));
  cost[0] = -1;
  const auto lp = solve_lp(a, w, cost);
  if (lp.status == LpStatus::Infeasible) {
    throw InvalidArgument("lambda_max: element outside the outer cone");
  }
  if (lp.status == LpStatus::Unbounded) {
    // Impossible for nonzero k in a pointed outer cone.
    throw Error("lambda_max: unbounded subtraction (cannot happen)");
  }
  return -lp.objective;
}

bool ExactConePair::face_meets_inner_trivially(const Face& outer_face) const {
  // Nontrivial intersection iff some convex combination of face generators
  // equals a nonnegative combination of inner rays: sum a_i f_i = sum b_j r_j
  // with sum a_i = 1 (normalization is harmless since the cones are pointed).
  const auto fgens = face_generators(outer_, outer_face);
  if (fgens.empty()) return true;
  const std::size_t p = fgens.size();
  const std::size_t q = inner_.rays.size();
  Mat a(space_dim() + 1, Vec(p + q, Rational(0)));
  Vec b(space_dim() + 1, Rational(0));
  for (std::size_t j = 0; j < p; ++j) {
    for (int i = 0; i < space_dim(); ++i) a[i][j] = fgens[j][i];
    a[space_dim()][j] = 1;
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (int i = 0; i < space_dim(); ++i) a[i][p + j] = -inner_.rays[j][i];
  }
  b[space_dim()] = 1;
  return lp_feasible(a, b).status == LpStatus::Infeasible;
}

}  // namespace conedet::exact
