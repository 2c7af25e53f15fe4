// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/sampling.hpp"

#include "conedet/errors.hpp"

namespace conedet::exact {

namespace {

Vec random_int_vector(int space_dim, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  for (;;) {
    Vec v(space_dim);
    bool nonzero = false;
    for (auto& x : v) {
      const long val = dist(rng);
      x = Rational(val);
      nonzero = nonzero || val != 0;
    }
    if (nonzero) return v;
  }
}

std::optional<Cone> try_build(int space_dim, std::vector<Vec> gens, int max_facets) {
  ConeV v;
  try {
    v = make_cone_v(space_dim, std::move(gens));
  } catch (const InvalidArgument&) {
    return std::nullopt;
  }
  if (!proper_report(v).proper()) return std::nullopt;
  Cone c = cone_from_generators(v);
  if (static_cast<int>(c.facets.size()) > max_facets) return std::nullopt;
  return c;
}

}  // namespace

Cone random_proper_cone(int space_dim, std::mt19937_64& rng, const SampleOptions& opts) {
  std::uniform_int_distribution<int> extra(opts.min_extra_gens, opts.max_extra_gens);
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    const int count = space_dim + extra(rng);
    std::vector<Vec> gens;
    gens.reserve(count);
    for (int i = 0; i < count; ++i) gens.push_back(random_int_vector(space_dim, rng, opts.coeff_bound));
    if (auto c = try_build(space_dim, std::move(gens), opts.max_facets)) return *c;
  }
  throw Error("random_proper_cone: rejection budget exhausted");
}

SampledPair random_nested_pair(int space_dim, std::mt19937_64& rng, const SampleOptions& opts) {
  std::uniform_int_distribution<long> coeff(0, 3);
  std::uniform_int_distribution<int> extra(opts.min_extra_gens, opts.max_extra_gens);
  for (int attempt = 0; attempt < opts.max_tries; ++attempt) {
    Cone outer = random_proper_cone(space_dim, rng, opts);
    for (int inner_try = 0; inner_try < 20; ++inner_try) {
      const int count = space_dim + extra(rng);
      std::vector<Vec> gens;
      for (int g = 0; g < count; ++g) {
        // Mix at least two outer rays so the generator tends to sit strictly
        // inside; containment in the outer cone holds by construction.
        Vec v(space_dim, Rational(0));
        int used = 0;
        while (used < 2) {
          v.assign(space_dim, Rational(0));
          used = 0;
          for (const auto& ray : outer.rays) {
            const long c = coeff(rng);
            if (c == 0) continue;
            v = axpy(v, Rational(c), ray);
            ++used;
          }
        }
        if (is_zero_vec(v)) {
          --g;  // cancellation is impossible in a pointed cone, but stay safe
          continue;
        }
        gens.push_back(std::move(v));
      }
      auto inner = try_build(space_dim, std::move(gens), opts.max_facets);
      if (!inner || inner->rays == outer.rays) continue;
      bool contained = true;
      for (const auto& ray : inner->rays) {
        if (!contains(outer, ray)) {
          contained = false;
          break;
        }
      }
      if (!contained) throw Error("random_nested_pair: containment lost (cannot happen)");
      return SampledPair{std::move(*inner), std::move(outer)};
    }
  }
  throw Error("random_nested_pair: rejection budget exhausted");
}

Vec random_point_in(const Cone& c, std::mt19937_64& rng, long coeff_bound) {
  std::uniform_int_distribution<long> coeff(0, coeff_bound);
  for (;;) {
    Vec x(c.space_dim, Rational(0));
    bool nonzero = false;
    for (const auto& ray : c.rays) {
      const long co = coeff(rng);
      if (co == 0) continue;
      x = axpy(x, Rational(co), ray);
      nonzero = true;
    }
    if (nonzero && !is_zero_vec(x)) return x;
  }
}

std::optional<Vec> random_point_between(const SampledPair& pair, std::mt19937_64& rng,
                                        int max_tries) {
  for (int i = 0; i < max_tries; ++i) {
    Vec x = random_point_in(pair.outer, rng);
    if (!contains(pair.inner, x)) return x;
  }
  return std::nullopt;
}

}  // namespace conedet::exact
