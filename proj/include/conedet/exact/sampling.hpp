// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <random>

#include "conedet/exact/cone.hpp"

namespace conedet::exact {

/// Seeded generators for random proper cones and nested pairs at desk scale.
/// Raw generator entries are integers in [-coeff_bound, coeff_bound];
/// candidates are rejected until they are proper and fit the facet budget.
struct SampleOptions {
  int min_extra_gens = 0;
  int max_extra_gens = 2;
  long coeff_bound = 5;
  int max_facets = 12;
  int max_tries = 2000;
};

Cone random_proper_cone(int space_dim, std::mt19937_64& rng, const SampleOptions& opts = {});

/// A nested pair: both proper, inner strictly contained in outer.  The inner
/// cone's generators are nonnegative integer combinations of outer rays, so
/// containment holds by construction (and is re-verified).
struct SampledPair {
  Cone inner;
  Cone outer;
};

SampledPair random_nested_pair(int space_dim, std::mt19937_64& rng, const SampleOptions& opts = {});

/// Nonzero nonnegative integer combination of the cone's extreme rays.
Vec random_point_in(const Cone& c, std::mt19937_64& rng, long coeff_bound = 5);

/// A point of outer \ inner (nullopt when the rejection budget runs out).
std::optional<Vec> random_point_between(const SampledPair& pair, std::mt19937_64& rng,
                                        int max_tries = 200);

}  // namespace conedet::exact
