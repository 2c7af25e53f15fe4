// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "conedet/quantum/hermitian.hpp"

namespace conedet::quantum {

/// JSON shape for a bipartite Hermitian operator:
///   {"d1": 2, "d2": 2, "matrix": [[[re, im], ...], ...]}
/// with `matrix` a (d1*d2) x (d1*d2) array of [real, imaginary] pairs.
/// Loading enforces squareness and Hermiticity (absolute deviation at most
/// 1e-12) and symmetrizes what it accepts.
BipartiteHermitian parse_bipartite_json(const nlohmann::json& j);

nlohmann::json bipartite_to_json(const BipartiteHermitian& a);

nlohmann::json complex_vector_to_json(const Vector& v);
nlohmann::json product_vector_to_json(const ProductVector& pv);

}  // namespace conedet::quantum
