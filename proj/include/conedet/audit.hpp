// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include <nlohmann/json.hpp>

namespace conedet {

/// Outcome of the randomized cross-check of the library's claims on exact
/// polyhedral pairs.  Every trial fabricates a nested pair and puts three
/// statements to the test with independent re-verification:
///  (i)   the finer-than verdict matches sampled detection behaviour, with
///        certificates (inner element or counterexample functional) checked
///        exactly;
///  (ii)  the two optimality routes (interior combination of the zero set
///        versus subtraction search) agree;
///  (iii) a face of the outer cone meets the inner cone trivially exactly
///        when its relative-interior points are optimal.
/// Invariant: agreements + counterexamples.size() == trials.
struct AuditReport {
  int trials = 0;
  int agreements = 0;
  nlohmann::json counterexamples = nlohmann::json::array();
};

AuditReport theorem_audit(int trials, std::uint64_t seed);

}  // namespace conedet
