// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "conedet/errors.hpp"

namespace conedet::exact {

/// Arbitrary-precision rational scalar.  GMP keeps values canonical
/// (reduced, positive denominator), so equality is plain operator==.
using Rational = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

/// Build p/q.  Never use the two-argument mpq_rational constructor directly:
/// it does not normalise a negative denominator.  Division does.
inline Rational make_rational(long p, long q = 1) {
  if (q == 0) throw InvalidArgument("rational with zero denominator");
  return Rational(p) / Rational(q);
}

/// Parse "p" or "p/q" with optional leading '-' on the numerator.
Rational parse_rational(const std::string& s);

/// Render as "p" (denominator 1) or "p/q".  Inverse of parse_rational.
std::string rational_to_string(const Rational& r);

Vec parse_rational_vector(const std::vector<std::string>& parts);
std::vector<std::string> rational_vector_to_strings(const Vec& v);

}  // namespace conedet::exact
