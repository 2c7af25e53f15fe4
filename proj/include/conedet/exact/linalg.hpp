// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "conedet/rational.hpp"

namespace conedet::exact {

/// Dense exact linear algebra over the rationals.  Matrices are row-major
/// vectors of rows; all rows of a Mat must share one length.

Rational dot(const Vec& a, const Vec& b);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& v, const Rational& s);
/// a + s*b
Vec axpy(const Vec& a, const Rational& s, const Vec& b);

/// Scale so the first nonzero coordinate has absolute value 1, keeping its
/// sign.  Rays that differ only by a positive factor collapse to one
/// representative; throws InvalidArgument on the zero vector.
Vec canonical_ray(const Vec& v);

/// Lexicographic order on coordinate vectors (used to keep generator and
/// facet lists in a deterministic order).
bool lex_less(const Vec& a, const Vec& b);

int rank(Mat m);

/// Solve the square system Ax = b; nullopt when A is singular.
std::optional<Vec> solve_square(const Mat& a, const Vec& b);

std::optional<Mat> invert(const Mat& a);

/// Basis of {x : Ax = 0}.
std::vector<Vec> nullspace(const Mat& a, int cols);

/// Indices of a maximal linearly independent subset of the given rows,
/// scanning in order (so the result is deterministic).
std::vector<int> independent_row_subset(const Mat& rows, int cols);

}  // namespace conedet::exact
