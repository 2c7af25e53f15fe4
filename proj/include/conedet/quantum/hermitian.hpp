// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace conedet::quantum {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Local dimensions of a bipartite system; composite index (i, j) maps to
/// i * d2 + j.
struct BipartiteDims {
  int d1 = 0;
  int d2 = 0;

  int total() const { return d1 * d2; }
  bool operator==(const BipartiteDims&) const = default;
};

/// Hermiticity tolerance applied when loading operators from files.
inline constexpr double kHermitianLoadTol = 1e-12;

/// A validated Hermitian operator on C^{d1} (x) C^{d2}.
struct BipartiteHermitian {
  BipartiteDims dims;
  Matrix mat;
};

/// Validates the shape and hermiticity (relative deviation at most tol) and
/// stores the symmetrized matrix (W + W^dagger)/2.  Throws InvalidArgument.
BipartiteHermitian make_bipartite_hermitian(BipartiteDims dims, Matrix mat,
                                            double tol = kHermitianLoadTol);

/// Transpose of the second tensor factor.  An involution that commutes with
/// the trace and the Hermitian structure.
Matrix partial_transpose(const Matrix& a, BipartiteDims dims);

/// Largest absolute eigenvalue (the operator norm for Hermitian input).
double operator_norm(const Matrix& a);

double min_eigenvalue(const Matrix& a);

/// Eigenvalues in ascending order.
Eigen::VectorXd eigenvalues(const Matrix& a);

/// Positive semidefinite up to -tol_rel * ||a||; the optional out-parameter
/// receives the smallest eigenvalue.
bool is_psd(const Matrix& a, double tol_rel, double* min_eig = nullptr);

/// Positivity of the partial transpose.  The input must itself be PSD
/// (InvalidArgument otherwise); the optional out-parameter receives the
/// smallest eigenvalue after partial transposition.
bool is_ppt(const Matrix& a, BipartiteDims dims, double tol_rel, double* min_eig = nullptr);

/// A product vector phi (x) psi, kept with unit-norm factors.
struct ProductVector {
  Vector phi;
  Vector psi;

  Vector tensor() const;
  /// Rank-one projector onto the (normalized) product vector.
  Matrix projector() const;
};

ProductVector make_product_vector(Vector phi, Vector psi);

/// <phi (x) psi | W | phi (x) psi> for unit product vectors.
double product_expectation(const Matrix& w, BipartiteDims dims, const ProductVector& pv);

/// Real Hilbert-Schmidt pairing Tr(a b) of Hermitian operators.
double hs_pairing(const Matrix& a, const Matrix& b);

/// The swap operator on C^d (x) C^d: eigenvalues +-1, and its expectation on
/// a product vector is |<phi|psi>|^2.
Matrix swap_operator(int d);

/// Projector onto the maximally entangled vector sum_i |ii> / sqrt(d).
Matrix max_entangled_projector(int d);

}  // namespace conedet::quantum
