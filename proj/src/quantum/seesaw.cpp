// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/quantum/seesaw.hpp"

#include <limits>
#include <random>

#include "conedet/errors.hpp"

namespace conedet::quantum {

namespace {

Vector random_unit_vector(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
  const double n = v.norm();
  if (n == 0.0) return random_unit_vector(dim, rng);
  return v / n;
}

Vector bottom_eigenvector(const Matrix& a, double* value) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (value != nullptr) *value = es.eigenvalues()(0);
  return es.eigenvectors().col(0);
}

}  // namespace

Matrix contract_first(const Matrix& w, BipartiteDims dims, const Vector& phi) {
  Matrix m2 = Matrix::Zero(dims.d2, dims.d2);
  for (int i = 0; i < dims.d1; ++i) {
    for (int k = 0; k < dims.d1; ++k) {
      m2 += std::conj(phi(i)) * phi(k) * w.block(i * dims.d2, k * dims.d2, dims.d2, dims.d2);
    }
  }
  return m2;
}

Matrix contract_second(const Matrix& w, BipartiteDims dims, const Vector& psi) {
  Matrix m1 = Matrix::Zero(dims.d1, dims.d1);
  for (int i = 0; i < dims.d1; ++i) {
    for (int k = 0; k < dims.d1; ++k) {
      m1(i, k) =
          (psi.adjoint() * (w.block(i * dims.d2, k * dims.d2, dims.d2, dims.d2) * psi)).value();
    }
  }
  return m1;
}

std::vector<SeesawResult> seesaw_runs(const Matrix& w, BipartiteDims dims,
                                      const SeesawOptions& opts) {
  const int n = dims.total();
  if (w.rows() != n || w.cols() != n) {
    throw InvalidArgument("seesaw: matrix must be d1*d2 square");
  }
  const double scale = std::max(1.0, operator_norm(w));
  std::mt19937_64 rng(opts.seed);
  std::vector<SeesawResult> out;
  const int starts = opts.effective_starts(dims);
  out.reserve(static_cast<std::size_t>(starts));
  for (int s = 0; s < starts; ++s) {
    Vector phi = random_unit_vector(dims.d1, rng);
    Vector psi;
    double value = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < opts.max_iters; ++it) {
      psi = bottom_eigenvector(contract_first(w, dims, phi), nullptr);
      phi = bottom_eigenvector(contract_second(w, dims, psi), &value);
      if (std::abs(prev - value) <= opts.conv_tol * scale) break;
      prev = value;
    }
    out.push_back(SeesawResult{value, ProductVector{phi, psi}});
  }
  return out;
}

SeesawResult seesaw_min_product(const Matrix& w, BipartiteDims dims, const SeesawOptions& opts) {
  const auto runs = seesaw_runs(w, dims, opts);
  const SeesawResult* best = &runs.front();
  for (const auto& r : runs) {
    if (r.value < best->value) best = &r;
  }
  return *best;
}

}  // namespace conedet::quantum
