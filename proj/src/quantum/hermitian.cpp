// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/quantum/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "conedet/errors.hpp"

namespace conedet::quantum {

BipartiteHermitian make_bipartite_hermitian(BipartiteDims dims, Matrix mat, double tol) {
  if (dims.d1 < 2 || dims.d2 < 2) {
    throw InvalidArgument("bipartite operator: local dimensions must be at least 2");
  }
  const int n = dims.total();
  if (mat.rows() != n || mat.cols() != n) {
    throw InvalidArgument("bipartite operator: matrix must be d1*d2 square");
  }
  const double dev = (mat - mat.adjoint()).norm();
  if (dev > tol) {
    throw InvalidArgument("bipartite operator: matrix is not Hermitian");
  }
  Matrix sym = 0.5 * (mat + mat.adjoint().eval());
  return BipartiteHermitian{dims, std::move(sym)};
}

Matrix partial_transpose(const Matrix& a, BipartiteDims dims) {
  const int n = dims.total();
  if (a.rows() != n || a.cols() != n) {
    throw InvalidArgument("partial_transpose: matrix must be d1*d2 square");
  }
  Matrix out(n, n);
  for (int i = 0; i < dims.d1; ++i) {
    for (int k = 0; k < dims.d1; ++k) {
      out.block(i * dims.d2, k * dims.d2, dims.d2, dims.d2) =
          a.block(i * dims.d2, k * dims.d2, dims.d2, dims.d2).transpose();
    }
  }
  return out;
}

Eigen::VectorXd eigenvalues(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double operator_norm(const Matrix& a) {
  if (a.rows() == 0) return 0.0;
  const auto ev = eigenvalues(a);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double min_eigenvalue(const Matrix& a) { return eigenvalues(a)(0); }

bool is_psd(const Matrix& a, double tol_rel, double* min_eig) {
  const double lo = min_eigenvalue(a);
  if (min_eig != nullptr) *min_eig = lo;
  return lo >= -tol_rel * std::max(1e-300, operator_norm(a));
}

bool is_ppt(const Matrix& a, BipartiteDims dims, double tol_rel, double* min_eig) {
  if (!is_psd(a, tol_rel)) {
    throw InvalidArgument("is_ppt: input operator is not positive semidefinite");
  }
  return is_psd(partial_transpose(a, dims), tol_rel, min_eig);
}

Vector ProductVector::tensor() const {
  Vector t(phi.size() * psi.size());
  for (int i = 0; i < phi.size(); ++i) {
    t.segment(i * psi.size(), psi.size()) = phi(i) * psi;
  }
  return t;
}

Matrix ProductVector::projector() const {
  const Vector t = tensor();
  return t * t.adjoint();
}

ProductVector make_product_vector(Vector phi, Vector psi) {
  const double np = phi.norm();
  const double nq = psi.norm();
  if (np == 0.0 || nq == 0.0) {
    throw InvalidArgument("product vector: factors must be nonzero");
  }
  return ProductVector{phi / np, psi / nq};
}

double product_expectation(const Matrix& w, BipartiteDims dims, const ProductVector& pv) {
  if (pv.phi.size() != dims.d1 || pv.psi.size() != dims.d2) {
    throw InvalidArgument("product_expectation: factor dimensions do not match");
  }
  const Vector t = pv.tensor();
  return std::real((t.adjoint() * (w * t)).value());
}

double hs_pairing(const Matrix& a, const Matrix& b) {
  return std::real((a.adjoint() * b).trace());
}

Matrix swap_operator(int d) {
  Matrix v = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      v(i * d + j, j * d + i) = 1.0;
    }
  }
  return v;
}

Matrix max_entangled_projector(int d) {
  Vector omega = Vector::Zero(d * d);
  for (int i = 0; i < d; ++i) omega(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return omega * omega.adjoint();
}

}  // namespace conedet::quantum
