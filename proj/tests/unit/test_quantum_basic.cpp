#include <doctest/doctest.h>

#include <cmath>
#include <random>

#include "conedet/errors.hpp"
#include "conedet/quantum/hermitian.hpp"

using namespace conedet;
using namespace conedet::quantum;

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  return 0.5 * (a + a.adjoint().eval());
}

Vector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(g(rng), g(rng));
  return v;
}

}  // namespace

TEST_CASE("bipartite loading validates shape and hermiticity") {
  const BipartiteDims dims{2, 2};
  CHECK(dims.total() == 4);

  Matrix h = Matrix::Identity(4, 4);
  h(0, 1) = Complex(0.0, 1.0);
  h(1, 0) = Complex(0.0, -1.0);
  const auto ok = make_bipartite_hermitian(dims, h);
  CHECK((ok.mat - ok.mat.adjoint()).norm() == 0.0);
  CHECK(ok.dims == dims);

  // Asymmetry below the load tolerance is symmetrized away; above it, it
  // is an error.
  Matrix tiny = h;
  tiny(0, 1) += Complex(1e-13, 0.0);
  CHECK_NOTHROW(make_bipartite_hermitian(dims, tiny));
  Matrix bad = h;
  bad(0, 1) += Complex(1e-6, 0.0);
  CHECK_THROWS_AS(make_bipartite_hermitian(dims, bad), InvalidArgument);

  CHECK_THROWS_AS(make_bipartite_hermitian(dims, Matrix::Identity(3, 3)), InvalidArgument);
  CHECK_THROWS_AS(make_bipartite_hermitian(BipartiteDims{1, 4}, Matrix::Identity(4, 4)),
                  InvalidArgument);
}

TEST_CASE("partial transpose: involution, tensor action, trace pairing") {
  std::mt19937_64 rng(11);
  const BipartiteDims dims{2, 3};
  const Matrix x = random_hermitian(6, rng);
  const Matrix y = random_hermitian(6, rng);

  CHECK((partial_transpose(partial_transpose(x, dims), dims) - x).norm() < 1e-14);
  CHECK(std::abs(partial_transpose(x, dims).trace() - x.trace()) < 1e-13);

  // On a product operator the map transposes only the second factor.
  const Matrix a = random_hermitian(2, rng);
  const Matrix b = random_hermitian(3, rng);
  CHECK((partial_transpose(kron(a, b), dims) - kron(a, b.transpose())).norm() < 1e-13);

  // Tr(X^G Y) = Tr(X Y^G): the map is self-adjoint for the trace pairing.
  CHECK(hs_pairing(partial_transpose(x, dims), y) ==
        doctest::Approx(hs_pairing(x, partial_transpose(y, dims))).epsilon(1e-12));

  CHECK_THROWS_AS(partial_transpose(Matrix::Identity(5, 5), dims), InvalidArgument);
}

TEST_CASE("swap operator algebra") {
  for (int d : {2, 3}) {
    const Matrix v = swap_operator(d);
    CHECK((v * v - Matrix::Identity(d * d, d * d)).norm() == 0.0);
    CHECK((v - v.adjoint()).norm() == 0.0);
    CHECK(min_eigenvalue(v) == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(operator_norm(v) == doctest::Approx(1.0).epsilon(1e-12));

    // Eigenvalue multiplicities: symmetric d(d+1)/2, antisymmetric d(d-1)/2.
    const auto ev = eigenvalues(v);
    int plus = 0, minus = 0;
    for (int i = 0; i < ev.size(); ++i) {
      if (ev(i) > 0) ++plus;
      if (ev(i) < 0) ++minus;
    }
    CHECK(plus == d * (d + 1) / 2);
    CHECK(minus == d * (d - 1) / 2);

    // The product expectation is the squared overlap of the factors.
    std::mt19937_64 rng(100 + d);
    for (int t = 0; t < 5; ++t) {
      const auto pv = make_product_vector(random_vector(d, rng), random_vector(d, rng));
      const double overlap = std::norm((pv.phi.adjoint() * pv.psi).value());
      CHECK(product_expectation(v, BipartiteDims{d, d}, pv) ==
            doctest::Approx(overlap).epsilon(1e-12));
    }

    // Partial transpose of the swap is d times the maximally entangled
    // projector.
    CHECK((partial_transpose(v, BipartiteDims{d, d}) - d * max_entangled_projector(d)).norm() <
          1e-12);
  }
}

TEST_CASE("maximally entangled projector") {
  for (int d : {2, 3}) {
    const Matrix p = max_entangled_projector(d);
    CHECK((p * p - p).norm() < 1e-14);
    CHECK(std::abs(p.trace() - 1.0) < 1e-14);
    CHECK(is_psd(p, 1e-9));
    const auto ev = eigenvalues(p);
    CHECK(ev(ev.size() - 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ev(ev.size() - 2) == doctest::Approx(0.0).epsilon(1e-12));
  }
  // For d=2 the partially transposed projector has smallest eigenvalue -1/2.
  const Matrix g = partial_transpose(max_entangled_projector(2), BipartiteDims{2, 2});
  CHECK(min_eigenvalue(g) == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("psd and ppt predicates") {
  const BipartiteDims dims{2, 2};
  CHECK(is_psd(Matrix::Identity(4, 4), 1e-9));
  CHECK_FALSE(is_psd(-Matrix::Identity(4, 4), 1e-9));
  double lo = 0.0;
  CHECK_FALSE(is_psd(swap_operator(2), 1e-9, &lo));
  CHECK(lo == doctest::Approx(-1.0).epsilon(1e-12));

  CHECK(is_ppt(Matrix::Identity(4, 4), dims, 1e-9));
  double glo = 0.0;
  CHECK_FALSE(is_ppt(max_entangled_projector(2), dims, 1e-9, &glo));
  CHECK(glo == doctest::Approx(-0.5).epsilon(1e-12));
  // Entangled input that is not even a state: the predicate refuses.
  CHECK_THROWS_AS(is_ppt(swap_operator(2), dims, 1e-9), InvalidArgument);

  // The tolerance scales with the operand: a tiny negative dip on a large
  // operator still counts as positive.
  Matrix dip = 1e6 * Matrix::Identity(4, 4);
  dip(3, 3) = -1e-5;
  CHECK(is_psd(dip, 1e-9));
  CHECK_FALSE(is_psd(dip, 1e-13));
}

TEST_CASE("product vectors and expectations") {
  std::mt19937_64 rng(21);
  const BipartiteDims dims{2, 3};
  const auto pv = make_product_vector(random_vector(2, rng), random_vector(3, rng));
  CHECK(pv.phi.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pv.psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // tensor() is the Kronecker product of the factors.
  const Vector t = pv.tensor();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(t(i * 3 + j) - pv.phi(i) * pv.psi(j)) < 1e-15);
    }
  }

  const Matrix proj = pv.projector();
  CHECK((proj * proj - proj).norm() < 1e-13);
  CHECK(std::abs(proj.trace() - 1.0) < 1e-13);

  const Matrix w = random_hermitian(6, rng);
  CHECK(product_expectation(w, dims, pv) ==
        doctest::Approx(std::real((t.adjoint() * w * t).value())).epsilon(1e-12));
  CHECK(hs_pairing(w, proj) == doctest::Approx(product_expectation(w, dims, pv)).epsilon(1e-11));

  CHECK_THROWS_AS(make_product_vector(Vector::Zero(2), random_vector(3, rng)), InvalidArgument);
  CHECK_THROWS_AS(product_expectation(w, dims, make_product_vector(random_vector(3, rng),
                                                                   random_vector(2, rng))),
                  InvalidArgument);
}

TEST_CASE("spectral helpers") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = -3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  const auto ev = eigenvalues(d);
  CHECK(ev(0) == doctest::Approx(-3.0));
  CHECK(ev(1) == doctest::Approx(1.0));
  CHECK(ev(2) == doctest::Approx(2.0));
  CHECK(operator_norm(d) == doctest::Approx(3.0));
  CHECK(min_eigenvalue(d) == doctest::Approx(-3.0));

  // Scaling covariance.
  std::mt19937_64 rng(5);
  const Matrix h = random_hermitian(4, rng);
  CHECK(min_eigenvalue(5.0 * h) == doctest::Approx(5.0 * min_eigenvalue(h)).epsilon(1e-12));
  CHECK(operator_norm(5.0 * h) == doctest::Approx(5.0 * operator_norm(h)).epsilon(1e-12));
}
