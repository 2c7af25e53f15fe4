// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/linalg.hpp"

#include <algorithm>
#include <cstddef>

#include "conedet/errors.hpp"

namespace conedet::exact {

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidArgument("add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw InvalidArgument("sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Vec& v, const Rational& s) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

Vec axpy(const Vec& a, const Rational& s, const Vec& b) {
  if (a.size() != b.size()) throw InvalidArgument("axpy: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

Vec canonical_ray(const Vec& v) {
  for (const auto& x : v) {
    if (x != 0) {
      const Rational f = (x > 0) ? x : Rational(-x);
      return scale(v, Rational(1) / f);
    }
  }
  throw InvalidArgument("canonical_ray: zero vector");
}

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

// Row echelon reduction in place.  Returns the list of pivot columns; after
// the call m holds the reduced rows (pivot rows first).
std::vector<int> echelon(Mat& m) {
  std::vector<int> pivot_cols;
  if (m.empty()) return pivot_cols;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    const Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  return pivot_cols;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelon(m).size()); }

std::optional<Vec> solve_square(const Mat& a, const Vec& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw InvalidArgument("solve_square: size mismatch");
  Mat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidArgument("solve_square: matrix not square");
    aug[i].push_back(b[i]);
  }
  const auto pivots = echelon(aug);
  // A pivot in the augmented column means the system is inconsistent; fewer
  // than n pivots in the left block means the matrix is singular.
  if (pivots.size() != n) return std::nullopt;
  for (int c : pivots) {
    if (c >= static_cast<int>(n)) return std::nullopt;
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = aug[i][n];
  return x;
}

std::optional<Mat> invert(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw InvalidArgument("invert: matrix not square");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  const auto pivots = echelon(aug);
  // [A|I] always has n pivots; A is invertible only if they all fall in the
  // left block.
  if (pivots.size() != n) return std::nullopt;
  for (int c : pivots) {
    if (c >= static_cast<int>(n)) return std::nullopt;
  }
  Mat inv(n, Vec(n));
  // After full reduction the left block is a permuted identity; row i carries
  // pivot column pivots[i], so it is the pivots[i]-th row of the inverse.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[pivots[i]][j] = aug[i][n + j];
  }
  return inv;
}

std::vector<Vec> nullspace(const Mat& a, int cols) {
  Mat m = a;
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_row_subset(const Mat& rows, int cols) {
  std::vector<int> chosen;
  Mat acc;
  int r = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) {
      throw InvalidArgument("independent_row_subset: row length mismatch");
    }
    acc.push_back(rows[i]);
    const int nr = rank(acc);
    if (nr > r) {
      chosen.push_back(static_cast<int>(i));
      r = nr;
    } else {
      acc.pop_back();
    }
    if (r == cols) break;
  }
  return chosen;
}

}  // namespace conedet::exact
