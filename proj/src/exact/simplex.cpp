// conedet: detection and optimality for nested pairs of proper cones
// Copyright 2026 The conedet authors
// SPDX-License-Identifier: Apache-2.0

#include "conedet/exact/simplex.hpp"

#include <cstddef>
#include <limits>

#include "conedet/errors.hpp"

namespace conedet::exact {

namespace {

// Full-tableau two-phase simplex.  Columns: [0, n) original variables,
// [n, n+m) artificials, n+m the right-hand side.  Two reduced-cost rows are
// maintained through every pivot so phase 2 starts for free.
class Tableau {
 public:
  Tableau(const Mat& a, const Vec& b, const Vec& cost)
      : m_(a.size()), n_(cost.size()), sign_(m_, 1) {
    rows_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) throw InvalidArgument("solve_lp: row length mismatch");
      Vec row(n_ + m_ + 1, Rational(0));
      const bool flip = b[i] < 0;
      if (flip) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
      row[n_ + i] = 1;
      row[n_ + m_] = flip ? Rational(-b[i]) : b[i];
      rows_.push_back(std::move(row));
      basis_.push_back(static_cast<int>(n_ + i));
    }
    // Phase-1 reduced costs: artificials cost 1 and form the basis, so the
    // reduced cost of column j is c1_j minus its column sum.
    r1_.assign(n_ + m_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) r1_[j] = (j >= n_) ? Rational(1) : Rational(0);
    for (const auto& row : rows_) {
      for (std::size_t j = 0; j <= n_ + m_; ++j) r1_[j] -= row[j];
    }
    // Phase-2 reduced costs: the artificial basis has zero phase-2 cost.
    r2_.assign(n_ + m_ + 1, Rational(0));
    for (std::size_t j = 0; j < n_; ++j) r2_[j] = cost[j];
  }

  LpResult run() {
    if (!phase(r1_, /*allow_artificial=*/true)) {
      throw Error("solve_lp: phase 1 unbounded (cannot happen)");
    }
    if (r1_.back() < 0) return infeasible();  // phase-1 optimum -r1.back() > 0
    drop_artificials();
    if (!phase(r2_, /*allow_artificial=*/false)) {
      LpResult res;
      res.status = LpStatus::Unbounded;
      return res;
    }
    return optimal();
  }

 private:
  // Bland's rule: enter the lowest-index column with a negative reduced cost;
  // among the minimum-ratio rows, leave by the lowest basis index.  Returns
  // false when the objective is unbounded below.
  bool phase(Vec& r, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? n_ + m_ : n_;
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (r[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      Rational best_ratio = 0;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][enter] <= 0) continue;
        const Rational ratio = rows_[i].back() / rows_[i][enter];
        if (leave == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / rows_[row][col];
    for (auto& v : rows_[row]) v *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == row) continue;
      eliminate(rows_[i], rows_[row], col);
    }
    eliminate(r1_, rows_[row], col);
    eliminate(r2_, rows_[row], col);
    basis_[row] = static_cast<int>(col);
  }

  static void eliminate(Vec& target, const Vec& pivot_row, std::size_t col) {
    if (target[col] == 0) return;
    const Rational f = target[col];
    for (std::size_t j = 0; j < target.size(); ++j) target[j] -= f * pivot_row[j];
  }

  // After a zero-cost phase 1, pivot basic artificials onto original columns;
  // rows that admit no such pivot are redundant equalities and are removed.
  void drop_artificials() {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < static_cast<int>(n_)) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (rows_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  LpResult infeasible() const {
    LpResult res;
    res.status = LpStatus::Infeasible;
    // Phase-1 multipliers: the reduced cost of artificial column i is
    // 1 - y_i, and the row flips transfer as signs.
    res.farkas.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      res.farkas[i] = sign_[i] * (Rational(1) - r1_[n_ + i]);
    }
    return res;
  }

  LpResult optimal() const {
    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < static_cast<int>(n_)) res.x[basis_[i]] = rows_[i].back();
    }
    res.objective = -r2_.back();
    // Phase-2 multipliers from the artificial columns (cost 0 there, so the
    // reduced cost is -y_i); the multipliers stay valid for the original row
    // set even after redundant rows were dropped.
    res.dual.assign(m_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      res.dual[i] = sign_[i] * Rational(-r2_[n_ + i]);
    }
    return res;
  }

  std::size_t m_, n_;
  std::vector<int> sign_;
  Mat rows_;
  std::vector<int> basis_;
  Vec r1_, r2_;
};

}  // namespace

LpResult solve_lp(const Mat& a, const Vec& b, const Vec& cost) {
  if (a.size() != b.size()) throw InvalidArgument("solve_lp: rows/rhs mismatch");
  Tableau t(a, b, cost);
  return t.run();
}

LpResult lp_feasible(const Mat& a, const Vec& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  return solve_lp(a, b, Vec(n, Rational(0)));
}

}  // namespace conedet::exact
