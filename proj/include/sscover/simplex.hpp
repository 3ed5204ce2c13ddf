#pragma once

#include <vector>

#include "sscover/types.hpp"

namespace sscover {

/// Outcome of a standard-form linear program.
struct LpResult {
  enum class Status { kOptimal, kInfeasible, kUnbounded };
  Status status = Status::kInfeasible;
  Vec x;               ///< primal solution (valid when optimal)
  double value = 0.0;  ///< objective value c'x (valid when optimal)
};

/// Dense two-phase primal simplex for
///     min c'x   s.t.  A x = b,  x >= 0.
///
/// Pivoting follows Bland's rule throughout, so the method terminates and is
/// fully deterministic. Intended for the small dense programs this library
/// produces (tens of variables); no effort is spent on sparsity or scaling.
class SimplexSolver {
 public:
  explicit SimplexSolver(double eps = 1e-11) : eps_(eps) {}

  LpResult solve(Mat A, Vec b, Vec c) const {
    const int m = static_cast<int>(A.rows());
    const int n = static_cast<int>(A.cols());
    SSCOVER_REQUIRE(b.size() == m && c.size() == n);

    for (int i = 0; i < m; ++i) {
      if (b[i] < 0) {
        A.row(i) = -A.row(i);
        b[i] = -b[i];
      }
    }

    // Phase 1: minimize the sum of artificial variables.
    Mat T(m, n + m + 1);
    T.block(0, 0, m, n) = A;
    T.block(0, n, m, m) = Mat::Identity(m, m);
    T.col(n + m) = b;
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    Vec cost1 = Vec::Zero(n + m);
    for (int j = n; j < n + m; ++j) cost1[j] = 1.0;
    if (!run(T, basis, cost1, n + m)) {
      // Phase 1 is always bounded below by 0.
      throw InternalError("simplex: phase 1 reported unbounded");
    }
    double art_sum = 0.0;
    for (int i = 0; i < m; ++i) {
      if (basis[i] >= n) art_sum += T(i, n + m);
    }
    LpResult result;
    if (art_sum > 1e-8) {
      result.status = LpResult::Status::kInfeasible;
      return result;
    }

    // Drive leftover artificials out of the basis; a row with no eligible
    // pivot is a redundant constraint and is dropped.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (basis[i] < n) {
        keep.push_back(i);
        continue;
      }
      int piv = -1;
      for (int j = 0; j < n; ++j) {
        if (std::abs(T(i, j)) > eps_) {
          piv = j;
          break;
        }
      }
      if (piv >= 0) {
        pivot(T, basis, i, piv);
        keep.push_back(i);
      }
    }

    const int m2 = static_cast<int>(keep.size());
    Mat T2(m2, n + 1);
    std::vector<int> basis2(m2);
    for (int r = 0; r < m2; ++r) {
      T2.block(r, 0, 1, n) = T.block(keep[r], 0, 1, n);
      T2(r, n) = T(keep[r], n + m);
      basis2[r] = basis[keep[r]];
      SSCOVER_REQUIRE(basis2[r] < n);
    }

    if (!run(T2, basis2, c, n)) {
      result.status = LpResult::Status::kUnbounded;
      return result;
    }

    result.status = LpResult::Status::kOptimal;
    result.x = Vec::Zero(n);
    for (int r = 0; r < m2; ++r) result.x[basis2[r]] = T2(r, n);
    result.value = c.dot(result.x);
    return result;
  }

 private:
  // Runs simplex iterations on tableau T (rows = constraints, last column =
  // rhs) restricted to columns [0, ncols). Returns false on unboundedness.
  bool run(Mat& T, std::vector<int>& basis, const Vec& cost, int ncols) const {
    const int m = static_cast<int>(T.rows());
    const int rhs = static_cast<int>(T.cols()) - 1;
    // Bland's rule precludes cycling; the cap only guards against pivot-
    // tolerance pathologies on ill-scaled input.
    for (long iter = 0; iter < 100000; ++iter) {
      // Reduced costs r_j = c_j - c_B' B^{-1} A_j over the canonical tableau.
      int enter = -1;
      for (int j = 0; j < ncols; ++j) {
        double r = cost[j];
        for (int i = 0; i < m; ++i) r -= cost[basis[i]] * T(i, j);
        if (r < -eps_) {
          enter = j;  // Bland: smallest improving index
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < m; ++i) {
        if (T(i, enter) > eps_) {
          const double ratio = T(i, rhs) / T(i, enter);
          if (leave < 0 || ratio < best - 1e-12 ||
              (ratio < best + 1e-12 && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(T, basis, leave, enter);
    }
    throw InternalError("simplex: iteration cap reached");
  }

  static void pivot(Mat& T, std::vector<int>& basis, int row, int col) {
    T.row(row) /= T(row, col);
    for (int i = 0; i < T.rows(); ++i) {
      if (i != row && T(i, col) != 0.0) T.row(i) -= T(i, col) * T.row(row);
    }
    basis[row] = col;
  }

  double eps_;
};

inline LpResult solve_lp(const Mat& A, const Vec& b, const Vec& c) {
  return SimplexSolver().solve(A, b, c);
}

}  // namespace sscover
