#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "sscover/types.hpp"

namespace sscover {

/// Default tolerance for deciding whether a scalar square vanishes. It is
/// scaled by max(1, |y-z|^2) at the call sites, so it behaves relatively for
/// large coordinates.
inline constexpr double kIsotropyTol = 1e-9;

/// Symmetric invertible bilinear form S of signature (m, d-m):
/// S(x, y) = <x, S y>. The index m is the number of positive eigenvalues.
class ScalarProduct {
 public:
  /// Validates symmetry (componentwise 1e-12), invertibility (smallest
  /// eigenvalue magnitude above 1e-10 of the largest) and the declared index.
  /// The stored matrix is symmetrized, (S + S')/2, to absorb text-file
  /// rounding in the input.
  ScalarProduct(int dim, Mat matrix, int index) : dim_(dim), index_(index) {
    if (dim < 1) throw InputError("scalar product: dimension must be positive");
    if (matrix.rows() != dim || matrix.cols() != dim) {
      throw InputError("scalar product: matrix shape does not match dimension");
    }
    if (index < 0 || index > dim) {
      throw InputError("scalar product: index must lie in {0,...,dim}");
    }
    const double asym = (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
      throw InputError("scalar product: matrix is not symmetric (max |S_ij - S_ji| = " +
                       std::to_string(asym) + ")");
    }
    matrix_ = 0.5 * (matrix + matrix.transpose());

    Eigen::SelfAdjointEigenSolver<Mat> es(matrix_);
    const Vec ev = es.eigenvalues();
    const double lmax = ev.cwiseAbs().maxCoeff();
    const double lmin = ev.cwiseAbs().minCoeff();
    if (lmax <= 0.0 || lmin <= 1e-10 * lmax) {
      throw NumericalError("scalar product: matrix is singular or nearly so");
    }
    int positives = 0;
    for (int i = 0; i < dim; ++i) positives += ev[i] > 0.0 ? 1 : 0;
    if (positives != index) {
      throw InputError("scalar product: declared index " + std::to_string(index) +
                       " but matrix has " + std::to_string(positives) +
                       " positive eigenvalues");
    }
  }

  /// Euclidean dot product: S = I, index d.
  static ScalarProduct identity(int dim) {
    return ScalarProduct(dim, Mat::Identity(dim, dim), dim);
  }

  /// Canonical form of signature (m, d-m): diag(+1 x m, -1 x (d-m)).
  static ScalarProduct canonical(int dim, int index) {
    Mat s = Mat::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) s(i, i) = i < index ? 1.0 : -1.0;
    return ScalarProduct(dim, s, index);
  }

  /// Standard form on R^{2m} = R^m x R^m: S(x,y) = sum_i (x^i y^{m+i} + x^{m+i} y^i).
  /// Monotonicity for this form is classical monotonicity of relations.
  static ScalarProduct standard(int m) {
    const int d = 2 * m;
    Mat s = Mat::Zero(d, d);
    for (int i = 0; i < m; ++i) {
      s(i, m + i) = 1.0;
      s(m + i, i) = 1.0;
    }
    return ScalarProduct(d, s, m);
  }

  int dim() const { return dim_; }
  int index() const { return index_; }
  const Mat& matrix() const { return matrix_; }

  /// S y (the Euclidean representative of the functional S(., y)).
  Vec apply(const Vec& y) const {
    check_dim(y);
    return matrix_ * y;
  }

  Mat inverse() const { return matrix_.partialPivLu().inverse(); }

  double product(const Vec& x, const Vec& y) const {
    check_dim(x);
    check_dim(y);
    return x.dot(matrix_ * y);
  }

  double square(const Vec& x) const { return product(x, x); }

  bool is_canonical() const {
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j) {
        const double want = i != j ? 0.0 : (i < index_ ? 1.0 : -1.0);
        if (matrix_(i, j) != want) return false;
      }
    }
    return true;
  }

 private:
  void check_dim(const Vec& v) const {
    if (v.size() != dim_) {
      throw InputError("scalar product: vector of length " + std::to_string(v.size()) +
                       " in a space of dimension " + std::to_string(dim_));
    }
  }

  int dim_;
  Mat matrix_;
  int index_;
};

inline double sproduct(const ScalarProduct& sp, const Vec& x, const Vec& y) {
  return sp.product(x, y);
}

/// Factorization S = V' L V with L = diag(+1 x m, -1 x (d-m)) and V of full
/// rank; transports the S-space to canonical form.
struct InertiaDecomposition {
  Mat v;                         ///< full-rank transport matrix
  std::vector<int> lambda_signs; ///< +1 entries first, one per dimension

  Mat lambda() const {
    const int d = static_cast<int>(lambda_signs.size());
    Mat l = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) l(i, i) = lambda_signs[i];
    return l;
  }
};

/// Inertia factorization via the symmetric eigendecomposition S = Q D Q':
/// V := |D|^{1/2} Q' with rows reordered so positive eigenvalues lead, and
/// row signs fixed so the largest-magnitude entry of each row is positive.
inline InertiaDecomposition inertia(const ScalarProduct& sp) {
  const int d = sp.dim();
  Eigen::SelfAdjointEigenSolver<Mat> es(sp.matrix());
  const Vec ev = es.eigenvalues();
  const Mat q = es.eigenvectors();

  const double lmax = ev.cwiseAbs().maxCoeff();
  if (lmax <= 0.0 || ev.cwiseAbs().minCoeff() <= 1e-10 * lmax) {
    throw NumericalError("inertia: nearly singular scalar product");
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ev[a] > ev[b]; });

  InertiaDecomposition dec;
  dec.v = Mat(d, d);
  dec.lambda_signs.resize(d);
  for (int i = 0; i < d; ++i) {
    const int k = order[i];
    Vec row = std::sqrt(std::abs(ev[k])) * q.col(k);
    int arg = 0;
    for (int j = 1; j < d; ++j) {
      if (std::abs(row[j]) > std::abs(row[arg])) arg = j;
    }
    if (row[arg] < 0.0) row = -row;
    dec.v.row(i) = row.transpose();
    dec.lambda_signs[i] = ev[k] > 0.0 ? 1 : -1;
  }
  SSCOVER_REQUIRE(std::count(dec.lambda_signs.begin(), dec.lambda_signs.end(), 1) ==
                  sp.index());
  return dec;
}

enum class PairClass { kNegative, kIsotropic, kPositive };

/// Classifies the scalar square q = S(y-z, y-z). The tolerance is scaled by
/// max(1, |y-z|^2) so the decision is relative for far-apart points.
inline PairClass pair_class(const ScalarProduct& sp, const Vec& y, const Vec& z,
                            double tol = kIsotropyTol) {
  if (tol < 0) throw InputError("pair_class: negative tolerance");
  if (y.size() != z.size()) throw InputError("pair_class: dimension mismatch");
  const Vec diff = y - z;
  const double q = sp.square(diff);
  const double scaled = tol * std::max(1.0, diff.squaredNorm());
  if (q > scaled) return PairClass::kPositive;
  if (q < -scaled) return PairClass::kNegative;
  return PairClass::kIsotropic;
}

}  // namespace sscover
