#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace sscover {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Bad user input: dimension mismatches, malformed files, violated
/// preconditions that callers can fix.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical degeneracy of the data itself (near-singular forms, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

/// Orthonormal basis of the hyperplane orthogonal to w, as the columns of a
/// d x (d-1) matrix (Householder completion of w/|w| to a full basis).
inline Mat orthonormal_complement(const Vec& w) {
  const int d = static_cast<int>(w.size());
  if (d < 1 || w.norm() <= 0.0) {
    throw InputError("orthonormal_complement: zero direction");
  }
  const Vec u = w / w.norm();
  Mat h = Mat::Identity(d, d);
  Vec v = u;
  v[0] -= 1.0;
  const double vn = v.norm();
  if (vn > 1e-12) {
    v /= vn;
    h -= 2.0 * v * v.transpose();  // reflects e1 onto u
  }
  return h.rightCols(d - 1);
}

namespace detail {
inline void check_internal(bool cond, const char* expr, const char* file, int line) {
  if (!cond) {
    throw InternalError(std::string("internal invariant failed: ") + expr + " at " +
                        file + ":" + std::to_string(line));
  }
}
}  // namespace detail

}  // namespace sscover

#define SSCOVER_REQUIRE(cond) \
  ::sscover::detail::check_internal(static_cast<bool>(cond), #cond, __FILE__, __LINE__)
