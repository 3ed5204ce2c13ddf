#pragma once

#include <algorithm>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "sscover/simplex.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Default absolute tolerance for deciding which affine pieces attain the max.
inline constexpr double kActivityTol = 1e-9;

/// Globally finite polyhedral convex function
///     f(x) = max_k { <x, y_k> - c_k },
/// stored as the list of pieces (slope y_k, intercept c_k). Pieces are kept
/// exactly as given; dominated pieces still matter for conjugates and
/// exposure queries, so nothing is pruned.
class PolyConvexFn {
 public:
  PolyConvexFn(Mat slopes, Vec intercepts)
      : slopes_(std::move(slopes)), intercepts_(std::move(intercepts)) {
    if (slopes_.rows() == 0) throw InputError("polyhedral function: no pieces");
    if (intercepts_.size() != slopes_.rows()) {
      throw InputError("polyhedral function: pieces and intercepts disagree");
    }
  }

  static PolyConvexFn from_pieces(const std::vector<std::pair<Vec, double>>& pieces) {
    if (pieces.empty()) throw InputError("polyhedral function: no pieces");
    const int d = static_cast<int>(pieces.front().first.size());
    Mat slopes(static_cast<int>(pieces.size()), d);
    Vec intercepts(static_cast<int>(pieces.size()));
    for (int k = 0; k < static_cast<int>(pieces.size()); ++k) {
      if (pieces[k].first.size() != d) {
        throw InputError("polyhedral function: slope dimensions disagree");
      }
      slopes.row(k) = pieces[k].first.transpose();
      intercepts[k] = pieces[k].second;
    }
    return PolyConvexFn(std::move(slopes), std::move(intercepts));
  }

  int dim() const { return static_cast<int>(slopes_.cols()); }
  int size() const { return static_cast<int>(slopes_.rows()); }
  Vec slope(int k) const { return slopes_.row(k).transpose(); }
  double intercept(int k) const { return intercepts_[k]; }
  const Mat& slopes() const { return slopes_; }
  const Vec& intercepts() const { return intercepts_; }

  /// All piece values <x, y_k> - c_k at once.
  Vec values(const Vec& x) const {
    check_dim(x);
    return slopes_ * x - intercepts_;
  }

  double operator()(const Vec& x) const { return values(x).maxCoeff(); }

  /// Same pieces scaled by a positive factor: (a f)(x) = max <x, a y_k> - a c_k.
  PolyConvexFn scaled(double factor) const {
    if (factor <= 0) throw InputError("polyhedral function: scale must be positive");
    return PolyConvexFn(factor * slopes_, factor * intercepts_);
  }

 private:
  void check_dim(const Vec& x) const {
    if (x.size() != slopes_.cols()) {
      throw InputError("polyhedral function: point of length " +
                       std::to_string(x.size()) + " in dimension " +
                       std::to_string(slopes_.cols()));
    }
  }

  Mat slopes_;
  Vec intercepts_;
};

inline double eval(const PolyConvexFn& f, const Vec& x) { return f(x); }

/// Piece indices attaining a (possibly restricted) maximum, with the value.
struct ActiveSet {
  std::vector<int> indices;  ///< ascending
  double value = 0.0;
};

/// Argmax of <x, y_k> - c_k over the given subset of pieces; every index
/// within `tol` of the restricted maximum is reported.
inline ActiveSet arg_set(const PolyConvexFn& f, const std::vector<int>& subset,
                         const Vec& x, double tol = kActivityTol) {
  if (subset.empty()) throw InputError("arg_set: empty piece subset");
  const Vec vals = f.values(x);
  ActiveSet out;
  out.value = -std::numeric_limits<double>::infinity();
  for (int k : subset) {
    if (k < 0 || k >= f.size()) throw InputError("arg_set: piece index out of range");
    out.value = std::max(out.value, vals[k]);
  }
  for (int k : subset) {
    if (vals[k] >= out.value - tol) out.indices.push_back(k);
  }
  std::sort(out.indices.begin(), out.indices.end());
  out.indices.erase(std::unique(out.indices.begin(), out.indices.end()),
                    out.indices.end());
  return out;
}

inline std::vector<int> all_pieces(const PolyConvexFn& f) {
  std::vector<int> idx(f.size());
  for (int k = 0; k < f.size(); ++k) idx[k] = k;
  return idx;
}

/// Active slopes at x; the subdifferential of f at x is their convex hull,
/// and f is differentiable at x exactly when a single slope is returned.
inline std::vector<Vec> subdifferential(const PolyConvexFn& f, const Vec& x,
                                        double tol = kActivityTol) {
  const ActiveSet act = arg_set(f, all_pieces(f), x, tol);
  std::vector<Vec> out;
  out.reserve(act.indices.size());
  for (int k : act.indices) out.push_back(f.slope(k));
  return out;
}

/// Convex conjugate f*(y) = sup_x { <x,y> - f(x) }. For a finite max of
/// affine pieces this is the lowest convex interpolation of the intercepts:
///     f*(y) = min { sum_k l_k c_k : l >= 0, sum l_k = 1, sum l_k y_k = y },
/// and +infinity when y is outside the convex hull of the slopes.
inline double conjugate_at(const PolyConvexFn& f, const Vec& y) {
  if (y.size() != f.dim()) throw InputError("conjugate_at: dimension mismatch");
  const int n = f.size();
  const int d = f.dim();
  Mat a(d + 1, n);
  a.topRows(d) = f.slopes().transpose();
  a.row(d).setOnes();
  Vec b(d + 1);
  b.head(d) = y;
  b[d] = 1.0;
  const LpResult lp = solve_lp(a, b, f.intercepts());
  if (lp.status != LpResult::Status::kOptimal) {
    return std::numeric_limits<double>::infinity();
  }
  return lp.value;
}

/// Fenchel equality test: true iff f(x) + f*(y) = <x,y> within tol,
/// equivalently y is a subgradient of f at x. Requires f*(y) finite.
inline bool fenchel_check(const PolyConvexFn& f, const Vec& x, const Vec& y,
                          double tol = kActivityTol) {
  const double fstar = conjugate_at(f, y);
  if (!std::isfinite(fstar)) {
    throw InputError("fenchel_check: y lies outside the slope hull, f*(y) is infinite");
  }
  return std::abs(f(x) + fstar - x.dot(y)) <= tol;
}

/// The function built from the kept pieces only; pointwise <= f.
inline PolyConvexFn restricted(const PolyConvexFn& f, const std::vector<int>& keep) {
  if (keep.empty()) throw InputError("restricted: empty piece subset");
  Mat slopes(static_cast<int>(keep.size()), f.dim());
  Vec intercepts(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    const int k = keep[i];
    if (k < 0 || k >= f.size()) throw InputError("restricted: piece index out of range");
    slopes.row(i) = f.slopes().row(k);
    intercepts[i] = f.intercept(k);
  }
  return PolyConvexFn(std::move(slopes), std::move(intercepts));
}

/// Result of the strict-margin exposure program for one piece.
struct ExposureResult {
  bool exposed = false;
  double margin = 0.0;  ///< best strict gap found, capped at 1
  Vec witness;          ///< point where the piece beats all others by `margin`
};

/// Decides whether piece k is the unique argmax somewhere. Solves
///     max t  s.t.  <x, y_k - y_l> - (c_k - c_l) >= t  for all l != k,  t <= 1,
/// by simplex; the piece is exposed iff the optimal margin exceeds 1e-9.
inline ExposureResult exposure(const PolyConvexFn& f, int k, double margin_tol = 1e-9) {
  if (k < 0 || k >= f.size()) throw InputError("exposure: piece index out of range");
  const int d = f.dim();
  const int n = f.size();
  const int rows = n - 1;
  // Variables: x = p - q with p, q >= 0, tau = 1 - t >= 0, one surplus per row.
  const int cols = 2 * d + 1 + rows;
  Mat a = Mat::Zero(rows, cols);
  Vec b(rows);
  int r = 0;
  for (int l = 0; l < n; ++l) {
    if (l == k) continue;
    const Vec diff = (f.slopes().row(k) - f.slopes().row(l)).transpose();
    a.block(r, 0, 1, d) = diff.transpose();
    a.block(r, d, 1, d) = -diff.transpose();
    a(r, 2 * d) = 1.0;           // tau
    a(r, 2 * d + 1 + r) = -1.0;  // surplus
    b[r] = f.intercept(k) - f.intercept(l) + 1.0;
    ++r;
  }
  Vec c = Vec::Zero(cols);
  c[2 * d] = 1.0;  // minimize tau, i.e. maximize t = 1 - tau

  const LpResult lp = solve_lp(a, b, c);
  SSCOVER_REQUIRE(lp.status == LpResult::Status::kOptimal);
  ExposureResult out;
  out.margin = 1.0 - lp.value;
  out.exposed = out.margin > margin_tol;
  out.witness = lp.x.head(d) - lp.x.segment(d, d);
  return out;
}

/// Piece indices that are the unique argmax at some point; by convex duality
/// these are exactly the slopes attained as gradients of f.
inline std::vector<int> exposed_slopes(const PolyConvexFn& f, double margin_tol = 1e-9) {
  std::vector<int> out;
  for (int k = 0; k < f.size(); ++k) {
    if (exposure(f, k, margin_tol).exposed) out.push_back(k);
  }
  return out;
}

/// True iff `point` lies within tol of conv(generators), measured by the
/// minimal l1 residual of a convex combination (a small feasibility LP).
inline bool hull_membership(const Vec& point, const std::vector<Vec>& generators,
                            double tol = kActivityTol) {
  if (generators.empty()) throw InputError("hull_membership: no generators");
  const int d = static_cast<int>(point.size());
  const int n = static_cast<int>(generators.size());
  // Variables: l (n), e+ (d), e- (d);  min sum(e+ + e-)
  //   s.t. sum_i l_i g_i + e- - e+ = point, sum_i l_i = 1.
  Mat a = Mat::Zero(d + 1, n + 2 * d);
  Vec b(d + 1);
  for (int i = 0; i < n; ++i) {
    if (generators[i].size() != d) {
      throw InputError("hull_membership: generator dimension mismatch");
    }
    a.block(0, i, d, 1) = generators[i];
    a(d, i) = 1.0;
  }
  a.block(0, n, d, d) = -Mat::Identity(d, d);
  a.block(0, n + d, d, d) = Mat::Identity(d, d);
  b.head(d) = point;
  b[d] = 1.0;
  Vec c = Vec::Zero(n + 2 * d);
  c.tail(2 * d).setOnes();
  const LpResult lp = solve_lp(a, b, c);
  SSCOVER_REQUIRE(lp.status == LpResult::Status::kOptimal);
  return lp.value <= tol;
}

}  // namespace sscover
