#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sscover/polyconvex.hpp"
#include "sscover/pseudo_space.hpp"
#include "sscover/rng.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Checks S(y-z, y-z) >= -tol for all point pairs; returns the first
/// violating pair in lexicographic index order, or nullopt when monotone.
/// The tolerance is scaled like in pair_class.
inline std::optional<std::pair<int, int>> check_monotone(const ScalarProduct& space,
                                                         const std::vector<Vec>& points,
                                                         double tol = kIsotropyTol) {
  if (points.empty()) throw InputError("check_monotone: empty point list");
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Vec diff = points[i] - points[j];
      if (space.square(diff) < -tol * std::max(1.0, diff.squaredNorm())) {
        return std::make_pair(i, j);
      }
    }
  }
  return std::nullopt;
}

/// Finite S-monotone point set: S(y-z, y-z) >= 0 for all members, which is
/// equivalent to every member projecting onto itself.
class MonotoneSet {
 public:
  MonotoneSet(ScalarProduct space, std::vector<Vec> points, double tol = kIsotropyTol)
      : space_(std::move(space)), points_(std::move(points)) {
    if (points_.empty()) throw InputError("monotone set: no points");
    for (const Vec& p : points_) {
      if (p.size() != space_.dim()) {
        throw InputError("monotone set: point dimension does not match the space");
      }
    }
    for (int i = 0; i < size(); ++i) {
      for (int j = i + 1; j < size(); ++j) {
        if ((points_[i] - points_[j]).norm() <= 1e-12) {
          throw InputError("monotone set: points " + std::to_string(i) + " and " +
                           std::to_string(j) + " coincide");
        }
      }
    }
    if (auto bad = check_monotone(space_, points_, tol)) {
      throw InputError("monotone set: pair (" + std::to_string(bad->first) + ", " +
                       std::to_string(bad->second) + ") has negative scalar square");
    }
  }

  const ScalarProduct& space() const { return space_; }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& point(int i) const { return points_[i]; }
  int size() const { return static_cast<int>(points_.size()); }
  int dim() const { return space_.dim(); }

 private:
  ScalarProduct space_;
  std::vector<Vec> points_;
};

/// Fitzpatrick function of G: psi(x) = sup_{y in G} { S(x,y) - S(y,y)/2 },
/// materialized as the polyhedral function with one piece per point,
/// slope S y and intercept S(y,y)/2.
inline PolyConvexFn fitzpatrick(const MonotoneSet& g) {
  Mat slopes(g.size(), g.dim());
  Vec intercepts(g.size());
  for (int i = 0; i < g.size(); ++i) {
    slopes.row(i) = g.space().apply(g.point(i)).transpose();
    intercepts[i] = 0.5 * g.space().square(g.point(i));
  }
  return PolyConvexFn(std::move(slopes), std::move(intercepts));
}

/// The pullback psi_G(S^{-1} z): same intercepts, but each piece keeps the
/// point itself as slope. Its active slopes at S x are exactly the
/// projection P_G(x), which is what the covering constructions consume.
inline PolyConvexFn fitzpatrick_precomposed(const MonotoneSet& g) {
  Mat slopes(g.size(), g.dim());
  Vec intercepts(g.size());
  for (int i = 0; i < g.size(); ++i) {
    slopes.row(i) = g.point(i).transpose();
    intercepts[i] = 0.5 * g.space().square(g.point(i));
  }
  return PolyConvexFn(std::move(slopes), std::move(intercepts));
}

/// Scalar square to the set: phi(x) = min_{y in G} S(x-y, x-y). Satisfies
/// psi(x) = S(x,x)/2 - phi(x)/2 with the Fitzpatrick function above.
inline double scalar_square_to_set(const MonotoneSet& g, const Vec& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& y : g.points()) best = std::min(best, g.space().square(x - y));
  return best;
}

/// Projection onto G with the set of minimizing indices.
struct ProjectionResult {
  std::vector<int> minimizers;  ///< indices into the set, ascending
  double value = 0.0;           ///< attained minimum of S(x-y, x-y)
};

/// P_G(x) = argmin_{y in G} S(x-y, x-y). Ties are resolved with a tolerance
/// relative to max(1, |value|).
inline ProjectionResult project(const MonotoneSet& g, const Vec& x,
                                double tol = kActivityTol) {
  Vec vals(g.size());
  for (int i = 0; i < g.size(); ++i) vals[i] = g.space().square(x - g.point(i));
  ProjectionResult out;
  out.value = vals.minCoeff();
  const double cut = out.value + tol * std::max(1.0, std::abs(out.value));
  for (int i = 0; i < g.size(); ++i) {
    if (vals[i] <= cut) out.minimizers.push_back(i);
  }
  return out;
}

/// Builds the graph {(u_i, v_i)} of a sampled 1-Lipschitz map as a monotone
/// set for the canonical form of index m. Rejects samples violating
/// |v_i - v_j| <= |u_i - u_j| and names the offending pair.
inline MonotoneSet graph_from_lipschitz(int m,
                                        const std::vector<std::pair<Vec, Vec>>& samples) {
  if (samples.empty()) throw InputError("graph_from_lipschitz: no samples");
  if (m < 1) throw InputError("graph_from_lipschitz: m must be positive");
  const int dv = static_cast<int>(samples.front().second.size());
  const int d = m + dv;
  std::vector<Vec> points;
  points.reserve(samples.size());
  for (const auto& [u, v] : samples) {
    if (u.size() != m || v.size() != dv) {
      throw InputError("graph_from_lipschitz: inconsistent sample dimensions");
    }
    Vec p(d);
    p.head(m) = u;
    p.tail(dv) = v;
    points.push_back(std::move(p));
  }
  const int n = static_cast<int>(samples.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double du = (samples[i].first - samples[j].first).norm();
      const double dvn = (samples[i].second - samples[j].second).norm();
      if (dvn > du) {
        throw InputError("graph_from_lipschitz: samples " + std::to_string(i) + " and " +
                         std::to_string(j) + " violate the 1-Lipschitz bound (|dv| = " +
                         std::to_string(dvn) + " > |du| = " + std::to_string(du) + ")");
      }
    }
  }
  return MonotoneSet(ScalarProduct::canonical(d, m), std::move(points));
}

/// Seeded random monotone set in the given space. Points are generated as a
/// strictly 1-Lipschitz graph sample in canonical coordinates (slope margin
/// bounded away from 1) and transported back through the inertia factor, so
/// monotonicity holds with tolerance zero even after rounding.
inline MonotoneSet random_monotone(const ScalarProduct& space, int n, std::uint64_t seed) {
  if (n < 1) throw InputError("random_monotone: n must be positive");
  const int d = space.dim();
  const int m = space.index();
  if (m == 0 && n > 1) {
    throw InputError("random_monotone: an index-0 space only admits singletons");
  }

  Rng rng(mix_seed(seed, 0x6d6f6e6fULL));
  const int mm = std::max(m, 1);  // u-block dimension used for sampling
  const int dv = d - mm;

  // Separated base points in the u-block.
  std::vector<Vec> us;
  double min_sep = 0.08;
  int attempts = 0;
  while (static_cast<int>(us.size()) < n) {
    Vec u(mm);
    for (int i = 0; i < mm; ++i) u[i] = rng.uniform(-1.5, 1.5);
    bool ok = true;
    for (const Vec& w : us) {
      if ((u - w).norm() < min_sep) {
        ok = false;
        break;
      }
    }
    if (ok) us.push_back(std::move(u));
    if (++attempts > 400 * n) {
      min_sep *= 0.5;
      attempts = 0;
    }
  }

  // Componentwise max-affine 1-Lipschitz map with margin: each component has
  // Lipschitz constant (1 - margin)/sqrt(dv), so |dv| <= (1-margin)|du|.
  const double margin = rng.uniform(0.15, 0.3);
  const int pieces = 3;
  std::vector<std::vector<std::pair<Vec, double>>> comps(std::max(dv, 0));
  for (int c = 0; c < dv; ++c) {
    for (int k = 0; k < pieces; ++k) {
      Vec dir = rng.normal_vec(mm);
      const double nn = dir.norm();
      dir = nn > 1e-12 ? Vec((rng.uniform(0.3, 1.0) / nn) * dir) : Vec::Zero(mm);
      comps[c].emplace_back(std::move(dir), rng.uniform(-0.5, 0.5));
    }
  }
  const double scale = dv > 0 ? (1.0 - margin) / std::sqrt(static_cast<double>(dv)) : 0.0;

  std::vector<Vec> canonical_points;
  canonical_points.reserve(n);
  for (const Vec& u : us) {
    Vec p(d);
    p.head(mm) = u;
    for (int c = 0; c < dv; ++c) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& [dir, off] : comps[c]) best = std::max(best, dir.dot(u) + off);
      p[mm + c] = scale * best;
    }
    canonical_points.push_back(std::move(p));
  }

  if (space.is_canonical() && m >= 1) {
    return MonotoneSet(space, std::move(canonical_points), 0.0);
  }
  const InertiaDecomposition dec = inertia(space);
  const auto lu = dec.v.partialPivLu();
  std::vector<Vec> points;
  points.reserve(n);
  for (const Vec& p : canonical_points) points.push_back(lu.solve(p));
  return MonotoneSet(space, std::move(points), 0.0);
}

}  // namespace sscover
