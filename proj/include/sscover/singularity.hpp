#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "sscover/monotone.hpp"
#include "sscover/polyconvex.hpp"
#include "sscover/pseudo_space.hpp"
#include "sscover/rng.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// One pair of projection minimizers witnessing a singularity.
struct PairWitness {
  int a = 0;            ///< index into the monotone set
  int b = 0;            ///< index into the monotone set, a < b
  PairClass cls = PairClass::kIsotropic;
  double square = 0.0;  ///< S(y_a - y_b, y_a - y_b)
  std::vector<int> diff_coords;  ///< 1-based coordinates where the pair differs
};

/// A point whose projection is multi-valued, with all witness pairs.
/// Order 0 means every witness pair is isotropic; order 1 means some pair has
/// strictly positive scalar square.
struct SingularPoint {
  Vec location;
  std::vector<PairWitness> witnesses;
  std::vector<int> j_indices;  ///< union of witness diff_coords, 1-based
  int order = 0;

  /// True if some witness pair of the requested class differs in coordinate j
  /// (j = 0 matches any coordinate).
  bool has_witness(PairClass cls, int j) const {
    for (const PairWitness& w : witnesses) {
      if (w.cls != cls) continue;
      if (j == 0) return true;
      if (std::find(w.diff_coords.begin(), w.diff_coords.end(), j) !=
          w.diff_coords.end()) {
        return true;
      }
    }
    return false;
  }
};

/// Classifies x against G: nullopt when the projection is single-valued,
/// otherwise the singular point with every distinct minimizer pair classified.
inline std::optional<SingularPoint> classify_point(const MonotoneSet& g, const Vec& x,
                                                   double tie_tol = kActivityTol,
                                                   double iso_tol = kIsotropyTol) {
  const ProjectionResult pr = project(g, x, tie_tol);
  if (pr.minimizers.size() < 2) return std::nullopt;

  SingularPoint sp;
  sp.location = x;
  sp.order = 0;
  for (std::size_t i = 0; i < pr.minimizers.size(); ++i) {
    for (std::size_t j = i + 1; j < pr.minimizers.size(); ++j) {
      PairWitness w;
      w.a = pr.minimizers[i];
      w.b = pr.minimizers[j];
      const Vec ya = g.point(w.a);
      const Vec yb = g.point(w.b);
      w.square = g.space().square(ya - yb);
      w.cls = pair_class(g.space(), ya, yb, iso_tol);
      SSCOVER_REQUIRE(w.cls != PairClass::kNegative);
      for (int c = 0; c < g.dim(); ++c) {
        if (std::abs(ya[c] - yb[c]) > 1e-12) w.diff_coords.push_back(c + 1);
      }
      if (w.cls == PairClass::kPositive) sp.order = 1;
      for (int c : w.diff_coords) {
        if (std::find(sp.j_indices.begin(), sp.j_indices.end(), c) ==
            sp.j_indices.end()) {
          sp.j_indices.push_back(c);
        }
      }
      sp.witnesses.push_back(std::move(w));
    }
  }
  std::sort(sp.j_indices.begin(), sp.j_indices.end());
  return sp;
}

/// Points of xs where at least two pieces of the given subset are active at
/// the global maximum of f and their slopes differ in coordinate j (1-based).
inline std::vector<Vec> singular_subset(const PolyConvexFn& f,
                                        const std::vector<int>& a_indices, int j,
                                        const std::vector<Vec>& xs,
                                        double tol = kActivityTol) {
  if (j < 1 || j > f.dim()) throw InputError("singular_subset: coordinate out of range");
  std::vector<Vec> out;
  for (const Vec& x : xs) {
    const Vec vals = f.values(x);
    const double top = vals.maxCoeff();
    std::vector<int> active;
    for (int k : a_indices) {
      if (k < 0 || k >= f.size()) {
        throw InputError("singular_subset: piece index out of range");
      }
      if (vals[k] >= top - tol) active.push_back(k);
    }
    bool hit = false;
    for (std::size_t p = 0; p < active.size() && !hit; ++p) {
      for (std::size_t q = p + 1; q < active.size() && !hit; ++q) {
        hit = std::abs(f.slopes()(active[p], j - 1) - f.slopes()(active[q], j - 1)) >
              1e-12;
      }
    }
    if (hit) out.push_back(x);
  }
  return out;
}

/// Seeded search for singular points of the projection. For every point pair
/// the tie set { x : S(x, y-z) = (S(y,y) - S(z,z))/2 } is an affine
/// hyperplane; points are sampled in a ball on it (centered at the projected
/// pair midpoint), classified, and deduplicated within 1e-9. The singular set
/// of a finite G is a union of subsets of these hyperplanes, so pairwise tie
/// sampling reaches every witness pair.
inline std::vector<SingularPoint> candidate_singular_points(
    const MonotoneSet& g, int samples_per_pair, double radius, std::uint64_t seed,
    double tie_tol = kActivityTol, double iso_tol = kIsotropyTol) {
  if (samples_per_pair < 1) {
    throw InputError("candidate_singular_points: samples_per_pair must be >= 1");
  }
  if (radius <= 0) throw InputError("candidate_singular_points: radius must be positive");
  const int d = g.dim();
  std::vector<SingularPoint> found;
  int pair_index = 0;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = a + 1; b < g.size(); ++b, ++pair_index) {
      const Vec ya = g.point(a);
      const Vec yb = g.point(b);
      const Vec w = g.space().apply(ya - yb);
      const double rhs = 0.5 * (g.space().square(ya) - g.space().square(yb));
      SSCOVER_REQUIRE(w.norm() > 0.0);

      const Vec mid = 0.5 * (ya + yb);
      const Vec center = mid + ((rhs - mid.dot(w)) / w.squaredNorm()) * w;
      const Mat basis = orthonormal_complement(w);

      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(pair_index)));
      for (int s = 0; s < samples_per_pair; ++s) {
        const Vec x = center + basis * rng.in_ball(d - 1, radius);
        if (auto sp = classify_point(g, x, tie_tol, iso_tol)) {
          bool duplicate = false;
          for (const SingularPoint& kept : found) {
            if ((kept.location - sp->location).cwiseAbs().maxCoeff() <= 1e-9) {
              duplicate = true;
              break;
            }
          }
          if (!duplicate) found.push_back(std::move(*sp));
        }
      }
    }
  }
  return found;
}

}  // namespace sscover
