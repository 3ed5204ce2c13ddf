#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sscover/monotone.hpp"
#include "sscover/polyconvex.hpp"
#include "sscover/pseudo_space.hpp"
#include "sscover/rng.hpp"
#include "sscover/singularity.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Sub-vector with the j-th coordinate removed (j is 1-based).
inline Vec drop_coord(const Vec& x, int j) {
  const int d = static_cast<int>(x.size());
  if (j < 1 || j > d) throw InputError("drop_coord: coordinate out of range");
  Vec u(d - 1);
  for (int i = 0, t = 0; i < d; ++i) {
    if (i != j - 1) u[t++] = x[i];
  }
  return u;
}

/// Inverse of drop_coord: re-inserts value s at the j-th coordinate.
inline Vec insert_coord(const Vec& u, int j, double s) {
  const int d = static_cast<int>(u.size()) + 1;
  if (j < 1 || j > d) throw InputError("insert_coord: coordinate out of range");
  Vec x(d);
  for (int i = 0, t = 0; i < d; ++i) {
    x[i] = (i == j - 1) ? s : u[t++];
  }
  return x;
}

/// Rescales every vector by its j-th coordinate, y -> y / y^j, mapping a set
/// with positive j-th coordinates into the slice { y : y^j = 1 }.
inline std::vector<Vec> rescale_by_coord(const std::vector<Vec>& c, int j) {
  std::vector<Vec> out;
  out.reserve(c.size());
  for (const Vec& y : c) {
    if (j < 1 || j > y.size()) throw InputError("rescale_by_coord: coordinate out of range");
    const double yj = y[j - 1];
    if (yj <= 0.0) {
      throw InputError("rescale_by_coord: nonpositive j-th coordinate");
    }
    out.push_back(y / yj);
  }
  return out;
}

/// A c-c surface: the zero set of h(x) = x^j + g1(x^{-j}) - g2(x^{-j}) with
/// convex polyhedral g1, g2, optionally precomposed with a matrix M (the
/// surface is then { x : h(Mx) = 0 }). Where h is differentiable its gradient
/// lies in the finite normal_set, whose members all have j-th coordinate 1.
struct CcSurface {
  int dim;
  int j;  ///< distinguished coordinate, 1-based
  PolyConvexFn g1;
  PolyConvexFn g2;
  std::vector<Vec> normal_set;
  std::optional<Mat> precompose;

  CcSurface(int dim_, int j_, PolyConvexFn g1_, PolyConvexFn g2_,
            std::vector<Vec> normals, std::optional<Mat> pre = std::nullopt)
      : dim(dim_),
        j(j_),
        g1(std::move(g1_)),
        g2(std::move(g2_)),
        normal_set(std::move(normals)),
        precompose(std::move(pre)) {
    if (j < 1 || j > dim) throw InputError("cc surface: coordinate out of range");
    if (g1.dim() != dim - 1 || g2.dim() != dim - 1) {
      throw InputError("cc surface: g1/g2 must have dimension dim - 1");
    }
    for (const Vec& n : normal_set) {
      if (n.size() != dim || std::abs(n[j - 1] - 1.0) > 1e-12) {
        throw InputError("cc surface: normal without unit j-th coordinate");
      }
    }
    if (precompose && (precompose->rows() != dim || precompose->cols() != dim)) {
      throw InputError("cc surface: precompose shape mismatch");
    }
  }
};

inline double eval_surface(const CcSurface& surf, const Vec& x) {
  if (x.size() != surf.dim) throw InputError("eval_surface: dimension mismatch");
  const Vec z = surf.precompose ? Vec(*surf.precompose * x) : x;
  const Vec u = drop_coord(z, surf.j);
  return z[surf.j - 1] + surf.g1(u) - surf.g2(u);
}

namespace detail {

/// Materializes the partial conjugate slice
///     g(r, u) = inf_s { f(s, u) - s r },   s the j-th coordinate of the input,
/// as a polyhedral function of u. By LP duality the infimum equals the best
/// convex combination of two pieces whose j-th slope coordinates straddle r
/// (weights chosen so the combined j-th coordinate is exactly r), together
/// with pieces hitting r exactly. Requires pieces on both sides of r,
/// otherwise the infimum is -infinity.
inline PolyConvexFn partial_conjugate_slice(const PolyConvexFn& f, int j, double r) {
  std::vector<int> below, above, exact;
  for (int k = 0; k < f.size(); ++k) {
    const double yj = f.slopes()(k, j - 1);
    if (yj < r) {
      below.push_back(k);
    } else if (yj > r) {
      above.push_back(k);
    } else {
      exact.push_back(k);
    }
  }
  SSCOVER_REQUIRE(!(exact.empty() && (below.empty() || above.empty())));

  std::vector<std::pair<Vec, double>> pieces;
  for (int k : exact) {
    pieces.emplace_back(drop_coord(f.slope(k), j), f.intercept(k));
  }
  for (int k : below) {
    for (int l : above) {
      const double yk = f.slopes()(k, j - 1);
      const double yl = f.slopes()(l, j - 1);
      const double lam = (yl - r) / (yl - yk);
      SSCOVER_REQUIRE(std::abs(lam * yk + (1.0 - lam) * yl - r) <= 1e-9);
      Vec slope = lam * drop_coord(f.slope(k), j) + (1.0 - lam) * drop_coord(f.slope(l), j);
      pieces.emplace_back(std::move(slope), lam * f.intercept(k) + (1.0 - lam) * f.intercept(l));
    }
  }
  return PolyConvexFn::from_pieces(pieces);
}

inline std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline void dedupe_vectors(std::vector<Vec>& vs, double tol) {
  std::vector<Vec> kept;
  for (const Vec& v : vs) {
    bool dup = false;
    for (const Vec& k : kept) {
      if ((v - k).cwiseAbs().maxCoeff() <= tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(v);
  }
  vs = std::move(kept);
}

}  // namespace detail

/// Builds the c-c surface whose zero set contains every point where the
/// subdifferential of f meets both piece groups:
///     { x : some piece of c1 and some piece of c2 subgradient f at x }
///       is contained in { x : h(x) = 0 }.
///
/// Requires a gap in the j-th slope coordinate, a = max_{c1} y^j < b =
/// min_{c2} y^j. With r_i = a + i (b-a)/3 and the partial conjugate slices
/// g(r, .) of the restriction of f to c1 and c2, the surface stores
/// g1 = g(r2,.)/(r2-r1) and g2 = g(r1,.)/(r2-r1), so that
/// h = x^j + g1 - g2 = x^j + (g(r2,.) - g(r1,.))/(r2-r1). Its normal set is
/// the rescaled difference set { (y_l - y_k)/(y_l^j - y_k^j) }.
inline CcSurface build_cc_surface(const PolyConvexFn& f, int j,
                                  const std::vector<int>& c1,
                                  const std::vector<int>& c2) {
  if (c1.empty() || c2.empty()) throw InputError("build_cc_surface: empty piece group");
  if (j < 1 || j > f.dim()) throw InputError("build_cc_surface: coordinate out of range");
  for (int k : detail::sorted_union(c1, c2)) {
    if (k < 0 || k >= f.size()) throw InputError("build_cc_surface: piece index out of range");
  }
  double a = -std::numeric_limits<double>::infinity();
  double b = std::numeric_limits<double>::infinity();
  for (int k : c1) a = std::max(a, f.slopes()(k, j - 1));
  for (int l : c2) b = std::min(b, f.slopes()(l, j - 1));
  if (!(a < b)) {
    throw InputError("build_cc_surface: piece groups have no gap in the j-th slope coordinate");
  }
  const double r1 = a + (b - a) / 3.0;
  const double r2 = a + 2.0 * (b - a) / 3.0;

  const PolyConvexFn fc = restricted(f, detail::sorted_union(c1, c2));
  // Indices shifted by the restriction do not matter: the slice enumerates
  // all straddling pairs, which is exactly c1 x c2 inside the gap.
  const PolyConvexFn slice1 = detail::partial_conjugate_slice(fc, j, r1);
  const PolyConvexFn slice2 = detail::partial_conjugate_slice(fc, j, r2);
  const double scale = 1.0 / (r2 - r1);

  std::vector<Vec> diffs;
  for (int k : c1) {
    for (int l : c2) diffs.push_back(f.slope(l) - f.slope(k));
  }
  detail::dedupe_vectors(diffs, 1e-12);
  return CcSurface(f.dim(), j, slice2.scaled(scale), slice1.scaled(scale),
                   rescale_by_coord(diffs, j));
}

enum class GradientCheck { kPass, kFail, kNonsmooth };

/// Finite-difference check that the surface normal at x belongs to the
/// stored normal set. x must lie on the surface within tol. Returns
/// kNonsmooth when one-sided differences of g1 or g2 disagree beyond 10*tol
/// (a kink), otherwise compares the central-difference gradient of h at
/// z = Mx against the normal set in Euclidean distance.
inline GradientCheck surface_gradient_check(const CcSurface& surf, const Vec& x,
                                            double fd_step = 1e-6, double tol = 1e-6) {
  const Vec z = surf.precompose ? Vec(*surf.precompose * x) : x;
  const Vec u = drop_coord(z, surf.j);
  if (std::abs(z[surf.j - 1] + surf.g1(u) - surf.g2(u)) > tol) {
    throw InputError("surface_gradient_check: point is not on the surface");
  }
  const int du = static_cast<int>(u.size());
  Vec grad = Vec::Zero(surf.dim);
  grad[surf.j - 1] = 1.0;
  for (int i = 0; i < du; ++i) {
    Vec up = u, dn = u;
    up[i] += fd_step;
    dn[i] -= fd_step;
    for (const PolyConvexFn* g : {&surf.g1, &surf.g2}) {
      const double fwd = ((*g)(up) - (*g)(u)) / fd_step;
      const double bwd = ((*g)(u) - (*g)(dn)) / fd_step;
      if (std::abs(fwd - bwd) > 10.0 * tol) return GradientCheck::kNonsmooth;
    }
    const double central =
        ((surf.g1(up) - surf.g2(up)) - (surf.g1(dn) - surf.g2(dn))) / (2.0 * fd_step);
    const int full = i < surf.j - 1 ? i : i + 1;
    grad[full] = central;
  }
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& n : surf.normal_set) best = std::min(best, (grad - n).norm());
  return best <= tol ? GradientCheck::kPass : GradientCheck::kFail;
}

/// Surfaces covering { x : two subgradients of f within the piece group A
/// differ in coordinate j }. By default one surface is built per ordered
/// slope pair with a positive j-gap; rescaled singleton differences have
/// diameter zero, so any epsilon > 0 is satisfied. A positive cluster_radius
/// groups nearby slopes into multi-point compacts first (their rescaled
/// difference sets must stay below epsilon), falling back to pairs.
inline std::vector<CcSurface> cover_subdiff_singularities(const PolyConvexFn& f,
                                                          const std::vector<int>& a_indices,
                                                          int j, double epsilon,
                                                          double cluster_radius = 0.0) {
  if (epsilon <= 0) throw InputError("cover_subdiff_singularities: epsilon must be positive");
  if (j < 1 || j > f.dim()) throw InputError("cover_subdiff_singularities: coordinate out of range");
  std::vector<CcSurface> out;

  std::vector<std::pair<int, int>> admissible;
  for (int k : a_indices) {
    for (int l : a_indices) {
      if (f.slopes()(l, j - 1) - f.slopes()(k, j - 1) > 1e-12) admissible.emplace_back(k, l);
    }
  }

  std::vector<std::pair<int, int>> leftovers;
  if (cluster_radius > 0.0) {
    std::vector<std::vector<int>> clusters;
    for (int k : a_indices) {
      bool placed = false;
      for (auto& cl : clusters) {
        if ((f.slope(cl.front()) - f.slope(k)).norm() <= cluster_radius) {
          cl.push_back(k);
          placed = true;
          break;
        }
      }
      if (!placed) clusters.push_back({k});
    }
    std::vector<std::vector<bool>> covered(f.size(), std::vector<bool>(f.size(), false));
    for (const auto& p : clusters) {
      for (const auto& q : clusters) {
        double a = -std::numeric_limits<double>::infinity();
        double b = std::numeric_limits<double>::infinity();
        for (int k : p) a = std::max(a, f.slopes()(k, j - 1));
        for (int l : q) b = std::min(b, f.slopes()(l, j - 1));
        if (!(b - a > 1e-12)) continue;
        std::vector<Vec> diffs;
        for (int k : p) {
          for (int l : q) diffs.push_back(f.slope(l) - f.slope(k));
        }
        double diam = 0.0;
        const std::vector<Vec> scaled = rescale_by_coord(diffs, j);
        for (std::size_t s = 0; s < scaled.size(); ++s) {
          for (std::size_t t = s + 1; t < scaled.size(); ++t) {
            diam = std::max(diam, (scaled[s] - scaled[t]).norm());
          }
        }
        if (diam >= epsilon) continue;
        out.push_back(build_cc_surface(f, j, p, q));
        for (int k : p) {
          for (int l : q) covered[k][l] = true;
        }
      }
    }
    for (const auto& [k, l] : admissible) {
      if (!covered[k][l]) leftovers.emplace_back(k, l);
    }
  } else {
    leftovers = admissible;
  }

  for (const auto& [k, l] : leftovers) {
    out.push_back(build_cc_surface(f, j, {k}, {l}));
  }
  return out;
}

/// Surfaces covering the first-order singular points of the projection whose
/// witness pair differs in coordinate j: one surface per ordered point pair
/// (y, z) of G with z^j - y^j > 1e-12 and strictly positive scalar square,
/// built on the pullback psi_G(S^{-1} .) and precomposed with S, so the zero
/// sets live in the original coordinates as { x : h(Sx) = 0 }.
inline std::vector<CcSurface> cover_positive_singularities(const MonotoneSet& g, int j,
                                                           double epsilon = 1.0,
                                                           double iso_tol = kIsotropyTol) {
  if (epsilon <= 0) throw InputError("cover_positive_singularities: epsilon must be positive");
  if (j < 1 || j > g.dim()) throw InputError("cover_positive_singularities: coordinate out of range");
  const PolyConvexFn pullback = fitzpatrick_precomposed(g);
  std::vector<CcSurface> out;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      if (!(g.point(b)[j - 1] - g.point(a)[j - 1] > 1e-12)) continue;
      if (pair_class(g.space(), g.point(b), g.point(a), iso_tol) != PairClass::kPositive) {
        continue;
      }
      CcSurface s = build_cc_surface(pullback, j, {a}, {b});
      s.precompose = g.space().matrix();
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Surfaces covering the points whose projection carries an isotropic witness
/// pair differing in coordinate j. Pairs are selected by isotropy instead of
/// positivity; every normalized normal w = (z-y)/(z^j-y^j) then satisfies
/// 0 <= S(w,w) <= delta up to the isotropy tolerance, which is asserted.
inline std::vector<CcSurface> cover_isotropic_singularities(const MonotoneSet& g, int j,
                                                            double delta,
                                                            double iso_tol = kIsotropyTol) {
  if (delta <= 0) throw InputError("cover_isotropic_singularities: delta must be positive");
  if (j < 1 || j > g.dim()) throw InputError("cover_isotropic_singularities: coordinate out of range");
  const PolyConvexFn pullback = fitzpatrick_precomposed(g);
  std::vector<CcSurface> out;
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      const double gap = g.point(b)[j - 1] - g.point(a)[j - 1];
      if (!(gap > 1e-12)) continue;
      if (pair_class(g.space(), g.point(b), g.point(a), iso_tol) != PairClass::kIsotropic) {
        continue;
      }
      const Vec w = (g.point(b) - g.point(a)) / gap;
      const double q = g.space().square(w);
      const double slack = iso_tol * std::max(1.0, w.squaredNorm());
      SSCOVER_REQUIRE(q >= -slack && q <= delta + slack);
      CcSurface s = build_cc_surface(pullback, j, {a}, {b});
      s.precompose = g.space().matrix();
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// Affine hyperplane { x : S(x - anchor, direction) = 0 } with an isotropic
/// direction; the index-1 covering of zero-order singularities.
struct IsotropicHyperplane {
  Vec anchor;
  Vec direction;  ///< y - z for the generating pair, S-isotropic
  Vec normal;     ///< S * direction, the Euclidean normal
  double offset;  ///< <anchor, normal>

  IsotropicHyperplane(const ScalarProduct& sp, Vec anchor_, Vec direction_)
      : anchor(std::move(anchor_)), direction(std::move(direction_)) {
    normal = sp.apply(direction);
    offset = anchor.dot(normal);
    SSCOVER_REQUIRE(normal.norm() > 0.0);
  }

  /// Euclidean distance from x to the hyperplane.
  double residual(const Vec& x) const {
    return std::abs(x.dot(normal) - offset) / normal.norm();
  }
};

/// Index-1 spaces only: hyperplanes S(x - z, y - z) = 0 over all point pairs
/// of G with y^j - z^j > 1e-12 and isotropic difference. Coinciding
/// hyperplanes (same affine set within 1e-9) are reported once.
inline std::vector<IsotropicHyperplane> isotropic_hyperplanes(const MonotoneSet& g, int j,
                                                              double iso_tol = kIsotropyTol) {
  if (g.space().index() != 1) {
    throw InputError("isotropic_hyperplanes: requires a space of index 1");
  }
  if (j < 1 || j > g.dim()) throw InputError("isotropic_hyperplanes: coordinate out of range");
  std::vector<IsotropicHyperplane> out;
  std::vector<std::pair<Vec, double>> signatures;  // (unit normal, offset), sign-fixed
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b) {
      if (a == b) continue;
      const Vec y = g.point(a);
      const Vec z = g.point(b);
      if (!(y[j - 1] - z[j - 1] > 1e-12)) continue;
      if (pair_class(g.space(), y, z, iso_tol) != PairClass::kIsotropic) continue;
      IsotropicHyperplane plane(g.space(), z, y - z);

      Vec unit = plane.normal / plane.normal.norm();
      double off = plane.offset / plane.normal.norm();
      for (int i = 0; i < unit.size(); ++i) {
        if (std::abs(unit[i]) > 1e-12) {
          if (unit[i] < 0) {
            unit = -unit;
            off = -off;
          }
          break;
        }
      }
      bool dup = false;
      for (const auto& [su, so] : signatures) {
        if ((su - unit).cwiseAbs().maxCoeff() <= 1e-9 && std::abs(so - off) <= 1e-9) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
      signatures.emplace_back(unit, off);
      out.push_back(std::move(plane));
    }
  }
  return out;
}

/// Aggregate outcome of a coverage verification run.
struct CoverReport {
  long total_points = 0;
  long covered = 0;
  double max_residual = 0.0;
  long normal_failures = 0;
};

using PointFilter = std::function<bool(const SingularPoint&)>;

/// Filter selecting points with a witness pair of the given class differing
/// in coordinate j (j = 0: any coordinate).
inline PointFilter witness_filter(PairClass cls, int j) {
  return [cls, j](const SingularPoint& p) { return p.has_witness(cls, j); };
}

inline PointFilter accept_all_filter() {
  return [](const SingularPoint&) { return true; };
}

namespace detail {

/// Checks the surface normal near z = Mx against the normal set. The exact
/// location may sit on a kink of g1 - g2, so nearby on-surface samples are
/// tried (s = g2(u') - g1(u') puts them back on the zero set exactly) until a
/// smooth one is found.
inline bool smooth_normal_check(const CcSurface& surf, const Vec& x, double fd_step,
                                double normal_tol, std::uint64_t salt) {
  const Vec z = surf.precompose ? Vec(*surf.precompose * x) : x;
  const Vec u0 = drop_coord(z, surf.j);
  Mat minv;
  if (surf.precompose) minv = surf.precompose->partialPivLu().inverse();
  Rng rng(mix_seed(0x6e6f726dULL, salt));
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec u = u0;
    if (attempt > 0 && u0.size() > 0) {
      u += rng.in_ball(static_cast<int>(u0.size()), 1e-3 * attempt);
    }
    const double s = surf.g2(u) - surf.g1(u);
    const Vec zs = insert_coord(u, surf.j, s);
    const Vec xs = surf.precompose ? Vec(minv * zs) : zs;
    const GradientCheck res = surface_gradient_check(surf, xs, fd_step, normal_tol);
    if (res == GradientCheck::kNonsmooth) continue;
    return res == GradientCheck::kPass;
  }
  return false;
}

}  // namespace detail

/// Verifies that every filtered point lies on some surface (residual of the
/// best surface at most tol) and that the surface normals near each covered
/// point belong to the stored normal sets.
inline CoverReport verify_coverage(const std::vector<CcSurface>& surfaces,
                                   const std::vector<SingularPoint>& points,
                                   const PointFilter& filter, double tol,
                                   double fd_step = 1e-6, double normal_tol = 1e-6) {
  CoverReport report;
  std::uint64_t salt = 0;
  for (const SingularPoint& p : points) {
    ++salt;
    if (!filter(p)) continue;
    ++report.total_points;
    double best = std::numeric_limits<double>::infinity();
    const CcSurface* best_surf = nullptr;
    for (const CcSurface& s : surfaces) {
      const double r = std::abs(eval_surface(s, p.location));
      if (r < best) {
        best = r;
        best_surf = &s;
      }
    }
    if (report.total_points == 1 || best > report.max_residual) {
      report.max_residual = best;
    }
    if (best_surf != nullptr && best <= tol) {
      ++report.covered;
      if (!detail::smooth_normal_check(*best_surf, p.location, fd_step, normal_tol, salt)) {
        ++report.normal_failures;
      }
    }
  }
  if (report.total_points == 0) report.max_residual = 0.0;
  return report;
}

/// Hyperplane variant: residual is the Euclidean distance to the nearest
/// emitted hyperplane; no gradient checks apply.
inline CoverReport verify_coverage(const std::vector<IsotropicHyperplane>& planes,
                                   const std::vector<SingularPoint>& points,
                                   const PointFilter& filter, double tol) {
  CoverReport report;
  for (const SingularPoint& p : points) {
    if (!filter(p)) continue;
    ++report.total_points;
    double best = std::numeric_limits<double>::infinity();
    for (const IsotropicHyperplane& h : planes) best = std::min(best, h.residual(p.location));
    if (report.total_points == 1 || best > report.max_residual) report.max_residual = best;
    if (best <= tol) ++report.covered;
  }
  if (report.total_points == 0) report.max_residual = 0.0;
  return report;
}

/// Re-derives the defining variational identity at an on-surface point
/// x = (s, u): searches r in [r1, r2] maximizing g(r, u) + s r (concave in r)
/// and accepts when the maximum reaches the restricted function value f_C(x),
/// i.e. some slice touches the restriction at x. The slice realizing the
/// maximum is rebuilt from the straddling pairs, whose combined j-th slope
/// coordinate equals r by construction.
inline bool mean_value_consistent(const PolyConvexFn& f, int j, const std::vector<int>& c1,
                                  const std::vector<int>& c2, const Vec& x,
                                  double tol = 1e-8) {
  double a = -std::numeric_limits<double>::infinity();
  double b = std::numeric_limits<double>::infinity();
  for (int k : c1) a = std::max(a, f.slopes()(k, j - 1));
  for (int l : c2) b = std::min(b, f.slopes()(l, j - 1));
  SSCOVER_REQUIRE(a < b);
  const double r1 = a + (b - a) / 3.0;
  const double r2 = a + 2.0 * (b - a) / 3.0;
  const PolyConvexFn fc = restricted(f, detail::sorted_union(c1, c2));
  const Vec u = drop_coord(x, j);
  const double s = x[j - 1];

  const auto q = [&](double r) {
    return detail::partial_conjugate_slice(fc, j, r)(u) + s * r;
  };

  // Golden-section ascent of the concave profile, endpoints included.
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = r1, hi = r2;
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double q1 = q(x1), q2 = q(x2);
  double best = std::max({q(lo), q(hi), q1, q2});
  for (int it = 0; it < 80; ++it) {
    if (q1 < q2) {
      lo = x1;
      x1 = x2;
      q1 = q2;
      x2 = lo + phi * (hi - lo);
      q2 = q(x2);
    } else {
      hi = x2;
      x2 = x1;
      q2 = q1;
      x1 = hi - phi * (hi - lo);
      q1 = q(x1);
    }
    best = std::max({best, q1, q2});
  }
  return std::abs(best - fc(x)) <= tol;
}

}  // namespace sscover
