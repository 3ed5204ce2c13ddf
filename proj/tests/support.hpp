#pragma once

// Shared test support: independent oracles and instance generators. The
// oracles deliberately use plain loops over raw doubles (no library calls on
// the path they check) so that frozen expected values come from a second
// route.

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "sscover/sscover.hpp"

namespace testsupport {

using sscover::Mat;
using sscover::MonotoneSet;
using sscover::PolyConvexFn;
using sscover::Rng;
using sscover::ScalarProduct;
using sscover::Vec;

// ---------------------------------------------------------------------------
// Oracles

/// (x - y)' S (x - y) by explicit summation.
inline double raw_square(const Mat& s, const Vec& x, const Vec& y) {
  const int d = static_cast<int>(x.size());
  double q = 0.0;
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) q += (x[i] - y[i]) * s(i, k) * (x[k] - y[k]);
  }
  return q;
}

struct BruteProjection {
  std::vector<int> minimizers;
  double value = 0.0;
};

/// Enumerates the set; ties within tol * max(1, |min|).
inline BruteProjection brute_project(const Mat& s, const std::vector<Vec>& points,
                                     const Vec& x, double tol = 1e-9) {
  BruteProjection out;
  out.value = std::numeric_limits<double>::infinity();
  for (const Vec& y : points) out.value = std::min(out.value, raw_square(s, x, y));
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (raw_square(s, x, points[i]) <= out.value + tol * std::max(1.0, std::abs(out.value))) {
      out.minimizers.push_back(i);
    }
  }
  return out;
}

struct BruteArgmax {
  std::vector<int> indices;
  double value = 0.0;
};

/// Enumerates piece values <x, y_k> - c_k over the subset.
inline BruteArgmax brute_argmax(const std::vector<std::pair<Vec, double>>& pieces,
                                const std::vector<int>& subset, const Vec& x,
                                double tol = 1e-9) {
  BruteArgmax out;
  out.value = -std::numeric_limits<double>::infinity();
  for (int k : subset) {
    double v = -pieces[k].second;
    for (int i = 0; i < x.size(); ++i) v += x[i] * pieces[k].first[i];
    out.value = std::max(out.value, v);
  }
  for (int k : subset) {
    double v = -pieces[k].second;
    for (int i = 0; i < x.size(); ++i) v += x[i] * pieces[k].first[i];
    if (v >= out.value - tol) out.indices.push_back(k);
  }
  std::sort(out.indices.begin(), out.indices.end());
  return out;
}

/// One-variable minimization oracle for the partial conjugate
///     g(r, u) = inf_s max_k { s (y_k^j - r) + <u, y_k^{-j}> - c_k }.
/// The objective is convex piecewise linear in s; a golden-section descent on
/// a wide bracket is accurate to ~1e-10 for desk-scale data.
inline double partial_conjugate_oracle(const std::vector<std::pair<Vec, double>>& pieces,
                                       int j, double r, const Vec& u) {
  const auto value_at = [&](double s) {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& [slope, c] : pieces) {
      double v = s * (slope[j - 1] - r) - c;
      int t = 0;
      for (int i = 0; i < slope.size(); ++i) {
        if (i == j - 1) continue;
        v += u[t++] * slope[i];
      }
      best = std::max(best, v);
    }
    return best;
  };
  double lo = -1e4, hi = 1e4;
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  double f1 = value_at(x1), f2 = value_at(x2);
  for (int it = 0; it < 200; ++it) {
    if (f1 > f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = value_at(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = value_at(x1);
    }
  }
  return std::min(f1, f2);
}

/// Central finite-difference gradient of a polyhedral function.
inline Vec fd_gradient(const PolyConvexFn& f, const Vec& x, double h = 1e-6) {
  Vec g(x.size());
  for (int i = 0; i < x.size(); ++i) {
    Vec up = x, dn = x;
    up[i] += h;
    dn[i] -= h;
    g[i] = (f(up) - f(dn)) / (2.0 * h);
  }
  return g;
}

// ---------------------------------------------------------------------------
// Generators

inline PolyConvexFn random_polyconvex(Rng& rng, int d, int max_pieces) {
  const int n = rng.uniform_int(2, max_pieces);
  std::vector<std::pair<Vec, double>> pieces;
  for (int k = 0; k < n; ++k) {
    Vec slope(d);
    for (int i = 0; i < d; ++i) slope[i] = rng.uniform(-2.0, 2.0);
    pieces.emplace_back(std::move(slope), rng.uniform(-1.0, 1.0));
  }
  return PolyConvexFn::from_pieces(pieces);
}

/// Random piece groups separated in the j-th slope coordinate; returns false
/// when the function has no usable gap for this j.
inline bool random_gap_groups(Rng& rng, const PolyConvexFn& f, int j,
                              std::vector<int>& c1, std::vector<int>& c2) {
  std::vector<int> order(f.size());
  for (int k = 0; k < f.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return f.slopes()(a, j - 1) < f.slopes()(b, j - 1);
  });
  std::vector<int> cuts;
  for (int i = 0; i + 1 < f.size(); ++i) {
    if (f.slopes()(order[i + 1], j - 1) - f.slopes()(order[i], j - 1) > 0.05) {
      cuts.push_back(i);
    }
  }
  if (cuts.empty()) return false;
  const int cut = cuts[rng.uniform_int(0, static_cast<int>(cuts.size()) - 1)];
  std::vector<int> below(order.begin(), order.begin() + cut + 1);
  std::vector<int> above(order.begin() + cut + 1, order.end());
  const auto pick = [&](const std::vector<int>& from) {
    std::vector<int> out;
    for (int k : from) {
      if (rng.uniform() < 0.6) out.push_back(k);
    }
    if (out.empty()) out.push_back(from[rng.uniform_int(0, static_cast<int>(from.size()) - 1)]);
    std::sort(out.begin(), out.end());
    return out;
  };
  c1 = pick(below);
  c2 = pick(above);
  return true;
}

/// Points where both piece groups are active: samples the pairwise tie
/// hyperplanes { <x, y_l - y_k> = c_l - c_k } and keeps samples at which both
/// pieces attain the global max. These certify membership in the singular set
/// the surface construction must cover.
inline std::vector<Vec> brute_sigma_points(const PolyConvexFn& f,
                                           const std::vector<int>& c1,
                                           const std::vector<int>& c2, Rng& rng,
                                           int samples_per_pair, double radius,
                                           double tol = 1e-9) {
  std::vector<Vec> out;
  const int d = f.dim();
  for (int k : c1) {
    for (int l : c2) {
      const Vec w = f.slope(l) - f.slope(k);
      if (w.norm() < 1e-12) continue;
      const double rhs = f.intercept(l) - f.intercept(k);
      const Vec anchor = (rhs / w.squaredNorm()) * w;
      const Mat basis = sscover::orthonormal_complement(w);
      for (int s = 0; s < samples_per_pair; ++s) {
        const Vec x = anchor + basis * rng.in_ball(d - 1, radius);
        const Vec vals = f.values(x);
        const double top = vals.maxCoeff();
        if (vals[k] >= top - tol && vals[l] >= top - tol) out.push_back(x);
      }
    }
  }
  return out;
}

/// Deterministic on-surface samples: pick u, then the j-th coordinate
/// s = g2(u) - g1(u) solves h = 0 exactly; precompositions are inverted.
inline std::vector<Vec> surface_points(const sscover::CcSurface& surf, Rng& rng, int n,
                                       double radius) {
  std::vector<Vec> out;
  Mat minv;
  if (surf.precompose) minv = surf.precompose->partialPivLu().inverse();
  for (int i = 0; i < n; ++i) {
    const Vec u = rng.in_ball(surf.dim - 1, radius);
    const double s = surf.g2(u) - surf.g1(u);
    const Vec z = sscover::insert_coord(u, surf.j, s);
    out.push_back(surf.precompose ? Vec(minv * z) : z);
  }
  return out;
}

/// Canonical index-1 graph sample on a dyadic grid with deliberate slope +-1
/// segments. All coordinates are small dyadic rationals, so pair squares of
/// unit-slope segments vanish exactly in floating point.
inline MonotoneSet isotropic_chain_set(int d, std::uint64_t seed) {
  Rng rng(sscover::mix_seed(seed, 0xc4a1e5ULL));
  const int n = rng.uniform_int(4, 8);
  const double step = 0.125;
  double u = -0.5 * n * step + rng.uniform_int(-8, 8) * step;
  double v = rng.uniform_int(-8, 8) * step;
  const int iso_at = rng.uniform_int(0, n - 2);
  std::vector<std::pair<Vec, Vec>> samples;
  for (int i = 0; i < n; ++i) {
    Vec uu(1), vv(d - 1);
    uu[0] = u;
    vv.setZero();
    vv[0] = v;
    samples.emplace_back(uu, vv);
    if (i + 1 == n) break;
    const int steps = rng.uniform_int(1, 3);
    double slope;
    if (i == iso_at) {
      slope = rng.uniform() < 0.5 ? 1.0 : -1.0;  // exact isotropic segment
    } else {
      const double choices[] = {0.0, 0.5, -0.5, 1.0, -1.0};
      slope = choices[rng.uniform_int(0, 4)];
    }
    u += steps * step;
    v += slope * steps * step;
  }
  return sscover::graph_from_lipschitz(1, samples);
}

/// Canonical index-2 set in R^3 whose last coordinate copies the first:
/// pairs sharing the second coordinate are exactly isotropic, all other pairs
/// are strictly positive.
inline MonotoneSet isotropic_sheet_set(std::uint64_t seed) {
  Rng rng(sscover::mix_seed(seed, 0x5eedbeefULL));
  const double step = 0.25;
  std::vector<Vec> points;
  const int n = rng.uniform_int(5, 9);
  std::vector<std::pair<int, int>> used;
  int guard = 0;
  while (static_cast<int>(points.size()) < n && guard++ < 400) {
    int a = rng.uniform_int(-4, 4);
    int b = rng.uniform_int(-2, 2);
    if (points.size() == 1) b = static_cast<int>(points[0][1] / step);  // force one isotropic pair
    bool dup = false;
    for (auto& [ua, ub] : used) {
      if (ua == a && ub == b) dup = true;
    }
    if (dup) continue;
    used.emplace_back(a, b);
    Vec p(3);
    p[0] = a * step;
    p[1] = b * step;
    p[2] = a * step;
    points.push_back(std::move(p));
  }
  return MonotoneSet(ScalarProduct::canonical(3, 2), points, 0.0);
}

/// Standard-form plane instance with axis-aligned isotropic pairs (a
/// staircase): S(x,x) = 2 x1 x2, so isotropic pairs are exactly the
/// horizontal and vertical ones.
inline MonotoneSet staircase_set() {
  std::vector<Vec> pts{Vec{{0.0, 0.0}}, Vec{{1.0, 0.0}}, Vec{{1.0, 1.0}}, Vec{{2.0, 1.0}}};
  return MonotoneSet(ScalarProduct::standard(1), pts);
}

}  // namespace testsupport
