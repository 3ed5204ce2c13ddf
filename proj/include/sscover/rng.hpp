#pragma once

#include <cmath>
#include <cstdint>

#include "sscover/types.hpp"

namespace sscover {

/// Small deterministic generator (splitmix64 core). The standard library
/// distributions are implementation-defined, so everything that must be
/// byte-reproducible across platforms draws through this type instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller (no cached spare, keeps state simple).
  double normal() {
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  Vec normal_vec(int d) {
    Vec v(d);
    for (int i = 0; i < d; ++i) v[i] = normal();
    return v;
  }

  /// Uniform in the Euclidean ball of the given radius.
  Vec in_ball(int d, double radius) {
    if (d == 0) return Vec(0);
    Vec v = normal_vec(d);
    const double n = v.norm();
    if (n < 1e-300) return Vec::Zero(d);
    const double r = radius * std::pow(uniform(), 1.0 / static_cast<double>(d));
    return (r / n) * v;
  }

 private:
  std::uint64_t state_;
};

/// Mix two seeds into one; used to derive independent per-item streams.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace sscover
