#pragma once

#include "sscover/pseudo_space.hpp"
#include "sscover/rng.hpp"
#include "sscover/types.hpp"

namespace sscover {

/// Seeded random symmetric invertible form of dimension d and index m:
/// a random orthogonal conjugation of signed eigenvalues with magnitudes in
/// [0.6, 2.5], so the result is comfortably far from singular.
inline ScalarProduct random_scalar_product(int d, int m, std::uint64_t seed) {
  if (d < 1 || m < 0 || m > d) throw InputError("random_scalar_product: bad signature");
  Rng rng(mix_seed(seed, 0x73706163ULL));
  Mat gauss(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) gauss(i, j) = rng.normal();
  }
  const Mat q = Eigen::HouseholderQR<Mat>(gauss).householderQ();
  Vec eigs(d);
  for (int i = 0; i < d; ++i) {
    eigs[i] = rng.uniform(0.6, 2.5) * (i < m ? 1.0 : -1.0);
  }
  Mat s = q * eigs.asDiagonal() * q.transpose();
  s = 0.5 * (s + s.transpose());
  return ScalarProduct(d, s, m);
}

}  // namespace sscover
