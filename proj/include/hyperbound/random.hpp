#pragma once

// Seeded generators for group elements and points used by the Monte-Carlo
// drivers and the property tests. Every trial draws from its own engine,
// seeded by trial_seed(root, index), so results do not depend on scheduling.

#include "hyperbound/core.hpp"
#include "hyperbound/hyperboloid.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace hyperbound {

using Rng = std::mt19937_64;

/// splitmix64 finalizer applied to (root, index).
inline std::uint64_t trial_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng trial_rng(std::uint64_t root, std::uint64_t index) { return Rng(trial_seed(root, index)); }

template <typename Scalar>
Scalar uniform(Rng& rng, Scalar lo, Scalar hi) {
  std::uniform_real_distribution<double> dist(static_cast<double>(lo), static_cast<double>(hi));
  return Scalar(dist(rng));
}

template <typename Scalar>
Matrix<Scalar> gaussian_matrix(Rng& rng, int rows, int cols) {
  std::normal_distribution<double> dist;
  Matrix<Scalar> m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = Scalar(dist(rng));
  return m;
}

/// Random element of SO(dim): QR of a Gaussian matrix, column signs fixed by
/// diag(R), then one column flipped if the determinant came out negative.
template <typename Scalar>
Matrix<Scalar> random_rotation(Rng& rng, int dim) {
  if (dim == 0) return Matrix<Scalar>(0, 0);
  const Matrix<Scalar> g = gaussian_matrix<Scalar>(rng, dim, dim);
  Eigen::HouseholderQR<Matrix<Scalar>> qr(g);
  Matrix<Scalar> q = qr.householderQ() * Matrix<Scalar>::Identity(dim, dim);
  const Matrix<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    if (r(j, j) < Scalar(0)) q.col(j) = -q.col(j);
  }
  if (q.determinant() < Scalar(0)) q.col(0) = -q.col(0);
  return q;
}

/// Random element of SO^+(n,1): rotation * boost(rapidity) * rotation.
template <typename Scalar>
LorentzMatrix<Scalar> random_lorentz(Rng& rng, int n, Scalar max_rapidity = Scalar(2)) {
  const Scalar t = uniform<Scalar>(rng, Scalar(0), max_rapidity);
  return lorentz_rotation<Scalar>(random_rotation<Scalar>(rng, n)) * lorentz_boost<Scalar>(n, 0, t) *
         lorentz_rotation<Scalar>(random_rotation<Scalar>(rng, n));
}

/// Random point of H^n at distance at most `max_distance` from the basepoint.
template <typename Scalar>
HyperboloidPoint<Scalar> random_hyperboloid_point(Rng& rng, int n, Scalar max_distance = Scalar(3)) {
  const Scalar t = uniform<Scalar>(rng, Scalar(0), max_distance);
  const LorentzMatrix<Scalar> m =
      lorentz_rotation<Scalar>(random_rotation<Scalar>(rng, n)) * lorentz_boost<Scalar>(n, 0, t);
  return HyperboloidPoint<Scalar>(m * hyperboloid_basepoint<Scalar>(n));
}

/// Random element of SL(2,C) with entries of moderate size.
template <typename Scalar>
Matrix2c<Scalar> random_sl2c(Rng& rng, Scalar spread = Scalar(1)) {
  using C = std::complex<Scalar>;
  std::normal_distribution<double> dist;
  for (;;) {
    Matrix2c<Scalar> a;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a(i, j) = C(Scalar(dist(rng)) * spread, Scalar(dist(rng)) * spread);
    const C det = a.determinant();
    if (std::abs(det) < Scalar(0.1)) continue;
    return a / std::sqrt(det);
  }
}

}  // namespace hyperbound
