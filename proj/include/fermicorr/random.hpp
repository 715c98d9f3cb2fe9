// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file random.hpp
 * @brief Seeded generators for random unitaries, states and quasifree specs,
 *        and the randomized Wick-identity sweep behind `verify-wick`.
 */

#pragma once

#include "fermicorr/quasifree.hpp"
#include "fermicorr/wavefunction.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <random>
#include <vector>

namespace fermicorr {

using Rng = std::mt19937_64;

inline CVector random_vector(int d, Rng& rng) {
  std::normal_distribution<double> normal;
  CVector v(d);
  for (int i = 0; i < d; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v;
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of R's diagonal absorbed into Q.
inline CMatrix random_unitary(int d, Rng& rng) {
  CMatrix z(d, d);
  for (int j = 0; j < d; ++j) z.col(j) = random_vector(d, rng);
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0.0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

inline Determinant random_determinant(const OrbitalSpace& space, int n, Rng& rng) {
  std::vector<int> orbitals(static_cast<std::size_t>(space.d));
  for (int i = 0; i < space.d; ++i) orbitals[static_cast<std::size_t>(i)] = i;
  std::shuffle(orbitals.begin(), orbitals.end(), rng);
  orbitals.resize(static_cast<std::size_t>(n));
  return Determinant::from_indices(orbitals);
}

/// Normalized state with complex Gaussian amplitudes on every n-particle determinant.
inline CIWavefunction random_state(const OrbitalSpace& space, int n, Rng& rng) {
  std::normal_distribution<double> normal;
  CIWavefunction psi(space, n);
  for (const auto& det : enumerate_basis(space, n)) psi.set(det, Complex(normal(rng), normal(rng)));
  return normalize(psi);
}

/// Quasifree spec with uniform occupations in [0, 1] and a Haar-random basis.
inline QuasifreeSpec random_quasifree(int d, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RVector lambda(d);
  for (int i = 0; i < d; ++i) lambda[i] = unit(rng);
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return QuasifreeSpec(NaturalOrbitalBasis{random_unitary(d, rng), lambda});
}

struct WickTrial {
  int m = 0;
  int n = 0;
  WickReport report;
};

struct WickSweep {
  std::vector<WickTrial> trials;
  double max_deviation = 0.0;
  std::size_t failures = 0;
};

/// Randomized checks of the quasifree factorization at dimension d. Trial k
/// cycles (m, n) through m = n in {0..3} and the mismatched pairs (1,2), (2,1),
/// (0,1), (1,0) so vanishing cases are always covered.
inline WickSweep run_wick_trials(int d, std::uint64_t seed, int trials, double threshold = 1e-10) {
  static constexpr int orders[][2] = {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 1}, {0, 0}, {0, 1}, {1, 0}};
  Rng rng(seed);
  WickSweep sweep;
  for (int k = 0; k < trials; ++k) {
    const auto [m, n] = orders[k % std::size(orders)];
    const auto spec = random_quasifree(d, rng);
    std::vector<CVector> f, g;
    for (int i = 0; i < m; ++i) f.push_back(random_vector(d, rng).normalized());
    for (int j = 0; j < n; ++j) g.push_back(random_vector(d, rng).normalized());
    WickTrial trial{m, n, verify_wick(spec, f, g)};
    sweep.max_deviation = std::max(sweep.max_deviation, trial.report.deviation);
    if (!(trial.report.deviation < threshold)) ++sweep.failures;
    sweep.trials.push_back(trial);
  }
  return sweep;
}

}  // namespace fermicorr
