// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

// Test-only helpers and independent oracles.

#pragma once

#include "fermicorr/fermicorr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace fermicorr::testing {

inline CIWavefunction make_state(int d, int n, const std::vector<std::pair<std::vector<int>, Complex>>& records) {
  CIWavefunction psi(OrbitalSpace(d), n);
  for (const auto& [idx, c] : records) {
    std::vector<int> zero_based;
    for (int i : idx) zero_based.push_back(i - 1);
    psi.set(Determinant::from_indices(zero_based), c);
  }
  return normalize(psi);
}

/// sqrt(2/3)|135| + sqrt(1/3)|246| (1-based labels).
inline CIWavefunction psi_135_246() {
  return make_state(6, 3, {{{1, 3, 5}, std::sqrt(2.0 / 3.0)}, {{2, 4, 6}, std::sqrt(1.0 / 3.0)}});
}

/// sqrt(1/3)(|123| + |345| + |156|).
inline CIWavefunction phi_123_345_156() {
  return make_state(6, 3, {{{1, 2, 3}, 1.0}, {{3, 4, 5}, 1.0}, {{1, 5, 6}, 1.0}});
}

/// Leibniz expansion sum_pi sgn(pi) prod_i M[bra_i, ket_pi(i)]: the inner
/// product of the antisymmetrized bra orbitals with the rotated ket orbitals.
inline Complex leibniz_overlap(const CMatrix& m, const Determinant& bra, const Determinant& ket) {
  const auto rows = bra.indices();
  const auto cols = ket.indices();
  std::vector<int> perm(rows.size());
  std::iota(perm.begin(), perm.end(), 0);
  Complex total{};
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    Complex term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(rows[i], cols[static_cast<std::size_t>(perm[i])]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// A single determinant carried into a random orbital basis: generically a
/// dense CI vector that is still a Slater determinant.
inline CIWavefunction rotated_determinant(int d, int n, Rng& rng) {
  CIWavefunction det(OrbitalSpace(d), n);
  det.set(random_determinant(det.space(), n, rng), 1.0);
  return rotate_ci(det, random_unitary(d, rng));
}

inline double max_abs_diff(const CIWavefunction& a, const CIWavefunction& b) {
  double worst = 0.0;
  for (const auto& [det, c] : a.amplitudes()) worst = std::max(worst, std::abs(c - b.amplitude(det)));
  for (const auto& [det, c] : b.amplitudes()) worst = std::max(worst, std::abs(c - a.amplitude(det)));
  return worst;
}

inline double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace fermicorr::testing
