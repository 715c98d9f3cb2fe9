// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file natural_orbitals.hpp
 * @brief Eigendecomposition of the one-particle density matrix and rotation
 *        of CI expansions into the natural-orbital determinant basis.
 */

#pragma once

#include "fermicorr/wavefunction.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fermicorr {

inline constexpr double default_tol = 1e-10;
inline constexpr double default_zero_threshold = 1e-12;

/// Column i of `orbitals` is natural orbital i in the computational basis;
/// `occupations` is sorted descending.
struct NaturalOrbitalBasis {
  CMatrix orbitals;
  RVector occupations;

  int dim() const noexcept { return static_cast<int>(occupations.size()); }

  /// Count of natural orbitals with occupation >= threshold (a prefix, since sorted).
  int occupied_count(double threshold) const {
    int k = 0;
    while (k < dim() && occupations[k] >= threshold) ++k;
    return k;
  }
};

/// Hermitian eigendecomposition of gamma. Eigenvalues outside [-tol, 1+tol]
/// are rejected, the rest clipped into [0, 1]. Ties keep the eigensolver's
/// order (stable sort); each column is phased so its first nonzero component
/// is real positive.
inline NaturalOrbitalBasis diagonalize(const OnePDM& gamma, double tol = default_tol) {
  const int d = gamma.dim();
  if (gamma.hermiticity_defect() > tol) throw Error(ErrorKind::numerical, "one-particle density matrix is not Hermitian");

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gamma.gamma);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::numerical, "eigensolver failed");
  const RVector& values = solver.eigenvalues();

  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.rbegin(), order.rend(), 0);  // Eigen returns ascending
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] > values[b]; });

  NaturalOrbitalBasis basis{CMatrix(d, d), RVector(d)};
  for (int i = 0; i < d; ++i) {
    const double lambda = values[order[i]];
    if (lambda < -tol || lambda > 1.0 + tol) {
      std::ostringstream msg;
      msg << "invalid occupation " << lambda << " outside [0, 1]";
      throw Error(ErrorKind::numerical, msg.str());
    }
    basis.occupations[i] = std::clamp(lambda, 0.0, 1.0);

    CVector column = solver.eigenvectors().col(order[i]);
    for (int r = 0; r < d; ++r) {
      if (std::abs(column[r]) > 1e-12) {
        column *= std::abs(column[r]) / column[r];
        break;
      }
    }
    basis.orbitals.col(i) = column;
  }
  return basis;
}

namespace detail {

inline CIWavefunction rotate_onto(const CIWavefunction& psi, const CMatrix& orbitals,
                                  const std::vector<Determinant>& targets) {
  const CMatrix adjoint = orbitals.adjoint();
  CIWavefunction out(psi.space(), psi.particles());
  for (const auto& s : targets) {
    Complex c{};
    for (const auto& [t, amp] : psi.amplitudes()) c += slater_overlap(adjoint, s, t) * amp;
    out.set(s, c);
  }
  const double drift = std::abs(out.norm() - psi.norm());
  if (drift > 1e-8) {
    std::ostringstream msg;
    msg << "rotation not unitary (norm drift " << drift << ")";
    throw Error(ErrorKind::numerical, msg.str());
  }
  return out;
}

}  // namespace detail

/// Re-expands psi over determinants in the orbitals given by the columns of
/// `orbitals`: c'(s) = sum_t det(V^dagger[s, t]) c(t).
inline CIWavefunction rotate_ci(const CIWavefunction& psi, const CMatrix& orbitals) {
  if (orbitals.rows() != psi.dim() || orbitals.cols() != psi.dim())
    throw Error(ErrorKind::invalid_argument, "orbital matrix does not match the orbital space");
  return detail::rotate_onto(psi, orbitals, enumerate_basis(psi.space(), psi.particles()));
}

/// Rotation into natural orbitals, restricted to determinants built from
/// orbitals with occupation >= zero_threshold. Mass on the excluded
/// determinants would show up as norm drift and is rejected.
inline CIWavefunction rotate_ci(const CIWavefunction& psi, const NaturalOrbitalBasis& basis,
                                double zero_threshold = default_zero_threshold) {
  if (basis.dim() != psi.dim()) throw Error(ErrorKind::invalid_argument, "basis does not match the orbital space");
  const int k = basis.occupied_count(zero_threshold);
  if (k == psi.dim()) return rotate_ci(psi, basis.orbitals);
  const auto targets = k == 0 ? std::vector<Determinant>(psi.particles() == 0 ? 1 : 0)
                              : enumerate_basis(OrbitalSpace(k), psi.particles());
  return detail::rotate_onto(psi, basis.orbitals, targets);
}

}  // namespace fermicorr
