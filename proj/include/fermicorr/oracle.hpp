// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Brute-force Fock-space evaluation of <psi, rho psi>.
 *
 * Nothing here goes through slater_overlap, one_pdm or rotate_ci: states are
 * dense 2^d vectors, ladder operators are explicit sparse matrices, and the
 * orbital rotation is carried out by applying rotated creation operators to
 * the vacuum.
 */

#pragma once

#include "fermicorr/corr.hpp"
#include "fermicorr/fock_space.hpp"
#include "fermicorr/quasifree.hpp"
#include "fermicorr/wavefunction.hpp"

#include <Eigen/Eigenvalues>

namespace fermicorr {

inline constexpr int corr_oracle_cap = 16;

namespace oracle {

inline CVector embed(const CIWavefunction& psi) {
  CVector v = CVector::Zero(static_cast<Eigen::Index>(std::uint64_t{1} << psi.dim()));
  for (const auto& [det, c] : psi.amplitudes()) v[static_cast<Eigen::Index>(det.bits)] = c;
  return v;
}

/// gamma(p, q) = <a_q psi, a_p psi>.
inline CMatrix gamma(const std::vector<SparseCMatrix>& creators, const CVector& psi) {
  const auto d = static_cast<Eigen::Index>(creators.size());
  std::vector<CVector> lowered;
  for (const auto& c : creators) lowered.emplace_back(c.adjoint() * psi);
  CMatrix out(d, d);
  for (Eigen::Index p = 0; p < d; ++p)
    for (Eigen::Index q = 0; q < d; ++q) out(p, q) = lowered[q].dot(lowered[p]);
  return out;
}

struct Spectrum {
  CMatrix orbitals;
  RVector occupations;
};

inline Spectrum eigen(const CMatrix& gamma) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gamma);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::numerical, "eigensolver failed");
  return {solver.eigenvectors(), solver.eigenvalues().cwiseMax(0.0).cwiseMin(1.0)};
}

/// Coefficients of psi over determinants in the orbitals `orbitals`:
/// each computational determinant t is rebuilt as prod_j btilde+_{t_j} |vac>
/// with btilde+_i = sum_p (V^dagger)_{p i} a+_p.
inline CVector to_rotated_basis(const std::vector<SparseCMatrix>& creators, const CIWavefunction& psi,
                                const CMatrix& orbitals) {
  const CMatrix adjoint = orbitals.adjoint();
  std::vector<SparseCMatrix> rotated;
  for (Eigen::Index i = 0; i < adjoint.cols(); ++i) rotated.push_back(creation_along(creators, adjoint.col(i)));
  const auto dim = creators.front().rows();
  CVector out = CVector::Zero(dim);
  for (const auto& [t, c] : psi.amplitudes()) {
    CVector v = CVector::Zero(dim);
    v[0] = 1.0;
    const auto idx = t.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = rotated[static_cast<std::size_t>(*it)] * v;
    out += c * v;
  }
  return out;
}

}  // namespace oracle

/// <psi, rho psi> with rho applied as the commuting product
/// prod_i [(1 - lambda_i) + (2 lambda_i - 1) n_i], n_i = b+_i b_i the number
/// operator of natural orbital i expressed on the computational Fock space.
inline double overlap_oracle(const CIWavefunction& psi, int cap) {
  const int d = psi.dim();
  require_scale(d, cap);
  const auto creators = creation_operators(d, cap);
  const CVector v = oracle::embed(psi);
  const auto spectrum = oracle::eigen(oracle::gamma(creators, v));

  CVector rho_v = v;
  for (int i = 0; i < d; ++i) {
    const SparseCMatrix raise = creation_along(creators, spectrum.orbitals.col(i));
    const SparseCMatrix number = raise * SparseCMatrix(raise.adjoint());
    const double lambda = spectrum.occupations[i];
    rho_v = (1.0 - lambda) * rho_v + (2.0 * lambda - 1.0) * (number * rho_v);
  }
  return v.dot(rho_v).real();
}

inline double overlap_oracle(const CIWavefunction& psi) { return overlap_oracle(psi, oracle_dim_cap()); }

/// Corr from the explicit quasifree Fock matrix: psi is carried into the
/// natural-orbital Fock basis by explicit operator algebra and contracted with
/// the diagonal matrix from build_quasifree_fock_matrix.
inline CorrResult corr_pure_oracle(const CIWavefunction& psi, LogBase base = LogBase::two, int cap = corr_oracle_cap) {
  const int d = psi.dim();
  require_scale(d, cap);
  const auto creators = creation_operators(d, cap);
  const auto spectrum = oracle::eigen(oracle::gamma(creators, oracle::embed(psi)));
  const QuasifreeSpec spec(NaturalOrbitalBasis{spectrum.orbitals, spectrum.occupations});
  const FockMatrix rho = build_quasifree_fock_matrix(spec, cap);
  const CVector rotated = oracle::to_rotated_basis(creators, psi, spectrum.orbitals);
  const double overlap = rotated.dot(rho.entries * rotated).real();

  RVector lambda = spectrum.occupations;
  std::sort(lambda.begin(), lambda.end(), std::greater<>());
  return detail::finish(overlap, lambda, base);
}

}  // namespace fermicorr
