// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file models.hpp
 * @brief Two-site Hubbard dimer at half filling.
 *
 * Spin-orbitals are ordered (1up, 1dn, 2up, 2dn) -> 0..3 and
 *
 *     H = -t sum_sigma (a+_{1s} a_{2s} + a+_{2s} a_{1s}) + U (n_{1up} n_{1dn} + n_{2up} n_{2dn}).
 *
 * The two-electron ground energy is (U - sqrt(U^2 + 16 t^2)) / 2.
 */

#pragma once

#include "fermicorr/corr.hpp"
#include "fermicorr/fock.hpp"
#include "fermicorr/wavefunction.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <vector>

namespace fermicorr {

struct HubbardParams {
  double t = 1.0;
  double U = 0.0;

  HubbardParams(double hopping, double interaction) : t(hopping), U(interaction) {
    if (!(t > 0.0)) throw Error(ErrorKind::invalid_argument, "hopping t must be positive");
  }
  static HubbardParams from_u(double u, double t = 1.0) { return {t, u * t}; }

  double u() const noexcept { return U / t; }
};

namespace hubbard {

inline constexpr int up1 = 0, dn1 = 1, up2 = 2, dn2 = 3;

inline const OrbitalSpace& space() {
  static const OrbitalSpace s(4);
  return s;
}

inline const std::vector<Determinant>& basis() {
  static const std::vector<Determinant> b = enumerate_basis(space(), 2);
  return b;
}

inline double analytic_ground_energy(const HubbardParams& params) {
  return 0.5 * (params.U - std::sqrt(params.U * params.U + 16.0 * params.t * params.t));
}

}  // namespace hubbard

struct HubbardMatrix {
  std::vector<Determinant> basis;
  RMatrix h;
};

/// 6x6 Hamiltonian on the two-particle sector, assembled by ladder-operator
/// application with fermionic signs.
inline HubbardMatrix hubbard_hamiltonian(const HubbardParams& params) {
  using namespace hubbard;
  const auto& dets = basis();
  const auto n = static_cast<Eigen::Index>(dets.size());
  auto index_of = [&](const Determinant& det) {
    return static_cast<Eigen::Index>(std::lower_bound(dets.begin(), dets.end(), det) - dets.begin());
  };

  RMatrix h = RMatrix::Zero(n, n);
  const int hops[4][2] = {{up1, up2}, {up2, up1}, {dn1, dn2}, {dn2, dn1}};
  for (Eigen::Index col = 0; col < n; ++col) {
    const Determinant& ket = dets[static_cast<std::size_t>(col)];
    for (const auto& hop : hops) {
      // -t a+_{to} a_{from}
      const auto lowered = apply_annihilation(ket, hop[1]);
      if (!lowered) continue;
      const auto raised = apply_creation(lowered->det, hop[0]);
      if (!raised) continue;
      h(index_of(raised->det), col) += -params.t * lowered->sign * raised->sign;
    }
    const int double_occupancy = (ket.occupied(up1) && ket.occupied(dn1) ? 1 : 0) +
                                 (ket.occupied(up2) && ket.occupied(dn2) ? 1 : 0);
    h(col, col) += params.U * double_occupancy;
  }
  return {dets, h};
}

/// (1/sqrt 2)(a+_{1up} a+_{2dn} + a+_{2up} a+_{1dn}) |vac>.
inline CIWavefunction heitler_london_state() {
  using namespace hubbard;
  const double amp = 1.0 / std::sqrt(2.0);
  CIWavefunction psi(space(), 2);
  // a+_0 a+_3 |vac> = +|{0,3}>,  a+_2 a+_1 |vac> = -|{1,2}>
  psi.set(Determinant::from_indices({up1, dn2}), amp);
  psi.set(Determinant::from_indices({dn1, up2}), -amp);
  return psi;
}

/// (1/sqrt 2)(a+_{1up} a+_{1dn} + a+_{2up} a+_{2dn}) |vac>, the symmetric ionic singlet.
inline CIWavefunction ionic_singlet_state() {
  using namespace hubbard;
  const double amp = 1.0 / std::sqrt(2.0);
  CIWavefunction psi(space(), 2);
  psi.set(Determinant::from_indices({up1, dn1}), amp);
  psi.set(Determinant::from_indices({up2, dn2}), amp);
  return psi;
}

struct HubbardGroundState {
  CIWavefunction psi;
  double energy;
};

/// Lowest eigenvector with majority weight in the singlet subspace spanned by
/// the Heitler-London and symmetric ionic states, phased so the covalent
/// amplitude on |1up 2dn> is real positive.
inline HubbardGroundState hubbard_ground_state(const HubbardParams& params) {
  using namespace hubbard;
  const auto ham = hubbard_hamiltonian(params);
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(ham.h);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::numerical, "eigensolver failed");

  const auto covalent = heitler_london_state();
  const auto ionic = ionic_singlet_state();
  for (Eigen::Index k = 0; k < ham.h.rows(); ++k) {
    CIWavefunction psi(space(), 2);
    for (std::size_t i = 0; i < ham.basis.size(); ++i)
      psi.set(ham.basis[i], solver.eigenvectors()(static_cast<Eigen::Index>(i), k));
    const double singlet_weight = std::norm(inner_product(covalent, psi)) + std::norm(inner_product(ionic, psi));
    if (singlet_weight < 0.5) continue;

    const Complex anchor = psi.amplitude(Determinant::from_indices({up1, dn2}));
    const Complex phase = std::abs(anchor) > 0.0 ? std::abs(anchor) / anchor : Complex{1.0, 0.0};
    CIWavefunction phased(space(), 2);
    for (const auto& [det, c] : psi.amplitudes()) phased.set(det, c * phase);
    return {normalize(phased), solver.eigenvalues()[k]};
  }
  throw Error(ErrorKind::numerical, "no singlet eigenvector found");
}

struct SweepRow {
  double u = 0.0;
  double energy = 0.0;
  double corr = 0.0;
  double entropy = 0.0;
  double entropy_normalized = 0.0;
  double degree = 0.0;
};

/// Entropy of the Heitler-London spectrum (four occupations 1/2), the large-|u| limit.
inline double heitler_london_entropy(LogBase base, EntropyConvention convention) {
  return spectrum_entropy(RVector::Constant(4, 0.5), base, convention);
}

/// Per-u ground-state measures. entropy_normalized rescales S so that its
/// large-u limit matches Corr's limit -log(1/16).
inline std::vector<SweepRow> sweep(const std::vector<double>& u_grid, LogBase base = LogBase::two,
                                   EntropyConvention convention = EntropyConvention::normalized, double t = 1.0) {
  const double corr_limit = -log_in(1.0 / 16.0, base);
  const double scale = corr_limit / heitler_london_entropy(base, convention);
  std::vector<SweepRow> rows;
  rows.reserve(u_grid.size());
  for (double u : u_grid) {
    if (!std::isfinite(u)) throw Error(ErrorKind::invalid_argument, "sweep grid must be finite");
    const auto ground = hubbard_ground_state(HubbardParams::from_u(u, t));
    const auto result = corr_pure(ground.psi, base);
    SweepRow row;
    row.u = u;
    row.energy = ground.energy;
    row.corr = result.corr;
    row.entropy = convention == EntropyConvention::normalized ? result.entropy : result.entropy_raw;
    row.entropy_normalized = row.entropy * scale;
    row.degree = result.degree;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fermicorr
