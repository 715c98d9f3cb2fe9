// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file wavefunction.hpp
 * @brief Sparse CI expansions and the one-particle statistical operator.
 *
 * Index convention for the one-particle density matrix:
 *
 *     gamma(p, q) = <psi| a+_q a_p |psi>,
 *
 * so that <g, gamma f> = <a+_f a_g> and gamma acts on one-particle column
 * vectors expressed in the orbital basis.
 */

#pragma once

#include "fermicorr/fock.hpp"

#include <map>
#include <string>
#include <vector>

namespace fermicorr {

class CIWavefunction {
 public:
  using Amplitudes = std::map<Determinant, Complex>;

  CIWavefunction(OrbitalSpace space, int n) : space_(space), n_(n) {
    if (n < 0 || n > space.d)
      throw Error(ErrorKind::invalid_argument, "particle number " + std::to_string(n) + " incompatible with d=" +
                                                   std::to_string(space.d));
  }

  CIWavefunction(OrbitalSpace space, int n, Amplitudes amplitudes) : CIWavefunction(space, n) {
    for (const auto& [det, c] : amplitudes) set(det, c);
  }

  const OrbitalSpace& space() const noexcept { return space_; }
  int dim() const noexcept { return space_.d; }
  int particles() const noexcept { return n_; }
  const Amplitudes& amplitudes() const noexcept { return amplitudes_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }

  Complex amplitude(const Determinant& det) const {
    auto it = amplitudes_.find(det);
    return it == amplitudes_.end() ? Complex{} : it->second;
  }

  /// Sets (or overwrites) an amplitude; exact zeros are not stored.
  void set(const Determinant& det, Complex c) {
    if (det.count() != n_)
      throw Error(ErrorKind::invalid_argument, "determinant " + to_string(det) + " does not have " +
                                                   std::to_string(n_) + " particles");
    if ((det.bits & ~space_.mask()) != 0)
      throw Error(ErrorKind::invalid_argument, "determinant " + to_string(det) + " exceeds d=" +
                                                   std::to_string(space_.d));
    if (c == Complex{})
      amplitudes_.erase(det);
    else
      amplitudes_[det] = c;
  }

  void add(const Determinant& det, Complex c) { set(det, amplitude(det) + c); }

  double norm() const {
    double sum = 0.0;
    for (const auto& [det, c] : amplitudes_) sum += std::norm(c);
    return std::sqrt(sum);
  }

  bool same_sector(const CIWavefunction& other) const noexcept {
    return space_ == other.space_ && n_ == other.n_;
  }

 private:
  OrbitalSpace space_;
  int n_;
  Amplitudes amplitudes_;
};

/// Rescales by a single positive factor to unit norm.
inline CIWavefunction normalize(const CIWavefunction& psi) {
  const double nrm = psi.norm();
  if (nrm == 0.0 || !std::isfinite(nrm)) throw Error(ErrorKind::numerical, "null state");
  CIWavefunction out(psi.space(), psi.particles());
  for (const auto& [det, c] : psi.amplitudes()) out.set(det, c / nrm);
  return out;
}

inline Complex inner_product(const CIWavefunction& a, const CIWavefunction& b) {
  if (!a.same_sector(b)) throw Error(ErrorKind::invalid_argument, "sector mismatch");
  Complex sum{};
  for (const auto& [det, c] : a.amplitudes()) sum += std::conj(c) * b.amplitude(det);
  return sum;
}

struct OnePDM {
  CMatrix gamma;

  int dim() const noexcept { return static_cast<int>(gamma.rows()); }
  double trace() const { return gamma.trace().real(); }

  double hermiticity_defect() const { return (gamma - gamma.adjoint()).cwiseAbs().maxCoeff(); }
};

/// gamma(p, q) = <psi| a+_q a_p |psi>, accumulated determinant by determinant.
inline OnePDM one_pdm(const CIWavefunction& psi) {
  const int d = psi.dim();
  OnePDM out{CMatrix::Zero(d, d)};
  for (const auto& [ket, c] : psi.amplitudes()) {
    for (int p : ket.indices()) {
      const auto removed = apply_annihilation(ket, p);
      for (int q = 0; q < d; ++q) {
        const auto added = apply_creation(removed->det, q);
        if (!added) continue;
        const Complex bra = psi.amplitude(added->det);
        if (bra == Complex{}) continue;
        out.gamma(p, q) += static_cast<double>(removed->sign * added->sign) * std::conj(bra) * c;
      }
    }
  }
  return out;
}

}  // namespace fermicorr
