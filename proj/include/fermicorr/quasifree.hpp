// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file quasifree.hpp
 * @brief The number-conserving quasifree state determined by a one-particle
 *        density matrix: occupation-pattern probabilities, its explicit Fock
 *        matrix, and a brute-force check of the Wick factorization.
 *
 * With natural orbitals phi_i occupied independently with probability
 * lambda_i, the pattern s (a set of natural-orbital indices) has probability
 *
 *     p(s) = prod_{i in s} lambda_i * prod_{i not in s} (1 - lambda_i),
 *
 * and the quasifree density is sum_s p(s) |Psi_s><Psi_s| with Psi_s the
 * natural-orbital determinant. The product runs over all d basis orbitals.
 */

#pragma once

#include "fermicorr/fock.hpp"
#include "fermicorr/fock_space.hpp"
#include "fermicorr/natural_orbitals.hpp"

#include <vector>

namespace fermicorr {

inline constexpr int quasifree_matrix_cap = 20;
inline constexpr int wick_cap = 12;

class QuasifreeSpec {
 public:
  explicit QuasifreeSpec(NaturalOrbitalBasis basis) : basis_(std::move(basis)) {
    for (int i = 0; i < basis_.dim(); ++i) {
      const double lambda = basis_.occupations[i];
      if (!(lambda >= 0.0 && lambda <= 1.0))
        throw Error(ErrorKind::numerical, "quasifree occupations must lie in [0, 1]");
    }
  }

  /// Quasifree state with the given occupations in the computational orbitals.
  static QuasifreeSpec diagonal(const RVector& lambda) {
    const auto d = lambda.size();
    return QuasifreeSpec(NaturalOrbitalBasis{CMatrix::Identity(d, d), lambda});
  }

  int dim() const noexcept { return basis_.dim(); }
  const RVector& lambda() const noexcept { return basis_.occupations; }
  const NaturalOrbitalBasis& basis() const noexcept { return basis_; }

  /// gamma = V diag(lambda) V^dagger in the computational basis.
  CMatrix gamma() const {
    return basis_.orbitals * lambda().cast<Complex>().asDiagonal() * basis_.orbitals.adjoint();
  }

 private:
  NaturalOrbitalBasis basis_;
};

/// s indexes natural orbitals (bit i <=> phi_i occupied).
inline double occupation_probability(const QuasifreeSpec& spec, const Determinant& s) {
  double p = 1.0;
  const RVector& lambda = spec.lambda();
  for (int i = 0; i < spec.dim(); ++i) p *= s.occupied(i) ? lambda[i] : 1.0 - lambda[i];
  return p;
}

/// Visits every pattern s with p(s) != 0. Orbitals with lambda exactly 1 are
/// always occupied and those with lambda exactly 0 never are, so only the
/// remaining free orbitals are enumerated.
template <class Visitor>
void for_each_pattern(const QuasifreeSpec& spec, Visitor&& visit) {
  std::uint64_t required = 0, free = 0;
  for (int i = 0; i < spec.dim(); ++i) {
    const double lambda = spec.lambda()[i];
    if (lambda == 1.0)
      required |= std::uint64_t{1} << i;
    else if (lambda != 0.0)
      free |= std::uint64_t{1} << i;
  }
  std::uint64_t sub = 0;
  do {
    const Determinant s(required | sub);
    visit(s, occupation_probability(spec, s));
    sub = (sub - free) & free;
  } while (sub != 0);
}

/// Diagonal matrix over the natural-orbital Fock basis with entry p(s) at s.
inline FockMatrix build_quasifree_fock_matrix(const QuasifreeSpec& spec, int cap = quasifree_matrix_cap) {
  const int d = spec.dim();
  require_scale(d, cap);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << d);
  std::vector<Eigen::Triplet<Complex>> triplets;
  for_each_pattern(spec, [&](const Determinant& s, double p) {
    const auto k = static_cast<int>(s.bits);
    triplets.emplace_back(k, k, p);
  });
  FockMatrix out{d, SparseCMatrix(dim, dim)};
  out.entries.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

struct WickReport {
  Complex lhs;  ///< Tr(rho a+_{f1} ... a+_{fm} a_{gn} ... a_{g1}), explicit Fock algebra
  Complex rhs;  ///< delta_{mn} det(<g_j, gamma f_i>)
  double deviation = 0.0;
};

/// Evaluates both sides of the quasifree factorization identity for the given
/// vectors (expressed in the computational orbital basis).
inline WickReport verify_wick(const QuasifreeSpec& spec, const std::vector<CVector>& f_list,
                              const std::vector<CVector>& g_list, int cap = wick_cap) {
  const int d = spec.dim();
  require_scale(d, cap);
  const auto m = static_cast<int>(f_list.size());
  const auto n = static_cast<int>(g_list.size());
  for (const auto& v : f_list)
    if (v.size() != d) throw Error(ErrorKind::invalid_argument, "vector length does not match d");
  for (const auto& v : g_list)
    if (v.size() != d) throw Error(ErrorKind::invalid_argument, "vector length does not match d");

  // Work in the natural-orbital Fock basis where rho is diagonal.
  const CMatrix& orbitals = spec.basis().orbitals;
  const auto creators = creation_operators(d, cap);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << d);
  SparseCMatrix product(dim, dim);
  product.setIdentity();
  for (int i = 0; i < m; ++i) product = SparseCMatrix(product * creation_along(creators, orbitals.adjoint() * f_list[i]));
  for (int j = n - 1; j >= 0; --j)
    product = SparseCMatrix(product * annihilation_along(creators, orbitals.adjoint() * g_list[j]));

  WickReport report;
  const FockMatrix rho = build_quasifree_fock_matrix(spec, cap);
  for (Eigen::Index k = 0; k < rho.entries.outerSize(); ++k)
    for (SparseCMatrix::InnerIterator it(rho.entries, k); it; ++it) report.lhs += it.value() * product.coeff(k, k);

  if (m == n) {
    const CMatrix gamma = spec.gamma();
    CMatrix two_point(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) two_point(i, j) = g_list[j].dot(gamma * f_list[i]);
    report.rhs = m == 0 ? Complex{1.0, 0.0} : two_point.determinant();
  }
  report.deviation = std::abs(report.lhs - report.rhs);
  return report;
}

}  // namespace fermicorr
