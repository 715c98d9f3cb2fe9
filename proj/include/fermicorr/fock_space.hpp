// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock_space.hpp
 * @brief Explicit 2^d-dimensional Fock-space matrices.
 *
 * Basis vector k of the Fock space is the determinant whose bitstring equals k
 * (all subsets of orbitals in lexicographic order, vacuum first). These
 * matrices back the brute-force paths only; the production recipe never
 * materializes them.
 */

#pragma once

#include "fermicorr/common.hpp"

#include <Eigen/SparseCore>

#include <bit>
#include <cstdint>
#include <vector>

namespace fermicorr {

using SparseCMatrix = Eigen::SparseMatrix<Complex>;

struct FockMatrix {
  int d = 0;
  SparseCMatrix entries;

  Eigen::Index size() const noexcept { return entries.rows(); }
};

enum class LadderKind { creation, annihilation };

inline FockMatrix fock_operator_matrix(LadderKind kind, int p, int d, int cap) {
  require_scale(d, cap);
  if (p < 0 || p >= d) throw Error(ErrorKind::invalid_argument, "orbital index out of range");
  const std::uint64_t dim = std::uint64_t{1} << d;
  const std::uint64_t bit = std::uint64_t{1} << p;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(dim / 2);
  for (std::uint64_t from = 0; from < dim; ++from) {
    if ((from & bit) != 0) continue;
    const std::uint64_t to = from | bit;
    const double sign = std::popcount(from & (bit - 1)) % 2 == 0 ? 1.0 : -1.0;
    // creation maps |from> -> sign |to>; annihilation is its adjoint.
    if (kind == LadderKind::creation)
      triplets.emplace_back(static_cast<int>(to), static_cast<int>(from), sign);
    else
      triplets.emplace_back(static_cast<int>(from), static_cast<int>(to), sign);
  }
  FockMatrix out{d, SparseCMatrix(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim))};
  out.entries.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

inline FockMatrix fock_operator_matrix(LadderKind kind, int p, int d) {
  return fock_operator_matrix(kind, p, d, oracle_dim_cap());
}

/// All d creation matrices a+_0 ... a+_{d-1}.
inline std::vector<SparseCMatrix> creation_operators(int d, int cap) {
  std::vector<SparseCMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d));
  for (int p = 0; p < d; ++p) ops.push_back(fock_operator_matrix(LadderKind::creation, p, d, cap).entries);
  return ops;
}

/// a+_f = sum_p f_p a+_p (linear in f).
inline SparseCMatrix creation_along(const std::vector<SparseCMatrix>& creators, const CVector& f) {
  SparseCMatrix out(creators.front().rows(), creators.front().cols());
  for (std::size_t p = 0; p < creators.size(); ++p)
    if (f[static_cast<Eigen::Index>(p)] != Complex{}) out += f[static_cast<Eigen::Index>(p)] * creators[p];
  return out;
}

/// a_g = (a+_g)^dagger = sum_p conj(g_p) a_p (antilinear in g).
inline SparseCMatrix annihilation_along(const std::vector<SparseCMatrix>& creators, const CVector& g) {
  return SparseCMatrix(creation_along(creators, g).adjoint());
}

}  // namespace fermicorr
