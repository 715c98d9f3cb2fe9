// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file fock.hpp
 * @brief Bitstring determinants, fermionic sign algebra and determinant overlaps.
 *
 * A determinant over d spin-orbitals is a bitstring (bit i set <=> orbital i
 * occupied). The occupied indices i_1 < ... < i_N define the reference phase
 *
 *     |{i_1,...,i_N}> = a+_{i_1} a+_{i_2} ... a+_{i_N} |vac>,
 *
 * so that a+_p acting on a determinant picks up (-1)^(occupied orbitals below p).
 * Orbital indices are 0-based here; the text formats use 1-based indices.
 */

#pragma once

#include "fermicorr/common.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fermicorr {

inline constexpr int max_orbitals = 64;

struct OrbitalSpace {
  int d = 1;

  explicit OrbitalSpace(int dim) : d(dim) {
    if (dim < 1 || dim > max_orbitals)
      throw Error(ErrorKind::invalid_argument,
                  "orbital count must lie in [1, 64], got " + std::to_string(dim));
  }

  std::uint64_t mask() const noexcept { return d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1; }
  friend bool operator==(const OrbitalSpace&, const OrbitalSpace&) = default;
};

/// Occupation bitstring. Ordering is by integer value, i.e. lexicographic
/// bitstring order used throughout for deterministic enumeration.
struct Determinant {
  std::uint64_t bits = 0;

  constexpr Determinant() = default;
  constexpr explicit Determinant(std::uint64_t b) : bits(b) {}

  static Determinant from_indices(const std::vector<int>& indices) {
    Determinant det;
    for (int i : indices) {
      if (i < 0 || i >= max_orbitals)
        throw Error(ErrorKind::invalid_argument, "orbital index " + std::to_string(i) + " out of range");
      det.bits |= std::uint64_t{1} << i;
    }
    return det;
  }

  int count() const noexcept { return std::popcount(bits); }
  bool occupied(int p) const noexcept { return (bits >> p) & 1U; }

  /// Strictly increasing 0-based occupied indices.
  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Number of occupied orbitals with index < p.
  int occupied_below(int p) const noexcept {
    return std::popcount(bits & ((std::uint64_t{1} << p) - 1));
  }

  friend constexpr auto operator<=>(const Determinant&, const Determinant&) = default;
};

struct DeterminantHash {
  std::size_t operator()(const Determinant& det) const noexcept { return std::hash<std::uint64_t>{}(det.bits); }
};

struct SignedDeterminant {
  int sign = 1;
  Determinant det;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return result;
}

/// All C(d, n) n-particle determinants in increasing bitstring order.
/// n > d yields an empty list.
inline std::vector<Determinant> enumerate_basis(const OrbitalSpace& space, int n) {
  std::vector<Determinant> out;
  if (n < 0 || n > space.d) return out;
  out.reserve(binomial(space.d, n));
  if (n == 0) {
    out.emplace_back(0);
    return out;
  }
  const std::uint64_t total = binomial(space.d, n);
  std::uint64_t v = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t k = 0; k < total; ++k) {
    out.emplace_back(v);
    if (k + 1 == total) break;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = v & (~v + 1);
    const std::uint64_t r = v + c;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

inline std::optional<SignedDeterminant> apply_creation(const Determinant& det, int p) {
  if (det.occupied(p)) return std::nullopt;
  const int sign = det.occupied_below(p) % 2 == 0 ? 1 : -1;
  return SignedDeterminant{sign, Determinant(det.bits | (std::uint64_t{1} << p))};
}

inline std::optional<SignedDeterminant> apply_annihilation(const Determinant& det, int p) {
  if (!det.occupied(p)) return std::nullopt;
  const int sign = det.occupied_below(p) % 2 == 0 ? 1 : -1;
  return SignedDeterminant{sign, Determinant(det.bits & ~(std::uint64_t{1} << p))};
}

/// <bra| U |ket> for the many-body operator induced by the one-particle matrix
/// M: the determinant of M restricted to bra's rows and ket's columns.
inline Complex slater_overlap(const CMatrix& m, const Determinant& bra, const Determinant& ket) {
  const int n = bra.count();
  if (n != ket.count()) throw Error(ErrorKind::invalid_argument, "sector mismatch");
  if (n == 0) return {1.0, 0.0};
  const auto rows = bra.indices();
  const auto cols = ket.indices();
  if (n == 1) return m(rows[0], cols[0]);
  if (n == 2)
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) - m(rows[0], cols[1]) * m(rows[1], cols[0]);
  CMatrix sub(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sub(i, j) = m(rows[i], cols[j]);
  return sub.partialPivLu().determinant();
}

/// 1-based, space-separated rendering such as "|1 3 5>".
inline std::string to_string(const Determinant& det) {
  std::string out = "|";
  bool first = true;
  for (int i : det.indices()) {
    if (!first) out += ' ';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + ">";
}

}  // namespace fermicorr
