// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace fermicorr;
using namespace fermicorr::testing;
using Catch::Matchers::WithinAbs;

TEST_CASE("normalize rescales by a positive factor") {
  auto psi = normalize(CIWavefunction(OrbitalSpace(4), 2, {{Determinant::from_indices({0, 1}), 2.0}}));
  CHECK_THAT(psi.amplitude(Determinant::from_indices({0, 1})).real(), WithinAbs(1.0, 1e-15));

  psi = normalize(CIWavefunction(
      OrbitalSpace(4), 2, {{Determinant::from_indices({0, 1}), 1.0}, {Determinant::from_indices({2, 3}), 1.0}}));
  for (const auto& [det, c] : psi.amplitudes()) CHECK_THAT(c.real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));

  psi = make_state(6, 3, {{{1, 3, 5}, std::sqrt(2.0)}, {{2, 4, 6}, 1.0}});
  CHECK_THAT(psi.amplitude(Determinant::from_indices({0, 2, 4})).real(), WithinAbs(std::sqrt(2.0 / 3.0), 1e-15));
  CHECK_THAT(psi.amplitude(Determinant::from_indices({1, 3, 5})).real(), WithinAbs(std::sqrt(1.0 / 3.0), 1e-15));
  CHECK_THAT(psi.norm(), WithinAbs(1.0, 1e-12));

  CHECK_THROWS_WITH(normalize(CIWavefunction(OrbitalSpace(4), 2)), "null state");
}

TEST_CASE("wavefunction rejects determinants outside its sector") {
  CIWavefunction psi(OrbitalSpace(4), 2);
  CHECK_THROWS_AS(psi.set(Determinant::from_indices({0}), 1.0), Error);
  CHECK_THROWS_AS(psi.set(Determinant::from_indices({0, 5}), 1.0), Error);
  CHECK_THROWS_AS(CIWavefunction(OrbitalSpace(4), 5), Error);
}

TEST_CASE("inner products") {
  const auto psi = psi_135_246();
  CHECK_THAT(std::abs(inner_product(psi, psi) - 1.0), WithinAbs(0.0, 1e-14));
  CHECK(inner_product(psi, phi_123_345_156()) == Complex{});

  const auto a = make_state(4, 2, {{{1, 2}, 1.0}});
  const auto b = make_state(4, 2, {{{1, 3}, 1.0}});
  CHECK(inner_product(a, b) == Complex{});
  CHECK_THROWS_WITH(inner_product(a, make_state(4, 1, {{{1}, 1.0}})), "sector mismatch");

  Rng rng(3);
  const auto x = random_state(OrbitalSpace(5), 2, rng);
  const auto y = random_state(OrbitalSpace(5), 2, rng);
  CHECK(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))) < 1e-15);
}

TEST_CASE("one_pdm examples") {
  const auto single = make_state(4, 2, {{{1, 2}, 1.0}});
  RVector expected(4);
  expected << 1, 1, 0, 0;
  CHECK(max_abs(one_pdm(single).gamma - CMatrix(expected.cast<Complex>().asDiagonal())) < 1e-15);

  expected.resize(6);
  expected << 2.0 / 3, 1.0 / 3, 2.0 / 3, 1.0 / 3, 2.0 / 3, 1.0 / 3;
  const CMatrix diag = expected.cast<Complex>().asDiagonal();
  CHECK(max_abs(one_pdm(psi_135_246()).gamma - diag) < 1e-14);
  CHECK(max_abs(one_pdm(phi_123_345_156()).gamma - diag) < 1e-14);
}

TEST_CASE("one_pdm satisfies the density-matrix invariants on random states") {
  Rng rng(17);
  std::uniform_int_distribution<int> pick_d(1, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = pick_d(rng);
    const int n = std::uniform_int_distribution<int>(0, d)(rng);
    const auto psi = random_state(OrbitalSpace(d), n, rng);
    const auto gamma = one_pdm(psi);
    REQUIRE(gamma.hermiticity_defect() < 1e-12);
    REQUIRE_THAT(gamma.trace(), WithinAbs(n, 1e-10));
    const RVector values = Eigen::SelfAdjointEigenSolver<CMatrix>(gamma.gamma).eigenvalues();
    REQUIRE(values.minCoeff() >= -1e-10);
    REQUIRE(values.maxCoeff() <= 1.0 + 1e-10);
  }
}

TEST_CASE("one_pdm matches the explicit Fock-space expectation values") {
  Rng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 5;
    const int n = std::uniform_int_distribution<int>(1, d - 1)(rng);
    const auto psi = random_state(OrbitalSpace(d), n, rng);
    const auto creators = creation_operators(d, oracle_dim_cap());
    REQUIRE(max_abs(one_pdm(psi).gamma - oracle::gamma(creators, oracle::embed(psi))) < 1e-13);
  }
}

TEST_CASE("one_pdm of a single determinant in any basis is a projector") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = std::uniform_int_distribution<int>(2, 7)(rng);
    const int n = std::uniform_int_distribution<int>(1, d - 1)(rng);
    const CMatrix gamma = one_pdm(rotated_determinant(d, n, rng)).gamma;
    REQUIRE(max_abs(gamma * gamma - gamma) < 1e-12);
  }
}

TEST_CASE("one_pdm ignores a global phase") {
  Rng rng(31);
  const auto psi = random_state(OrbitalSpace(6), 3, rng);
  CIWavefunction rotated(psi.space(), psi.particles());
  const Complex phase = std::polar(1.0, 0.7);
  for (const auto& [det, c] : psi.amplitudes()) rotated.set(det, phase * c);
  CHECK(max_abs(one_pdm(psi).gamma - one_pdm(rotated).gamma) < 1e-15);
}
