// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

using namespace fermicorr;
using namespace fermicorr::testing;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("fermicorr_io_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  fs::path write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return path / name;
  }
};

}  // namespace

TEST_CASE("parse a wavefunction") {
  const auto parsed = parse_wavefunction(
      "# two records\n"
      "dim=6 nelec=3\n"
      "1 3 5 0.81649658092772603 0   # leading\n"
      "\n"
      "2 4 6 0.57735026918962573 0\n");
  CHECK(parsed.warnings.empty());
  CHECK(parsed.psi.dim() == 6);
  CHECK(parsed.psi.particles() == 3);
  CHECK(max_abs_diff(parsed.psi, psi_135_246()) < 1e-15);
}

TEST_CASE("unnormalized input is rescaled with a warning") {
  const auto parsed = parse_wavefunction("dim=2 nelec=1\n1 3 0\n2 0 4\n");
  REQUIRE(parsed.warnings.size() == 1);
  CHECK_THAT(parsed.warnings[0], ContainsSubstring("normalizing"));
  CHECK_THAT(parsed.psi.amplitude(Determinant::from_indices({1})).imag(), WithinAbs(0.8, 1e-15));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n2 1 1 0\n"),
                    "line 2: indices not strictly increasing");
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n1 5 1 0\n"), ContainsSubstring("line 2: index 5 out of range"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n1 2 1 0\n1 2 1 0\n"),
                    ContainsSubstring("line 3: duplicate determinant"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n1 2 3 1 0\n"), ContainsSubstring("line 2: expected 2 indices"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n1 2 x 0\n"), ContainsSubstring("line 2"));
  CHECK_THROWS_WITH(parse_wavefunction("dims=4 nelec=2\n"), ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=5\n"), ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(parse_wavefunction("# nothing\n"), ContainsSubstring("missing"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n"), ContainsSubstring("no records"));
  CHECK_THROWS_WITH(parse_wavefunction("dim=4 nelec=2\n1 2 0 0\n"), "null state");
  try {
    (void)parse_wavefunction("dim=4 nelec=2\n2 1 1 0\n");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("format and parse round trip") {
  Rng rng(307);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = std::uniform_int_distribution<int>(1, 8)(rng);
    const int n = std::uniform_int_distribution<int>(0, d)(rng);
    const auto psi = random_state(OrbitalSpace(d), n, rng);
    const auto back = parse_wavefunction(format_wavefunction(psi));
    REQUIRE(back.warnings.empty());
    REQUIRE(max_abs_diff(back.psi, psi) < 1e-15);
  }
}

TEST_CASE("mixture files") {
  const auto entries = parse_mixture("# weights\n0.25 a.wf\n0.75 sub/b.wf\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[1].weight == 0.75);
  CHECK(entries[1].path == fs::path("sub/b.wf"));
  CHECK_THROWS_WITH(parse_mixture("0.5\n"), ContainsSubstring("line 1"));
  CHECK_THROWS_WITH(parse_mixture("0 a.wf\n"), ContainsSubstring("positive"));
  CHECK_THROWS_AS(parse_mixture(""), Error);

  TempDir dir;
  dir.write("a.wf", "dim=2 nelec=1\n1 1 0\n");
  dir.write("b.wf", "dim=2 nelec=1\n2 1 0\n");
  auto loaded = load_mixture(dir.write("m.mix", "1 a.wf\n1 b.wf\n"));
  REQUIRE(loaded.warnings.size() == 1);
  CHECK_THAT(corr_mixed(loaded.state).corr, WithinAbs(1.0, 1e-10));

  loaded = load_mixture(dir.write("ok.mix", "0.5 a.wf\n0.5 b.wf\n"));
  CHECK(loaded.warnings.empty());

  CHECK_THROWS_WITH(load_mixture(dir.write("bad.mix", "1 missing.wf\n")), ContainsSubstring("missing.wf"));
  dir.write("c.wf", "dim=3 nelec=1\n2 1 0\n");
  CHECK_THROWS_AS(load_mixture(dir.write("mismatch.mix", "0.5 a.wf\n0.5 c.wf\n")), Error);
}

TEST_CASE("bundled data files") {
  const fs::path data = FERMICORR_DATA_DIR;
  CHECK(max_abs_diff(load_wavefunction(data / "three_electron_psi.wf").psi, psi_135_246()) < 1e-15);
  CHECK(max_abs_diff(load_wavefunction(data / "three_electron_phi.wf").psi, phi_123_345_156()) < 1e-15);
  CHECK(max_abs_diff(load_wavefunction(data / "heitler_london.wf").psi, heitler_london_state()) < 1e-15);
  const auto mix = load_mixture(data / "one_particle_mixture.mix");
  CHECK(mix.warnings.empty());
  CHECK(mix.state.components().size() == 2);
}
