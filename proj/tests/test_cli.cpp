// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::StartsWith;
using Catch::Matchers::WithinAbs;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FERMICORR_CLI) + " " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(FERMICORR_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("corr prints the measure") {
  const auto r = run("corr " + data("three_electron_psi.wf"));
  REQUIRE(r.status == 0);
  CHECK_THAT(r.out, StartsWith("Corr"));
  CHECK_THAT(r.out, ContainsSubstring("bits"));

  const auto j = run("--json corr " + data("three_electron_psi.wf"));
  REQUIRE(j.status == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK_THAT(doc["corr"].get<double>(), WithinAbs(4.083, 0.005));
  CHECK_THAT(doc["overlap"].get<double>() * 729, WithinAbs(43.0, 1e-10));
  CHECK(doc["base"] == "2");
  CHECK(doc["lambda"].size() == 6);
  CHECK(doc["underflow"] == false);

  const auto nats = nlohmann::json::parse(run("--base e --json corr " + data("three_electron_phi.wf")).out);
  CHECK_THAT(nats["corr"].get<double>(), WithinAbs(-std::log(16.0 / 729), 1e-9));
}

TEST_CASE("corr2 uses the Schmidt closed form") {
  const auto doc = nlohmann::json::parse(run("--json corr2 " + data("heitler_london.wf")).out);
  CHECK_THAT(doc["corr"].get<double>(), WithinAbs(4.0, 1e-9));
  CHECK(doc["schmidt_weights"].size() == 2);

  const auto r = run("corr2 " + data("three_electron_psi.wf"));
  CHECK(r.status == 2);
  CHECK_THAT(r.out, ContainsSubstring("nelec=3"));
}

TEST_CASE("mixed and oracle subcommands") {
  const auto mixed = nlohmann::json::parse(run("--json mixed " + data("one_particle_mixture.mix")).out);
  CHECK_THAT(mixed["corr"].get<double>(), WithinAbs(1.0, 1e-9));

  const auto oracle = nlohmann::json::parse(run("--json oracle " + data("three_electron_phi.wf")).out);
  CHECK(oracle["difference"].get<double>() < 1e-8);
  CHECK_THAT(oracle["oracle_overlap"].get<double>() * 729, WithinAbs(16.0, 1e-9));
}

TEST_CASE("hubbard-sweep writes CSV") {
  const auto r = run("hubbard-sweep --u-min 0 --u-max 4 --steps 4");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "u,energy,corr,entropy,entropy_normalized,degree");
  int rows = 0;
  double previous = -1.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string u, energy, corr;
    std::getline(fields, u, ',');
    std::getline(fields, energy, ',');
    std::getline(fields, corr, ',');
    const double c = std::stod(corr);
    CHECK(c > previous);
    previous = c;
  }
  CHECK(rows == 5);
}

TEST_CASE("verify-wick succeeds") {
  const auto r = run("verify-wick --dim 6 --seed 3 --trials 20");
  CHECK(r.status == 0);
  CHECK_THAT(r.out, ContainsSubstring("failures 0/20"));
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("").status == 2);
  CHECK(run("corr").status == 2);
  CHECK(run("--base 10 corr " + data("three_electron_psi.wf")).status == 2);
  CHECK(run("corr /nonexistent/file.wf").status == 2);
  CHECK(run("hubbard-sweep --t 0").status == 2);
  CHECK(run("--help").status == 0);
}
