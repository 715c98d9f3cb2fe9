// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief Text formats for wavefunctions and mixtures.
 *
 * Wavefunction file:
 *
 *     # comment
 *     dim=<d> nelec=<N>
 *     <i1> ... <iN> <re> <im>      (1-based, strictly increasing indices)
 *
 * Mixture file: one `<weight> <path>` per line; relative paths resolve against
 * the mixture file's directory.
 */

#pragma once

#include "fermicorr/corr.hpp"
#include "fermicorr/wavefunction.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace fermicorr {

inline constexpr double normalization_warning_tol = 1e-9;

struct ParsedWavefunction {
  CIWavefunction psi;
  std::vector<std::string> warnings;
};

namespace io_detail {

[[noreturn]] inline void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::invalid_argument, "line " + std::to_string(line) + ": " + what);
}

inline std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

inline std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

inline long parse_int(const std::string& tok, std::size_t line) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail(line, "expected an integer, got '" + tok + "'");
  return value;
}

inline double parse_real(const std::string& tok, std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
    fail(line, "expected a real number, got '" + tok + "'");
  return value;
}

inline long parse_key(const std::string& tok, std::string_view key, std::size_t line) {
  const std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0) fail(line, "expected '" + prefix + "<int>', got '" + tok + "'");
  return parse_int(tok.substr(prefix.size()), line);
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::invalid_argument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace io_detail

/// Parses and normalizes; a warning is recorded when the input norm deviates
/// from 1 by more than 1e-9.
inline ParsedWavefunction parse_wavefunction(std::string_view text) {
  using namespace io_detail;
  std::istringstream in{std::string(text)};
  std::optional<CIWavefunction> psi;
  std::set<Determinant> seen;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) continue;

    if (!psi) {
      if (tokens.size() != 2) fail(lineno, "header must be 'dim=<d> nelec=<N>'");
      const long d = parse_key(tokens[0], "dim", lineno);
      const long n = parse_key(tokens[1], "nelec", lineno);
      if (d < 1 || d > max_orbitals) fail(lineno, "dim must lie in [1, 64]");
      if (n < 0 || n > d) fail(lineno, "nelec must lie in [0, dim]");
      psi.emplace(OrbitalSpace(static_cast<int>(d)), static_cast<int>(n));
      continue;
    }

    const auto n = static_cast<std::size_t>(psi->particles());
    if (tokens.size() != n + 2)
      fail(lineno, "expected " + std::to_string(n) + " indices followed by '<re> <im>', got " +
                       std::to_string(tokens.size()) + " fields");
    std::vector<int> indices;
    for (std::size_t i = 0; i < n; ++i) {
      const long idx = parse_int(tokens[i], lineno);
      if (idx < 1 || idx > psi->dim())
        fail(lineno, "index " + std::to_string(idx) + " out of range [1, " + std::to_string(psi->dim()) + "]");
      if (!indices.empty() && idx - 1 <= indices.back()) fail(lineno, "indices not strictly increasing");
      indices.push_back(static_cast<int>(idx - 1));
    }
    const Complex amp(parse_real(tokens[n], lineno), parse_real(tokens[n + 1], lineno));
    const auto det = Determinant::from_indices(indices);
    if (!seen.insert(det).second) fail(lineno, "duplicate determinant " + to_string(det));
    psi->set(det, amp);
  }
  if (!psi) throw Error(ErrorKind::invalid_argument, "missing 'dim=<d> nelec=<N>' header");
  if (seen.empty()) throw Error(ErrorKind::invalid_argument, "wavefunction has no records");

  ParsedWavefunction out{*psi, {}};
  const double nrm = psi->norm();
  if (nrm == 0.0) throw Error(ErrorKind::numerical, "null state");
  if (std::abs(nrm - 1.0) > normalization_warning_tol) {
    std::ostringstream msg;
    msg << "input norm " << nrm << " deviates from 1; normalizing";
    out.warnings.push_back(msg.str());
  }
  out.psi = normalize(*psi);
  return out;
}

inline ParsedWavefunction load_wavefunction(const std::filesystem::path& path) {
  try {
    return parse_wavefunction(io_detail::read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

/// Emits the file format with round-trip-exact (17 significant digit) amplitudes.
inline std::string format_wavefunction(const CIWavefunction& psi) {
  std::ostringstream out;
  out << "dim=" << psi.dim() << " nelec=" << psi.particles() << '\n';
  char buf[64];
  for (const auto& [det, c] : psi.amplitudes()) {
    for (int i : det.indices()) out << i + 1 << ' ';
    std::snprintf(buf, sizeof buf, "%.17g %.17g", c.real(), c.imag());
    out << buf << '\n';
  }
  return out.str();
}

struct MixtureEntry {
  double weight;
  std::filesystem::path path;
};

inline std::vector<MixtureEntry> parse_mixture(std::string_view text) {
  using namespace io_detail;
  std::istringstream in{std::string(text)};
  std::vector<MixtureEntry> entries;
  std::size_t lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto tokens = split(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != 2) fail(lineno, "expected '<weight> <path>'");
    const double w = parse_real(tokens[0], lineno);
    if (!(w > 0.0)) fail(lineno, "weight must be positive");
    entries.push_back({w, tokens[1]});
  }
  if (entries.empty()) throw Error(ErrorKind::invalid_argument, "mixture has no components");
  return entries;
}

struct LoadedMixture {
  MixedState state;
  std::vector<std::string> warnings;
};

/// Loads every component and renormalizes the weights (with a warning when
/// their sum deviates from 1 by more than 1e-9).
inline LoadedMixture load_mixture(const std::filesystem::path& path) {
  std::vector<MixtureEntry> entries;
  try {
    entries = parse_mixture(io_detail::read_file(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
  std::vector<std::string> warnings;
  double total = 0.0;
  for (const auto& e : entries) total += e.weight;
  if (std::abs(total - 1.0) > normalization_warning_tol) {
    std::ostringstream msg;
    msg << "mixture weights sum to " << total << "; normalizing";
    warnings.push_back(msg.str());
  }
  std::vector<MixedState::Component> components;
  for (const auto& e : entries) {
    const auto resolved = e.path.is_absolute() ? e.path : path.parent_path() / e.path;
    auto parsed = load_wavefunction(resolved);
    for (auto& w : parsed.warnings) warnings.push_back(resolved.string() + ": " + w);
    components.push_back({e.weight / total, std::move(parsed.psi)});
  }
  return {MixedState(std::move(components)), std::move(warnings)};
}

}  // namespace fermicorr
