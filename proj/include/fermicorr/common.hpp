// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file common.hpp
 * @brief Scalar/matrix aliases, error type and log-base handling shared by
 *        every fermicorr module.
 */

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fermicorr {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Broad failure categories; the CLI maps them onto exit statuses.
enum class ErrorKind {
  invalid_argument,  ///< malformed input, sector mismatch, bad file contents
  numerical,         ///< a numerical validation failed (occupations, unitarity, underflow)
  scale,             ///< an explicit Fock-space path was asked for too many orbitals
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class LogBase { two, e };

inline double log_in(double x, LogBase base) {
  return base == LogBase::two ? std::log2(x) : std::log(x);
}

inline std::string_view to_string(LogBase base) { return base == LogBase::two ? "2" : "e"; }

inline LogBase parse_log_base(std::string_view text) {
  if (text == "2") return LogBase::two;
  if (text == "e") return LogBase::e;
  throw Error(ErrorKind::invalid_argument, "log base must be '2' or 'e', got '" + std::string(text) + "'");
}

/// Largest orbital count accepted by the explicit Fock-space (2^d) oracle paths.
/// FERMICORR_MAX_DIM overrides the default of 14.
inline int oracle_dim_cap() {
  constexpr int fallback = 14;
  const char* env = std::getenv("FERMICORR_MAX_DIM");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 1 || value > 30) return fallback;
  return static_cast<int>(value);
}

inline void require_scale(int d, int cap) {
  if (d > cap)
    throw Error(ErrorKind::scale, "oracle scale exceeded: d=" + std::to_string(d) + " exceeds cap " +
                                      std::to_string(cap));
}

}  // namespace fermicorr
