// Copyright 2026 The fermicorr Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

/**
 * @file corr.hpp
 * @brief Correlation relative to the quasifree reference state, for pure and
 *        mixed states, plus the spectral measures it is compared against.
 *
 * For a pure state psi with one-particle density matrix gamma, let rho be the
 * quasifree state with the same gamma. Then
 *
 *     Corr(psi) = -log <psi, rho psi> = -log sum_s p(s) |c(s)|^2,
 *
 * where c(s) are the amplitudes of psi over natural-orbital determinants. For
 * a density operator D the overlap is replaced by the squared fidelity:
 *
 *     Corr(D) = -2 log Tr sqrt(D^{1/2} rho D^{1/2}).
 */

#pragma once

#include "fermicorr/natural_orbitals.hpp"
#include "fermicorr/quasifree.hpp"
#include "fermicorr/wavefunction.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>
#include <vector>

namespace fermicorr {

enum class EntropyConvention {
  normalized,  ///< -sum mu log mu with mu = lambda / N
  raw,         ///< -sum lambda log lambda
};

inline EntropyConvention parse_entropy_convention(std::string_view text) {
  if (text == "normalized") return EntropyConvention::normalized;
  if (text == "raw") return EntropyConvention::raw;
  throw Error(ErrorKind::invalid_argument, "entropy convention must be 'normalized' or 'raw'");
}

inline std::string_view to_string(EntropyConvention convention) {
  return convention == EntropyConvention::normalized ? "normalized" : "raw";
}

struct SpectrumOptions {
  double tol = default_tol;                        ///< occupation validation window
  double zero_threshold = default_zero_threshold;  ///< "nonzero" natural-orbital occupation
};

struct CorrResult {
  double corr = 0.0;
  double overlap = 1.0;   ///< <psi, rho psi>, or the squared fidelity for mixed states
  double fidelity = 1.0;  ///< sqrt(overlap)
  RVector lambda;
  double entropy = 0.0;      ///< normalized convention
  double entropy_raw = 0.0;  ///< raw convention
  double degree = 1.0;
  LogBase base = LogBase::two;
  bool underflow = false;
};

/// Thrown when the overlap falls below 1e-300; carries the partial result
/// (flagged) so callers can still report it.
class OverlapUnderflow : public Error {
 public:
  explicit OverlapUnderflow(CorrResult partial)
      : Error(ErrorKind::numerical, "overlap underflow"), partial_(std::move(partial)) {}
  const CorrResult& partial() const noexcept { return partial_; }

 private:
  CorrResult partial_;
};

inline constexpr double overlap_floor = 1e-300;

// ---------------------------------------------------------------------------
// Spectral measures

inline double spectrum_entropy(const RVector& lambda, LogBase base, EntropyConvention convention) {
  const double total = convention == EntropyConvention::normalized ? lambda.sum() : 1.0;
  if (total <= 0.0) return 0.0;
  double s = 0.0;
  for (double l : lambda) {
    const double mu = l / total;
    if (mu > 0.0) s -= mu * log_in(mu, base);
  }
  return s;
}

inline double spectrum_degree(const RVector& lambda) {
  const double total = lambda.sum();
  if (total <= 0.0) return 1.0;
  return 1.0 / (lambda / total).squaredNorm();
}

namespace detail {

inline RVector occupation_spectrum(const OnePDM& gamma) {
  RVector values = Eigen::SelfAdjointEigenSolver<CMatrix>(gamma.gamma, Eigen::EigenvaluesOnly).eigenvalues();
  std::sort(values.begin(), values.end(), std::greater<>());
  return values.cwiseMax(0.0).cwiseMin(1.0);
}

}  // namespace detail

/// Shannon entropy of the occupation spectrum; 0 log 0 := 0.
inline double correlation_entropy(const OnePDM& gamma, LogBase base = LogBase::two,
                                  EntropyConvention convention = EntropyConvention::normalized) {
  return spectrum_entropy(detail::occupation_spectrum(gamma), base, convention);
}

/// Inverse participation ratio 1 / sum mu^2 of the normalized spectrum; a
/// Slater determinant scores exactly N.
inline double degree_of_correlation(const OnePDM& gamma) { return spectrum_degree(detail::occupation_spectrum(gamma)); }

// ---------------------------------------------------------------------------
// Pure states

namespace detail {

/// Neumaier-compensated sum, accumulated largest term first.
inline double compensated_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end(), std::greater<>());
  double sum = 0.0, compensation = 0.0;
  for (double t : terms) {
    const double next = sum + t;
    if (std::abs(sum) >= std::abs(t))
      compensation += (sum - next) + t;
    else
      compensation += (t - next) + sum;
    sum = next;
  }
  return sum + compensation;
}

inline CorrResult finish(double overlap, const RVector& lambda, LogBase base) {
  CorrResult result;
  result.base = base;
  result.lambda = lambda;
  result.overlap = overlap;
  result.fidelity = std::sqrt(std::max(overlap, 0.0));
  result.entropy = spectrum_entropy(lambda, base, EntropyConvention::normalized);
  result.entropy_raw = spectrum_entropy(lambda, base, EntropyConvention::raw);
  result.degree = spectrum_degree(lambda);
  if (!(overlap >= overlap_floor)) {
    result.underflow = true;
    result.corr = overlap > 0.0 ? -log_in(overlap, base) : std::numeric_limits<double>::infinity();
    throw OverlapUnderflow(result);
  }
  // Overlaps exceeding 1 by roundoff would give a tiny negative Corr.
  result.corr = std::max(0.0, -log_in(overlap, base));
  return result;
}

}  // namespace detail

/// sum_s p(s) |c(s)|^2 for amplitudes already expressed over natural-orbital
/// determinants with occupations `lambda`.
inline double quasifree_overlap(const CIWavefunction& rotated, const RVector& lambda) {
  const auto spec = QuasifreeSpec::diagonal(lambda);
  std::vector<double> terms;
  terms.reserve(rotated.size());
  for (const auto& [s, c] : rotated.amplitudes()) terms.push_back(occupation_probability(spec, s) * std::norm(c));
  return detail::compensated_sum(std::move(terms));
}

/// gamma -> natural orbitals -> natural-orbital CI amplitudes -> -log overlap.
inline CorrResult corr_pure(const CIWavefunction& psi, LogBase base = LogBase::two, const SpectrumOptions& opts = {}) {
  const auto basis = diagonalize(one_pdm(psi), opts.tol);
  const auto rotated = rotate_ci(psi, basis, opts.zero_threshold);
  return detail::finish(quasifree_overlap(rotated, basis.occupations), basis.occupations, base);
}

// ---------------------------------------------------------------------------
// Two-particle states

/// psi = sum_j sqrt(p_j) a+_{f_j} a+_{g_j} |vac> with {f_j, g_j} orthonormal.
struct SchmidtForm2e {
  struct Pair {
    CVector f;
    CVector g;
    double weight = 0.0;  ///< p_j
  };
  std::vector<Pair> pairs;

  RVector weights() const {
    RVector w(static_cast<Eigen::Index>(pairs.size()));
    for (std::size_t j = 0; j < pairs.size(); ++j) w[static_cast<Eigen::Index>(j)] = pairs[j].weight;
    return w;
  }

  CIWavefunction reconstruct(const OrbitalSpace& space) const {
    CIWavefunction out(space, 2);
    for (int p = 0; p < space.d; ++p)
      for (int q = p + 1; q < space.d; ++q) {
        Complex c{};
        for (const auto& pair : pairs) c += std::sqrt(pair.weight) * (pair.f[p] * pair.g[q] - pair.g[p] * pair.f[q]);
        if (std::abs(c) > 1e-15) out.set(Determinant::from_indices({p, q}), c);
      }
    return out;
  }
};

/// Canonical form of the antisymmetric amplitude matrix A (A_pq = c({p,q}),
/// p < q) under unitary congruence. Extracts one 2x2 block at a time: the top
/// eigenvector f of A A^dagger has eigenvalue sigma^2 and partner
/// g = -A conj(f) / sigma; the block sigma (f g^T - g f^T) is then removed.
inline SchmidtForm2e schmidt_2e(const CIWavefunction& psi, double threshold = 1e-12) {
  if (psi.particles() != 2)
    throw Error(ErrorKind::invalid_argument, "Schmidt form requires exactly 2 particles, got " +
                                                 std::to_string(psi.particles()));
  const int d = psi.dim();
  CMatrix a = CMatrix::Zero(d, d);
  for (const auto& [det, c] : psi.amplitudes()) {
    const auto idx = det.indices();
    a(idx[0], idx[1]) = c;
    a(idx[1], idx[0]) = -c;
  }

  SchmidtForm2e form;
  for (int block = 0; block < d / 2; ++block) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(a * a.adjoint());
    const double top = solver.eigenvalues()[d - 1];
    if (top <= threshold * threshold) break;
    const double sigma = std::sqrt(top);
    CVector f = solver.eigenvectors().col(d - 1);
    CVector g = -(a * f.conjugate()) / sigma;
    g.normalize();
    a -= sigma * (f * g.transpose() - g * f.transpose());
    form.pairs.push_back({std::move(f), std::move(g), top});
  }
  std::stable_sort(form.pairs.begin(), form.pairs.end(),
                   [](const auto& x, const auto& y) { return x.weight > y.weight; });
  return form;
}

/// -log sum_i p_i (p_i prod_{j != i} (1 - p_j))^2 from the Schmidt weights.
inline double two_particle_overlap(const RVector& weights) {
  std::vector<double> terms;
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    double inner = weights[i];
    for (Eigen::Index j = 0; j < weights.size(); ++j)
      if (j != i) inner *= 1.0 - weights[j];
    terms.push_back(weights[i] * inner * inner);
  }
  return detail::compensated_sum(std::move(terms));
}

inline CorrResult corr_two_particle(const CIWavefunction& psi, LogBase base = LogBase::two) {
  const auto form = schmidt_2e(psi);
  const RVector weights = form.weights();
  RVector lambda = RVector::Zero(psi.dim());
  for (Eigen::Index j = 0; j < weights.size(); ++j) lambda[2 * j] = lambda[2 * j + 1] = weights[j];
  return detail::finish(two_particle_overlap(weights), lambda, base);
}

// ---------------------------------------------------------------------------
// Mixed states

/// Convex combination of fixed-particle-number pure states over one orbital
/// space; no coherences between components are represented.
class MixedState {
 public:
  struct Component {
    double weight;
    CIWavefunction psi;
  };

  explicit MixedState(std::vector<Component> components) : components_(std::move(components)) {
    if (components_.empty()) throw Error(ErrorKind::invalid_argument, "mixed state has no components");
    double total = 0.0;
    for (const auto& c : components_) {
      if (!(c.weight > 0.0)) throw Error(ErrorKind::invalid_argument, "mixture weights must be positive");
      if (!(c.psi.space() == components_.front().psi.space()))
        throw Error(ErrorKind::invalid_argument, "mixture components live in different orbital spaces");
      if (std::abs(c.psi.norm() - 1.0) > 1e-10)
        throw Error(ErrorKind::invalid_argument, "mixture component is not normalized");
      total += c.weight;
    }
    if (std::abs(total - 1.0) > 1e-12) throw Error(ErrorKind::invalid_argument, "mixture weights do not sum to 1");
  }

  const std::vector<Component>& components() const noexcept { return components_; }
  int dim() const noexcept { return components_.front().psi.dim(); }

 private:
  std::vector<Component> components_;
};

/// gamma(p, q) = Tr(D a+_q a_p) = sum_k w_k gamma_k(p, q).
inline OnePDM one_pdm(const MixedState& state) {
  OnePDM out{CMatrix::Zero(state.dim(), state.dim())};
  for (const auto& c : state.components()) out.gamma += c.weight * one_pdm(c.psi).gamma;
  return out;
}

inline constexpr int mixed_cap = 14;

/// Fidelity Tr sqrt(D^{1/2} rho D^{1/2}) accumulated over particle-number
/// sectors (both operators conserve particle number), in the natural-orbital
/// basis where rho is diagonal.
inline CorrResult corr_mixed(const MixedState& state, LogBase base = LogBase::two, const SpectrumOptions& opts = {}) {
  const int d = state.dim();
  require_scale(d, mixed_cap);
  const auto basis = diagonalize(one_pdm(state), opts.tol);
  const QuasifreeSpec spec(basis);
  const int k = basis.occupied_count(opts.zero_threshold);

  std::vector<int> sectors;
  for (const auto& c : state.components()) sectors.push_back(c.psi.particles());
  std::sort(sectors.begin(), sectors.end());
  sectors.erase(std::unique(sectors.begin(), sectors.end()), sectors.end());

  std::vector<double> fidelity_terms;
  for (int n : sectors) {
    const auto targets = k == 0 ? std::vector<Determinant>(n == 0 ? 1 : 0) : enumerate_basis(OrbitalSpace(k), n);
    if (targets.empty()) throw Error(ErrorKind::numerical, "component support outside the natural-orbital span");
    std::unordered_map<Determinant, Eigen::Index, DeterminantHash> index;
    for (std::size_t i = 0; i < targets.size(); ++i) index.emplace(targets[i], static_cast<Eigen::Index>(i));
    const auto dim = static_cast<Eigen::Index>(targets.size());

    // D = B B^dagger, so the fidelity is the trace norm of rho^{1/2} B.
    RVector sqrt_p(dim);
    for (Eigen::Index i = 0; i < dim; ++i)
      sqrt_p[i] = std::sqrt(occupation_probability(spec, targets[static_cast<std::size_t>(i)]));
    std::vector<CVector> columns;
    for (const auto& c : state.components()) {
      if (c.psi.particles() != n) continue;
      CVector v = CVector::Zero(dim);
      const auto rotated = rotate_ci(c.psi, basis, opts.zero_threshold);
      for (const auto& [s, amp] : rotated.amplitudes()) v[index.at(s)] = std::sqrt(c.weight) * sqrt_p[index.at(s)] * amp;
      columns.push_back(std::move(v));
    }
    CMatrix m(dim, static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = columns[j];
    const Eigen::JacobiSVD<CMatrix> svd(m);
    for (double sigma : svd.singularValues()) fidelity_terms.push_back(sigma);
  }

  const double fidelity = std::min(detail::compensated_sum(std::move(fidelity_terms)), 1.0);
  CorrResult result = detail::finish(fidelity * fidelity, basis.occupations, base);
  result.fidelity = fidelity;
  return result;
}

}  // namespace fermicorr
