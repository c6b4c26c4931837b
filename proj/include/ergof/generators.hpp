// Copyright 2026 The ergof Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Samplers for the homogeneous null model G(n, p) and for heterogeneous
// independent-edge alternatives given by a per-pair probability matrix.
//
// The alternatives used in the power studies put a logit link on per-pair
// terms t_ij and choose the intercept a so that the average connection
// probability equals a prescribed p_mean:
//
//   p_ij = logistic(a + t_ij),   binom(n,2)^-1 * sum_{i<j} p_ij = p_mean.
//
// Heterogeneity 0 always short-circuits to the constant matrix p_mean.

#ifndef ERGOF_GENERATORS_HPP
#define ERGOF_GENERATORS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/graph.hpp"
#include "ergof/rng.hpp"

namespace ergof {

inline double logistic(double x) noexcept {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

inline double logit(double p) noexcept { return std::log(p / (1.0 - p)); }

/// Symmetric matrix of connection probabilities with zero diagonal, stored as
/// the packed strict upper triangle (row-major, see pair_index).
class ProbabilityMatrix {
 public:
  ProbabilityMatrix(int n, std::vector<double> upper) : n_(n), upper_(std::move(upper)) {
    if (n < 1 || n > kMaxVertices) throw InvalidInput("probability matrix size out of range");
    if (static_cast<std::int64_t>(upper_.size()) != pair_count(n)) {
      throw InvalidInput("probability matrix needs binom(n,2) entries");
    }
    for (double p : upper_) {
      if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("connection probability outside [0, 1]");
    }
  }

  static ProbabilityMatrix constant(int n, double p) {
    return ProbabilityMatrix(n, std::vector<double>(static_cast<std::size_t>(pair_count(n)), p));
  }

  int size() const noexcept { return n_; }

  double operator()(int i, int j) const noexcept {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return upper_[static_cast<std::size_t>(pair_index(n_, i, j))];
  }

  std::span<const double> upper() const noexcept { return upper_; }

  /// binom(n,2)^-1 * sum_{i<j} p_ij; 0 for n = 1.
  double mean_connectivity() const noexcept {
    if (upper_.empty()) return 0.0;
    double s = 0.0;
    for (double p : upper_) s += p;
    return s / static_cast<double>(upper_.size());
  }

 private:
  int n_;
  std::vector<double> upper_;
};

inline void write_matrix_csv(std::ostream& out, const ProbabilityMatrix& probs) {
  const int n = probs.size();
  const auto old_precision = out.precision(17);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ',';
      out << probs(i, j);
    }
    out << '\n';
  }
  out.precision(old_precision);
}

/// G(n, p). Edge {i, j} uses counter pair_index(n, i, j) of the stream.
inline SimpleGraph sample_er(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability outside [0, 1]");
  GraphBuilder b(n);
  const CounterStream stream(seed);
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (stream.bernoulli(k, p)) b.set_unchecked(i, j);
    }
  }
  return std::move(b).build();
}

/// Independent edges with P(A_ij = 1) = probs(i, j). With a constant matrix
/// this reproduces sample_er(n, p, seed) exactly.
inline SimpleGraph sample_her(const ProbabilityMatrix& probs, std::uint64_t seed) {
  const int n = probs.size();
  GraphBuilder b(n);
  const CounterStream stream(seed);
  const auto upper = probs.upper();
  std::uint64_t k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (stream.bernoulli(k, upper[k])) b.set_unchecked(i, j);
    }
  }
  return std::move(b).build();
}

inline constexpr double kCalibrationTolerance = 1e-10;

/// Intercept a with |p_mean - mean_k logistic(a + link_terms[k])| <= 1e-10.
/// The mean is strictly increasing in a, so this bisects on [-50, 50].
inline double calibrate_offset(std::span<const double> link_terms, double p_mean) {
  if (!(p_mean > 0.0 && p_mean < 1.0)) throw InvalidInput("p_mean must lie in (0, 1)");
  if (link_terms.empty()) throw InvalidInput("calibration needs at least one pair");
  const auto residual = [&](double a) {
    double s = 0.0;
    for (double t : link_terms) s += logistic(a + t);
    return s / static_cast<double>(link_terms.size()) - p_mean;
  };
  double lo = -50.0;
  double hi = 50.0;
  if (residual(lo) > 0.0 || residual(hi) < 0.0) {
    throw CalibrationFailure("target mean connectivity not reachable for a in [-50, 50]");
  }
  double best = 0.5 * (lo + hi);
  double best_abs = std::abs(residual(best));
  for (int iter = 0; iter < 200 && hi - lo > 0.0; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double r = residual(mid);
    if (std::abs(r) < best_abs) {
      best = mid;
      best_abs = std::abs(r);
    }
    if (r == 0.0) break;
    (r < 0.0 ? lo : hi) = mid;
  }
  if (!(best_abs <= kCalibrationTolerance)) {
    throw CalibrationFailure("calibration residual " + std::to_string(best_abs) +
                             " exceeds tolerance");
  }
  return best;
}

namespace generators_detail {

/// p_ij = logistic(a + terms_ij) with a calibrated to p_mean.
inline ProbabilityMatrix logit_matrix(int n, const std::vector<double>& terms, double p_mean) {
  const double a = calibrate_offset(terms, p_mean);
  std::vector<double> upper(terms.size());
  for (std::size_t k = 0; k < terms.size(); ++k) upper[k] = logistic(a + terms[k]);
  return ProbabilityMatrix(n, std::move(upper));
}

inline std::vector<double> weight_product_terms(std::span<const double> w, double lambda) {
  const int n = static_cast<int>(w.size());
  const double scale = lambda * lambda;
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) terms.push_back(scale * w[i] * w[j]);
  }
  return terms;
}

inline void check_mean_and_heterogeneity(double p_mean, double heterogeneity) {
  if (!(p_mean > 0.0 && p_mean < 1.0)) throw InvalidInput("p_mean must lie in (0, 1)");
  if (!(heterogeneity >= 0.0)) throw InvalidInput("heterogeneity must be >= 0");
}

}  // namespace generators_detail

/// Two equal blocks with node weights -1/2 and +1/2 and link terms
/// lambda^2 * w_i * w_j.
inline ProbabilityMatrix build_sbm2_probs(int n, double p_mean, double lambda) {
  generators_detail::check_mean_and_heterogeneity(p_mean, lambda);
  if (n < 2 || n % 2 != 0) throw InvalidInput("two-block model needs an even n >= 2");
  if (lambda == 0.0) return ProbabilityMatrix::constant(n, p_mean);
  std::vector<double> w(static_cast<std::size_t>(n), -0.5);
  std::fill(w.begin() + n / 2, w.end(), 0.5);
  return generators_detail::logit_matrix(n, generators_detail::weight_product_terms(w, lambda),
                                         p_mean);
}

/// Block sizes (b1, b2, b3), each >= 2, summing to n, drawn uniformly over all
/// such compositions.
inline std::array<int, 3> sbm3_block_sizes(int n, std::uint64_t seed) {
  if (n < 6) throw InvalidInput("three-block model needs n >= 6");
  // Shift to c_k = b_k - 2 >= 0 with c1 + c2 + c3 = r. There are
  // binom(r + 2, 2) compositions; unrank by the value of c1.
  const std::uint64_t r = static_cast<std::uint64_t>(n - 6);
  const std::uint64_t total = (r + 2) * (r + 1) / 2;
  std::uint64_t rank = CounterStream(derive_seed(seed, {0x5b3b10c5ULL})).below(0, total);
  std::uint64_t c1 = 0;
  while (rank >= r - c1 + 1) {
    rank -= r - c1 + 1;
    ++c1;
  }
  const std::uint64_t c2 = rank;
  const std::uint64_t c3 = r - c1 - c2;
  return {static_cast<int>(c1 + 2), static_cast<int>(c2 + 2), static_cast<int>(c3 + 2)};
}

/// Three blocks of random sizes with node weights -1/2, 0 and 1/4.
inline ProbabilityMatrix build_sbm3_probs(int n, double p_mean, double lambda,
                                          std::uint64_t seed) {
  generators_detail::check_mean_and_heterogeneity(p_mean, lambda);
  const auto sizes = sbm3_block_sizes(n, seed);
  if (lambda == 0.0) return ProbabilityMatrix::constant(n, p_mean);
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(n));
  w.insert(w.end(), static_cast<std::size_t>(sizes[0]), -0.5);
  w.insert(w.end(), static_cast<std::size_t>(sizes[1]), 0.0);
  w.insert(w.end(), static_cast<std::size_t>(sizes[2]), 0.25);
  return generators_detail::logit_matrix(n, generators_detail::weight_product_terms(w, lambda),
                                         p_mean);
}

/// Bivariate standard-normal covariate per vertex.
inline std::vector<std::array<double, 2>> draw_covariates(int n, std::uint64_t seed) {
  const CounterStream stream(derive_seed(seed, {0xc0a7a1a7eULL}));
  std::vector<std::array<double, 2>> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = {stream.normal(2 * static_cast<std::uint64_t>(i)),
                                      stream.normal(2 * static_cast<std::uint64_t>(i) + 1)};
  }
  return x;
}

/// Link terms -sigma2 * (|x_i1 - x_j1| + |x_i2 - x_j2|) for the given
/// covariates.
inline ProbabilityMatrix covariate_probs(std::span<const std::array<double, 2>> x, double p_mean,
                                         double sigma2) {
  generators_detail::check_mean_and_heterogeneity(p_mean, sigma2);
  const int n = static_cast<int>(x.size());
  if (sigma2 == 0.0) return ProbabilityMatrix::constant(n, p_mean);
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(pair_count(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      terms.push_back(-sigma2 * (std::abs(x[i][0] - x[j][0]) + std::abs(x[i][1] - x[j][1])));
    }
  }
  return generators_detail::logit_matrix(n, terms, p_mean);
}

inline ProbabilityMatrix build_covariate_probs(int n, double p_mean, double sigma2,
                                               std::uint64_t seed) {
  if (n < 1) throw InvalidInput("covariate model needs n >= 1");
  const auto x = draw_covariates(n, seed);
  return covariate_probs(x, p_mean, sigma2);
}

// ---------------------------------------------------------------------------
// Scenario configuration

enum class ModelFamily { kER, kSBM2, kSBM3, kCovariate };

inline std::string to_string(ModelFamily f) {
  switch (f) {
    case ModelFamily::kER:
      return "ER";
    case ModelFamily::kSBM2:
      return "SBM2";
    case ModelFamily::kSBM3:
      return "SBM3";
    case ModelFamily::kCovariate:
      return "COVARIATE";
  }
  return "?";
}

inline ModelFamily parse_family(const std::string& s) {
  if (s == "er" || s == "ER") return ModelFamily::kER;
  if (s == "sbm2" || s == "SBM2") return ModelFamily::kSBM2;
  if (s == "sbm3" || s == "SBM3") return ModelFamily::kSBM3;
  if (s == "covariate" || s == "COVARIATE") return ModelFamily::kCovariate;
  throw InvalidInput("unknown model family '" + s + "'");
}

/// One cell of a simulation design. `heterogeneity` is lambda for the block
/// models, sigma^2 for the covariate model and ignored for ER.
struct ScenarioConfig {
  ModelFamily family = ModelFamily::kER;
  int n = 16;
  double p_mean = 0.25;
  double heterogeneity = 0.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1 || n > kMaxVertices) throw InvalidInput("n out of range");
    if (!(p_mean > 0.0 && p_mean < 1.0)) throw InvalidInput("p_mean must lie in (0, 1)");
    if (!(heterogeneity >= 0.0)) throw InvalidInput("heterogeneity must be >= 0");
    if (family == ModelFamily::kSBM2 && n % 2 != 0) throw InvalidInput("sbm2 needs even n");
    if (family == ModelFamily::kSBM3 && n < 6) throw InvalidInput("sbm3 needs n >= 6");
  }

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Probability matrix for `config`; blocks and covariates are drawn from
/// `seed`, not from config.seed.
inline ProbabilityMatrix build_probabilities(const ScenarioConfig& config, std::uint64_t seed) {
  config.validate();
  switch (config.family) {
    case ModelFamily::kER:
      return ProbabilityMatrix::constant(config.n, config.p_mean);
    case ModelFamily::kSBM2:
      return build_sbm2_probs(config.n, config.p_mean, config.heterogeneity);
    case ModelFamily::kSBM3:
      return build_sbm3_probs(config.n, config.p_mean, config.heterogeneity, seed);
    case ModelFamily::kCovariate:
      return build_covariate_probs(config.n, config.p_mean, config.heterogeneity, seed);
  }
  throw InvalidInput("unknown model family");
}

/// Draws one graph for `config` using config.seed.
inline SimpleGraph sample_scenario(const ScenarioConfig& config) {
  const std::uint64_t model_seed = derive_seed(config.seed, {1});
  const std::uint64_t edge_seed = derive_seed(config.seed, {2});
  if (config.family == ModelFamily::kER) {
    config.validate();
    return sample_er(config.n, config.p_mean, edge_seed);
  }
  return sample_her(build_probabilities(config, model_seed), edge_seed);
}

}  // namespace ergof

#endif  // ERGOF_GENERATORS_HPP
