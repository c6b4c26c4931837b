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

// Closed-form expectations under a two-block SBM with equal block sizes.
//
// Every 3-subset of vertices induces one of four graphs: triangle (C3),
// two-star (P3), single edge (D3) or nothing (E3). Expected induced counts
// are exact polynomials in (p_intra, p_inter); centered counts S_n(C3) and
// S_n(P3) at p_mean are fixed linear combinations of them.

#ifndef ERGOF_POWER_THEORY_HPP
#define ERGOF_POWER_THEORY_HPP

#include <array>
#include <cmath>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/subgraph_stats.hpp"

namespace ergof {

/// Two equal blocks of n/2 vertices.
struct SbmSpec2 {
  int n = 0;
  double p_intra = 0.0;
  double p_inter = 0.0;

  double epsilon() const noexcept { return p_intra - p_inter; }

  /// Exact mixture mean over all binom(n, 2) pairs.
  double p_mean() const noexcept {
    const double h = n / 2;
    return (2.0 * binom(n / 2, 2) * p_intra + h * h * p_inter) / binom(n, 2);
  }

  void validate() const {
    if (n < 2 || n % 2 != 0) throw InvalidInput("two-block SBM needs an even n >= 2");
    if (!(p_intra >= 0.0 && p_intra <= 1.0 && p_inter >= 0.0 && p_inter <= 1.0)) {
      throw InvalidInput("block probabilities must lie in [0, 1]");
    }
    if (p_intra < p_inter) throw InvalidInput("p_intra must be at least p_inter");
  }

  /// Solves the exact mixture for (p_intra, p_inter) with gap epsilon.
  /// Empty when either probability leaves [0, 1].
  static std::optional<SbmSpec2> from_mean_and_gap(int n, double p_mean, double epsilon) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("two-block SBM needs an even n >= 2");
    if (epsilon < 0.0) throw InvalidInput("epsilon must be non-negative");
    const double h = n / 2;
    const double p_in = p_mean + epsilon * h * h / binom(n, 2);
    const double p_out = p_in - epsilon;
    if (!(p_in <= 1.0 && p_out >= 0.0)) return std::nullopt;
    return SbmSpec2{n, p_in, p_out};
  }

  /// Symmetric split p_mean -/+ epsilon / 2; the large-n parameterization.
  static std::optional<SbmSpec2> from_mean_and_gap_symmetric(int n, double p_mean, double epsilon) {
    if (n < 2 || n % 2 != 0) throw InvalidInput("two-block SBM needs an even n >= 2");
    const double p_in = p_mean + epsilon / 2.0;
    const double p_out = p_mean - epsilon / 2.0;
    if (!(p_in <= 1.0 && p_out >= 0.0)) return std::nullopt;
    return SbmSpec2{n, p_in, p_out};
  }
};

struct InducedCounts {
  double triangle = 0.0;      // C3
  double two_star = 0.0;      // P3
  double single_edge = 0.0;   // D3
  double empty = 0.0;         // E3

  double sum() const noexcept { return triangle + two_star + single_edge + empty; }
};

/// The all-within-block E3 term is (1 - p_intra)^3. The alternative form
/// (1 - p_intra^3) is available for comparison; it breaks the partition
/// identity.
enum class EmptyTripleForm { kCorrected, kLiteralMisprint };

inline InducedCounts expected_induced_counts_sbm(const SbmSpec2& s,
                                                 EmptyTripleForm form = EmptyTripleForm::kCorrected) {
  s.validate();
  if (s.n < 6) throw InvalidInput("induced-count expectations need n >= 6");
  const double a = s.p_intra;
  const double b = s.p_inter;
  const double n = s.n;
  const double within = 2.0 * binom(s.n / 2, 3);           // triples inside one block
  const double mixed = binom(s.n, 3) - within;             // two in one block, one in the other
  const double pairs = binom(s.n / 2, 2);
  InducedCounts c;
  c.triangle = within * a * a * a + mixed * a * b * b;
  c.two_star = 3.0 * within * a * a * (1.0 - a) + 2.0 * n * pairs * a * b * (1.0 - b) +
               n * pairs * b * b * (1.0 - a);
  c.single_edge = 3.0 * within * a * (1.0 - a) * (1.0 - a) +
                  2.0 * n * pairs * (1.0 - a) * b * (1.0 - b) + n * pairs * a * (1.0 - b) * (1.0 - b);
  const double cube = form == EmptyTripleForm::kCorrected ? (1.0 - a) * (1.0 - a) * (1.0 - a)
                                                          : 1.0 - a * a * a;
  c.empty = within * cube + mixed * (1.0 - a) * (1.0 - b) * (1.0 - b);
  return c;
}

/// E S_n(C3) at centering p_mean.
inline double expected_sn_c3_sbm(const SbmSpec2& s) {
  s.validate();
  if (s.p_intra == s.p_inter) return 0.0;
  const auto c = expected_induced_counts_sbm(s);
  const double p = s.p_mean();
  const double q = 1.0 - p;
  return q * q * q * c.triangle - q * q * p * c.two_star + q * p * p * c.single_edge -
         p * p * p * c.empty;
}

/// E S_n(P3) at centering p_mean.
inline double expected_sn_p3_sbm(const SbmSpec2& s) {
  s.validate();
  if (s.p_intra == s.p_inter) return 0.0;
  const auto c = expected_induced_counts_sbm(s);
  const double p = s.p_mean();
  const double q = 1.0 - p;
  return 3.0 * q * q * c.triangle + (q * q - 2.0 * p * q) * c.two_star +
         (p * p - 2.0 * p * q) * c.single_edge + 3.0 * p * p * c.empty;
}

/// E_ER T_n(C3) - E_SBM T_n(C3), both at the same mean connectivity.
inline double raw_triangle_difference(const SbmSpec2& s) {
  const double p = s.p_mean();
  return binom(s.n, 3) * p * p * p - expected_induced_counts_sbm(s).triangle;
}

/// Large-n form of raw_triangle_difference: binom(n/2, 3) (p_inter - p_intra)^3.
inline double raw_triangle_difference_asymptote(const SbmSpec2& s) {
  const double d = s.p_inter - s.p_intra;
  return binom(s.n / 2, 3) * d * d * d;
}

struct SensitivityRow {
  double epsilon = 0.0;
  double abs_e_sn_c3 = 0.0;
  double abs_e_sn_p3 = 0.0;
  bool feasible = false;
};

inline std::vector<SensitivityRow> sensitivity_curve(int n, double p_mean,
                                                     std::span<const double> eps_grid) {
  if (!(p_mean > 0.0 && p_mean < 1.0)) throw InvalidInput("p_mean must lie in (0, 1)");
  std::vector<SensitivityRow> rows;
  rows.reserve(eps_grid.size());
  for (double eps : eps_grid) {
    SensitivityRow r;
    r.epsilon = eps;
    if (const auto s = SbmSpec2::from_mean_and_gap(n, p_mean, eps)) {
      r.feasible = true;
      r.abs_e_sn_c3 = std::abs(expected_sn_c3_sbm(*s));
      r.abs_e_sn_p3 = std::abs(expected_sn_p3_sbm(*s));
    }
    rows.push_back(r);
  }
  return rows;
}

/// start:stop:step, inclusive of stop up to rounding.
inline std::vector<double> parse_grid(const std::string& text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
  if (c2 == std::string::npos) throw InvalidInput("grid must look like start:stop:step");
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  try {
    std::size_t used = 0;
    start = std::stod(text.substr(0, c1), &used);
    if (used != c1) throw InvalidInput("bad grid start");
    stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1), &used);
    if (used != c2 - c1 - 1) throw InvalidInput("bad grid stop");
    step = std::stod(text.substr(c2 + 1), &used);
    if (used != text.size() - c2 - 1) throw InvalidInput("bad grid step");
  } catch (const std::logic_error&) {
    throw InvalidInput("grid must look like start:stop:step");
  }
  if (!(step > 0.0) || stop < start) throw InvalidInput("grid needs step > 0 and stop >= start");
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
  for (long i = 0; i <= count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

inline void write_sensitivity_csv(std::ostream& out, std::span<const SensitivityRow> rows) {
  out << "epsilon,abs_E_SnC3,abs_E_SnP3,feasible\n";
  const auto old = out.precision(12);
  for (const auto& r : rows) {
    out << r.epsilon << ',' << r.abs_e_sn_c3 << ',' << r.abs_e_sn_p3 << ','
        << (r.feasible ? "true" : "false") << '\n';
  }
  out.precision(old);
}

struct SignCheckCell {
  int n = 0;
  double p_mean = 0.0;
  double epsilon = 0.0;
  double e_sn_c3 = 0.0;
  double e_sn_p3 = 0.0;
  bool passed = false;
};

struct AsymptoteCheck {
  int n = 0;
  double p_mean = 0.0;
  double epsilon = 0.0;
  double difference = 0.0;
  double asymptote = 0.0;
  double ratio = 0.0;
  bool passed = false;
};

struct SignCheckReport {
  std::vector<SignCheckCell> cells;
  std::vector<AsymptoteCheck> asymptote;
  int infeasible = 0;

  bool all_passed() const noexcept {
    for (const auto& c : cells) {
      if (!c.passed) return false;
    }
    for (const auto& a : asymptote) {
      if (!a.passed) return false;
    }
    return true;
  }
};

inline constexpr int kSignCheckMinN = 16;
inline constexpr double kAsymptoteRelTol = 0.15;

/// Checks E S_n(C3) > 0 and E S_n(P3) < 0 on every feasible cell with
/// n >= 16 and epsilon > 0, and compares the raw-triangle difference with
/// its asymptote on `asymptote_cells` (n, p_mean, epsilon).
inline SignCheckReport expected_sign_checks(
    std::span<const int> n_grid, std::span<const double> p_mean_grid, std::span<const double> eps_grid,
    std::span<const std::array<double, 3>> asymptote_cells = {}) {
  SignCheckReport rep;
  for (int n : n_grid) {
    if (n < kSignCheckMinN) continue;
    for (double p : p_mean_grid) {
      for (double eps : eps_grid) {
        if (!(eps > 0.0)) continue;
        const auto s = SbmSpec2::from_mean_and_gap(n, p, eps);
        if (!s) {
          ++rep.infeasible;
          continue;
        }
        SignCheckCell c{n, p, eps, expected_sn_c3_sbm(*s), expected_sn_p3_sbm(*s), false};
        c.passed = c.e_sn_c3 > 0.0 && c.e_sn_p3 < 0.0;
        rep.cells.push_back(c);
      }
    }
  }
  for (const auto& cell : asymptote_cells) {
    AsymptoteCheck a;
    a.n = static_cast<int>(cell[0]);
    a.p_mean = cell[1];
    a.epsilon = cell[2];
    const auto s = SbmSpec2::from_mean_and_gap(a.n, a.p_mean, a.epsilon);
    if (!s) throw InvalidInput("asymptote check cell is infeasible");
    a.difference = raw_triangle_difference(*s);
    a.asymptote = raw_triangle_difference_asymptote(*s);
    a.ratio = a.difference / a.asymptote;
    a.passed = std::abs(a.ratio - 1.0) <= kAsymptoteRelTol;
    rep.asymptote.push_back(a);
  }
  return rep;
}

}  // namespace ergof

#endif  // ERGOF_POWER_THEORY_HPP
