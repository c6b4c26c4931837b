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

// Brute-force reference implementations. Slow on purpose: they walk every
// vertex tuple or every graph and share no code with the closed forms they
// check.

#ifndef ERGOF_ORACLE_HPP
#define ERGOF_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/graph.hpp"
#include "ergof/pattern.hpp"
#include "ergof/power_theory.hpp"
#include "ergof/subgraph_stats.hpp"

namespace ergof {

inline constexpr int kOracleMaxGraphVertices = 10;
inline constexpr int kOracleMaxPatternVertices = 4;
inline constexpr int kOracleMaxExactVertices = 5;

namespace oracle_detail {

inline void check_limits(const SubgraphPattern& h, const SimpleGraph& g) {
  if (g.num_vertices() > kOracleMaxGraphVertices || h.num_vertices() > kOracleMaxPatternVertices) {
    throw UnsupportedSize("brute force limited to n(G) <= 10 and n(H) <= 4");
  }
}

/// Calls f(tuple) for every injective k-tuple over [n], by odometer over
/// all n^k tuples.
template <typename F>
void for_each_injective_tuple(int n, int k, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  for (;;) {
    bool injective = true;
    for (int a = 0; a < k && injective; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (t[a] == t[b]) {
          injective = false;
          break;
        }
      }
    }
    if (injective) f(t);
    int pos = k - 1;
    while (pos >= 0 && ++t[pos] == n) t[pos--] = 0;
    if (pos < 0) return;
  }
}

/// Automorphisms of h, counted independently of pattern.hpp by checking
/// that the permutation preserves adjacency in both directions.
inline std::int64_t count_automorphisms(const SubgraphPattern& h) {
  std::int64_t count = 0;
  const int k = h.num_vertices();
  for_each_injective_tuple(k, k, [&](const std::vector<int>& t) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (a != b && h.has_edge(a, b) != h.has_edge(t[a], t[b])) return;
      }
    }
    ++count;
  });
  return count;
}

}  // namespace oracle_detail

inline std::int64_t brute_force_raw_count(const SubgraphPattern& h, const SimpleGraph& g) {
  oracle_detail::check_limits(h, g);
  std::int64_t maps = 0;
  oracle_detail::for_each_injective_tuple(g.num_vertices(), h.num_vertices(),
                                          [&](const std::vector<int>& t) {
                                            for (const auto& [a, b] : h.edges()) {
                                              if (!g.has_edge(t[a], t[b])) return;
                                            }
                                            ++maps;
                                          });
  return maps / oracle_detail::count_automorphisms(h);
}

inline double brute_force_centered_count(const SubgraphPattern& h, const SimpleGraph& g, double p) {
  oracle_detail::check_limits(h, g);
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("centering probability outside [0, 1]");
  double sum = 0.0;
  oracle_detail::for_each_injective_tuple(g.num_vertices(), h.num_vertices(),
                                          [&](const std::vector<int>& t) {
                                            double prod = 1.0;
                                            for (const auto& [a, b] : h.edges()) {
                                              prod *= (g.has_edge(t[a], t[b]) ? 1.0 : 0.0) - p;
                                            }
                                            sum += prod;
                                          });
  return sum / static_cast<double>(oracle_detail::count_automorphisms(h));
}

/// Graph on n vertices whose edge set is the bit pattern `code` over pairs
/// in upper-triangle order.
inline SimpleGraph graph_from_code(int n, std::uint64_t code) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if ((code >> pair_index(n, i, j)) & 1U) b.set_unchecked(i, j);
    }
  }
  return std::move(b).build();
}

using GraphFunctionalFn = std::function<double(const SimpleGraph&)>;

/// Exact mean and variance of f under G(n, p), summing over all
/// 2^binom(n,2) graphs with their Bernoulli weights.
inline MomentPair exact_null_moments(const GraphFunctionalFn& f, int n, double p) {
  if (n < 1 || n > kOracleMaxExactVertices) throw UnsupportedSize("exact moments limited to n <= 5");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("p must lie in [0, 1]");
  const int pairs = static_cast<int>(pair_count(n));
  double m1 = 0.0;
  double m2 = 0.0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const int m = std::popcount(code);
    const double w = std::pow(p, m) * std::pow(1.0 - p, pairs - m);
    const double x = f(graph_from_code(n, code));
    m1 += w * x;
    m2 += w * x * x;
  }
  return {m1, std::max(0.0, m2 - m1 * m1)};
}

struct OracleCheck {
  std::string name;
  std::string convention;
  bool passed = false;
  std::string detail;
};

struct ArbitrationOptions {
  CopyConvention copy_convention = CopyConvention::kUnlabeledCopies;
  EmptyTripleForm empty_triple_form = EmptyTripleForm::kCorrected;
};

/// The checks behind `gof verify`.
inline std::vector<OracleCheck> run_arbitration_checks(const ArbitrationOptions& opt = {}) {
  std::vector<OracleCheck> out;
  const auto fmt = [](double x) {
    std::ostringstream s;
    s.precision(12);
    s << x;
    return s.str();
  };
  const std::string copies = opt.copy_convention == CopyConvention::kUnlabeledCopies
                                 ? "Var S = (n)_k / |aut| * (pq)^m"
                                 : "Var S = |aut| * (n)_k * (pq)^m";
  const std::vector<SubgraphPattern> shapes = {patterns::edge(), patterns::two_star(),
                                               patterns::triangle(), patterns::two_disjoint_edges()};

  // Closed-form counts against brute force on every graph with n <= 4.
  {
    bool ok = true;
    std::string first;
    for (int n = 1; n <= 4 && ok; ++n) {
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << pair_count(n)) && ok; ++code) {
        const SimpleGraph g = graph_from_code(n, code);
        for (const auto& h : shapes) {
          const double p = 0.3;
          if (raw_count(h, g) != brute_force_raw_count(h, g) ||
              std::abs(centered_count(h, g, p) - brute_force_centered_count(h, g, p)) > 1e-10) {
            ok = false;
            first = h.name() + " on n=" + std::to_string(n) + " code=" + std::to_string(code);
            break;
          }
        }
      }
    }
    out.push_back({"closed-form counts = enumeration (all graphs, n <= 4)", "unlabeled copies", ok,
                   ok ? "P2 P3 C3 H3 agree" : "mismatch: " + first});
  }

  // Null variance constant of S_n(H).
  for (const auto& h : {patterns::edge(), patterns::two_star(), patterns::triangle()}) {
    for (int n : {4, 5}) {
      for (double p : {0.3, 0.5}) {
        const auto exact =
            exact_null_moments([&](const SimpleGraph& g) { return brute_force_centered_count(h, g, p); }, n, p);
        const auto formula = sn_null_moments(h, n, p, opt.copy_convention);
        const bool ok = std::abs(exact.mean) <= 1e-10 && std::abs(exact.variance - formula.variance) <= 1e-10;
        out.push_back({"Var S_n(" + h.name() + ") n=" + std::to_string(n) + " p=" + fmt(p), copies, ok,
                       "exact " + fmt(exact.variance) + " formula " + fmt(formula.variance)});
      }
    }
  }

  for (int n : {4, 5}) {
    for (double p : {0.3, 0.5}) {
      const auto exact = exact_null_moments([](const SimpleGraph& g) { return degree_variance(g); }, n, p);
      const auto formula = vn_null_moments(n, p);
      const bool ok = std::abs(exact.mean - formula.mean) <= 1e-10 &&
                      std::abs(exact.variance - formula.variance) <= 1e-10;
      out.push_back({"E/Var V_n n=" + std::to_string(n) + " p=" + fmt(p), "degree variance with 1/n", ok,
                     "exact (" + fmt(exact.mean) + ", " + fmt(exact.variance) + ") formula (" +
                         fmt(formula.mean) + ", " + fmt(formula.variance) + ")"});
    }
  }

  for (int n : {4, 5}) {
    for (double p : {0.3, 0.5}) {
      const auto exact = exact_null_moments(
          [](const SimpleGraph& g) { return static_cast<double>(brute_force_raw_count(patterns::triangle(), g)); },
          n, p);
      const auto formula = tn_c3_null_moments(n, p);
      const bool ok = std::abs(exact.mean - formula.mean) <= 1e-10 &&
                      std::abs(exact.variance - formula.variance) <= 1e-10;
      out.push_back({"E/Var T_n(C3) n=" + std::to_string(n) + " p=" + fmt(p), "E T = binom(n,3) p^3", ok,
                     "exact (" + fmt(exact.mean) + ", " + fmt(exact.variance) + ") formula (" +
                         fmt(formula.mean) + ", " + fmt(formula.variance) + ")"});
    }
  }

  // Per-graph triangle identity, every graph on 4 vertices.
  {
    bool ok = true;
    double worst = 0.0;
    for (double p : {0.0, 0.3, 0.5, 1.0}) {
      for (std::uint64_t code = 0; code < 64; ++code) {
        const SimpleGraph g = graph_from_code(4, code);
        const double lhs = static_cast<double>(brute_force_raw_count(patterns::triangle(), g));
        const double rhs = brute_force_centered_count(patterns::triangle(), g, p) +
                           p * brute_force_centered_count(patterns::two_star(), g, p) +
                           p * p * 2.0 * brute_force_centered_count(patterns::edge(), g, p) +
                           binom(4, 3) * p * p * p;
        worst = std::max(worst, std::abs(lhs - rhs));
      }
    }
    ok = worst <= 1e-10;
    out.push_back({"T_n(C3) = S(C3) + p S(P3) + p^2 (n-2) S(P2) + binom(n,3) p^3 (all n=4 graphs)",
                   "constant term binom(n,3) p^3", ok, "max residual " + fmt(worst)});
  }

  {
    const auto c = expected_induced_counts_sbm(SbmSpec2{10, 0.5, 0.1}, opt.empty_triple_form);
    const bool ok = std::abs(c.sum() - binom(10, 3)) <= 1e-9;
    out.push_back({"induced 3-vertex expectations sum to binom(n,3) (SBM n=10)",
                   opt.empty_triple_form == EmptyTripleForm::kCorrected ? "E3 term (1 - p_intra)^3"
                                                                        : "E3 term 1 - p_intra^3",
                   ok, "sum " + fmt(c.sum()) + " vs " + fmt(binom(10, 3))});
  }

  {
    const SimpleGraph k10 = SimpleGraph::complete(10);
    bool ok = true;
    std::string detail;
    for (const auto& h : shapes) {
      const auto brute = brute_force_raw_count(h, k10);
      ok = ok && brute == copies_count(h, 10);
      detail += h.name() + "=" + std::to_string(brute) + " ";
    }
    out.push_back({"copies_count(H, 10) = copies of H in K_10", "unlabeled copies", ok, detail});
  }
  return out;
}

}  // namespace ergof

#endif  // ERGOF_ORACLE_HPP
