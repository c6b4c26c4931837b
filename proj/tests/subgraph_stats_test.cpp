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

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ergof/generators.hpp"
#include "ergof/oracle.hpp"
#include "ergof/pattern.hpp"
#include "ergof/stats.hpp"
#include "ergof/subgraph_stats.hpp"

namespace ergof {
namespace {

using patterns::edge;
using patterns::triangle;
using patterns::two_disjoint_edges;
using patterns::two_star;

SimpleGraph Star4() { return SimpleGraph::from_edges(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}); }
SimpleGraph Path3() { return SimpleGraph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}}); }
SimpleGraph Cycle5() {
  return SimpleGraph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

std::vector<SubgraphPattern> Builtins() { return {edge(), two_star(), triangle(), two_disjoint_edges()}; }

// Random graphs with sizes and densities spread over the supported range.
struct RandomCase {
  SimpleGraph g;
  double p;
};

RandomCase DrawCase(std::mt19937_64& rng, int n_min, int n_max) {
  std::uniform_int_distribution<int> n_dist(n_min, n_max);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int n = n_dist(rng);
  const SimpleGraph g = sample_er(n, u(rng), rng());
  return {g, u(rng)};
}

TEST(PatternTest, AutomorphismCounts) {
  EXPECT_EQ(automorphism_count(triangle()), 6);
  EXPECT_EQ(automorphism_count(two_star()), 2);
  EXPECT_EQ(automorphism_count(edge()), 2);
  EXPECT_EQ(automorphism_count(two_disjoint_edges()), 8);
  const SubgraphPattern k4({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(automorphism_count(k4), 24);
}

TEST(PatternTest, CopiesInCompleteGraph) {
  EXPECT_EQ(copies_count(triangle(), 10), 120);
  EXPECT_EQ(copies_count(two_star(), 10), 360);
  EXPECT_EQ(copies_count(edge(), 10), 45);
  EXPECT_EQ(copies_count(two_disjoint_edges(), 10), 630);
  for (const auto& h : Builtins()) {
    EXPECT_EQ(copies_count(h, 10), brute_force_raw_count(h, SimpleGraph::complete(10))) << h.name();
  }
}

TEST(PatternTest, RejectsIsolatedVerticesAndOversize) {
  EXPECT_THROW(SubgraphPattern({{0, 2}}, "gap"), InvalidInput);
  EXPECT_TRUE(patterns::empty_on_three().has_isolated_vertices());
  EXPECT_THROW(raw_count(patterns::single_edge_on_three(), Star4()), InvalidInput);
  std::vector<Edge> long_path;
  for (int i = 0; i < 8; ++i) long_path.push_back({i, i + 1});
  EXPECT_THROW(automorphism_count(SubgraphPattern(long_path, "P9")), UnsupportedSize);
}

TEST(RawCountTest, SmallGraphs) {
  EXPECT_EQ(raw_count(triangle(), SimpleGraph::complete(4)), 4);
  EXPECT_EQ(raw_count(two_star(), Star4()), 3);
  EXPECT_EQ(raw_count(two_star(), SimpleGraph::complete(3)), 3);
  EXPECT_EQ(raw_count(two_star(), Cycle5()), 5);
  EXPECT_EQ(raw_count(two_disjoint_edges(), SimpleGraph::complete(4)), 3);
  EXPECT_EQ(raw_count(two_disjoint_edges(), Cycle5()), 5);
  EXPECT_EQ(raw_count(triangle(), Cycle5()), 0);
}

TEST(CenteredCountTest, SmallGraphs) {
  EXPECT_DOUBLE_EQ(centered_count(edge(), SimpleGraph::complete(3), 0.5), 1.5);
  EXPECT_DOUBLE_EQ(centered_count(triangle(), SimpleGraph(4), 0.5), -0.5);
  EXPECT_NEAR(centered_count(triangle(), Cycle5(), 0.5),
              brute_force_centered_count(triangle(), Cycle5(), 0.5), 1e-12);
}

TEST(CenteredCountTest, EstimatedCenteringKillsEdgeTerm) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 100; ++k) {
    const SimpleGraph g = DrawCase(rng, 2, 80).g;
    EXPECT_EQ(centered_count_estimated(edge(), g), 0.0);
    EXPECT_NEAR(centered_count(edge(), g, mean_connectivity_hat(g)), 0.0, 1e-9);
  }
  EXPECT_EQ(centered_count_estimated(triangle(), SimpleGraph::complete(4)), 0.0);
  EXPECT_NEAR(centered_count_estimated(triangle(), Cycle5()),
              brute_force_centered_count(triangle(), Cycle5(), 0.5), 1e-12);
}

TEST(CenteredCountTest, ClosedFormsMatchEnumeration) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 500; ++k) {
    const auto [g, p] = DrawCase(rng, 4, 10);
    for (const auto& h : Builtins()) {
      EXPECT_EQ(raw_count(h, g), brute_force_raw_count(h, g)) << h.name();
      EXPECT_NEAR(centered_count(h, g, p), brute_force_centered_count(h, g, p), 1e-10) << h.name();
    }
  }
}

TEST(CenteredCountTest, GenericEnumerationMatchesClosedForms) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const auto [g, p] = DrawCase(rng, 4, 20);
    for (const auto& h : Builtins()) {
      EXPECT_EQ(stats_detail::generic_raw_count(h, g), raw_count(h, g)) << h.name();
      EXPECT_NEAR(stats_detail::generic_centered_count(h, g, p), centered_count(h, g, p), 1e-8)
          << h.name();
    }
  }
}

TEST(CenteredCountTest, NonBuiltinPatternUsesEnumeration) {
  const SubgraphPattern c4({{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "C4");
  EXPECT_EQ(raw_count(c4, SimpleGraph::complete(5)), 15);
  const SimpleGraph g = sample_er(8, 0.5, 4);
  EXPECT_EQ(raw_count(c4, g), brute_force_raw_count(c4, g));
  EXPECT_NEAR(centered_count(c4, g, 0.4), brute_force_centered_count(c4, g, 0.4), 1e-10);
}

TEST(CenteredCountTest, DenseMatrixRouteAgrees) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 100; ++k) {
    const auto [g, p] = DrawCase(rng, 4, 60);
    for (const auto& h : Builtins()) {
      const double scale = 1.0 + std::abs(centered_count(h, g, p));
      EXPECT_NEAR(dense::centered_count(h, g, p), centered_count(h, g, p), 1e-9 * scale) << h.name();
    }
  }
}

TEST(CenteredCountTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const auto [g, p] = DrawCase(rng, 4, 50);
    std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SimpleGraph h = relabel(g, perm);
    for (const auto& pat : Builtins()) {
      EXPECT_EQ(raw_count(pat, h), raw_count(pat, g));
      EXPECT_NEAR(centered_count(pat, h, p), centered_count(pat, g, p), 1e-9);
    }
    EXPECT_NEAR(degree_variance(h), degree_variance(g), 1e-12);
  }
}

TEST(CenteredCountTest, TriangleIdentity) {
  std::mt19937_64 rng(6);
  for (int k = 0; k < 1000; ++k) {
    const auto [g, p] = DrawCase(rng, 3, 64);
    const std::int64_t n = g.num_vertices();
    const double rhs = centered_count(triangle(), g, p) + p * centered_count(two_star(), g, p) +
                       p * p * static_cast<double>(n - 2) * centered_count(edge(), g, p) +
                       binom(n, 3) * p * p * p;
    EXPECT_NEAR(static_cast<double>(raw_count(triangle(), g)), rhs, 1e-9 * (1.0 + binom(n, 3)));
  }
}

TEST(CenteredCountTest, PatternsAreUncorrelatedUnderNull) {
  // Distinct centered counts are orthogonal under G(n, p).
  const int n = 12;
  const double p = 0.4;
  const int draws = 40000;
  RunningMoments c3_p3;
  RunningMoments c3_p2;
  RunningMoments p3_p2;
  for (std::uint64_t s = 0; s < draws; ++s) {
    const auto sum = summarize(sample_er(n, p, derive_seed(6, {s})));
    const double a = centered_count(triangle(), sum, p);
    const double b = centered_count(two_star(), sum, p);
    const double c = centered_count(edge(), sum, p);
    c3_p3.add(a * b);
    c3_p2.add(a * c);
    p3_p2.add(b * c);
  }
  EXPECT_LT(std::abs(c3_p3.mean), 4 * c3_p3.standard_error());
  EXPECT_LT(std::abs(c3_p2.mean), 4 * c3_p2.standard_error());
  EXPECT_LT(std::abs(p3_p2.mean), 4 * p3_p2.standard_error());
}

TEST(NullMomentsTest, CenteredCountVariances) {
  EXPECT_DOUBLE_EQ(sn_null_moments(triangle(), 10, 0.5).variance, 1.875);
  EXPECT_NEAR(sn_null_moments(two_star(), 10, 0.3).variance, 15.876, 1e-12);
  EXPECT_DOUBLE_EQ(sn_null_moments(edge(), 10, 0.3).variance, 45 * 0.21);
  EXPECT_EQ(sn_null_moments(triangle(), 10, 0.5).mean, 0.0);
  const double literal =
      sn_null_moments(triangle(), 10, 0.5, CopyConvention::kLiteralAutTimesFalling).variance;
  EXPECT_DOUBLE_EQ(literal / 1.875, 36.0);
}

TEST(NullMomentsTest, TriangleVarianceByMonteCarlo) {
  RunningMoments s;
  for (std::uint64_t k = 0; k < 1000000; ++k) {
    s.add(centered_count(triangle(), summarize(sample_er(10, 0.5, derive_seed(10, {k}))), 0.5));
  }
  const double var = 1.875;
  // Var of the sample variance is about (mu4 - var^2) / N; mu4 is bounded by 10 var^2 here.
  EXPECT_NEAR(s.variance(), var, 3 * std::sqrt(10 * var * var / 1e6));
  EXPECT_NEAR(s.mean, 0.0, 3 * std::sqrt(var / 1e6));
}

TEST(NullMomentsTest, TwoStarVarianceByMonteCarlo) {
  RunningMoments s;
  for (std::uint64_t k = 0; k < 200000; ++k) {
    s.add(centered_count(two_star(), summarize(sample_er(10, 0.3, derive_seed(11, {k}))), 0.3));
  }
  EXPECT_NEAR(s.variance(), 15.876, 0.05 * 15.876);
}

TEST(NullMomentsTest, ExactEnumerationAgreesWithClosedForms) {
  for (int n : {4, 5}) {
    for (double p : {0.3, 0.5}) {
      for (const auto& h : {edge(), two_star(), triangle()}) {
        const auto exact = exact_null_moments(
            [&](const SimpleGraph& g) { return centered_count(h, g, p); }, n, p);
        EXPECT_NEAR(exact.mean, 0.0, 1e-10);
        EXPECT_NEAR(exact.variance, sn_null_moments(h, n, p).variance, 1e-10) << h.name();
      }
      const auto vn = exact_null_moments([](const SimpleGraph& g) { return degree_variance(g); }, n, p);
      EXPECT_NEAR(vn.mean, vn_null_moments(n, p).mean, 1e-10);
      EXPECT_NEAR(vn.variance, vn_null_moments(n, p).variance, 1e-10);
      const auto tc3 = exact_null_moments(
          [](const SimpleGraph& g) { return static_cast<double>(triangle_count(g)); }, n, p);
      EXPECT_NEAR(tc3.mean, tn_c3_null_moments(n, p).mean, 1e-10);
      EXPECT_NEAR(tc3.variance, tn_c3_null_moments(n, p).variance, 1e-10);
    }
  }
}

TEST(DegreeVarianceTest, SmallGraphs) {
  EXPECT_EQ(degree_variance(SimpleGraph::complete(7)), 0.0);
  EXPECT_EQ(degree_variance(SimpleGraph(7)), 0.0);
  EXPECT_DOUBLE_EQ(degree_variance(Star4()), 0.75);
  EXPECT_DOUBLE_EQ(degree_variance(Path3()), 2.0 / 9.0);
}

TEST(DegreeVarianceTest, SummaryAndGraphRoutesAgree) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const SimpleGraph g = DrawCase(rng, 1, 120).g;
    EXPECT_NEAR(degree_variance(summarize(g)), degree_variance(g), 1e-9);
  }
}

TEST(DegreeVarianceTest, NullMoments) {
  const auto m = vn_null_moments(100, 0.3);
  EXPECT_NEAR(m.mean, 99.0 * 98.0 * 0.21 / 100.0, 1e-12);
  EXPECT_NEAR(m.mean, 20.3742, 1e-10);
  EXPECT_NEAR(m.variance, 2.0 * 99 * 98 * 98 * 0.21 * (1 + 94 * 0.21) / 1e6, 1e-12);
  EXPECT_NEAR(m.variance, 8.2822, 5e-5);
  EXPECT_EQ(vn_null_moments(20, 0.0).variance, 0.0);
}

TEST(DegreeVarianceTest, NullMomentsByMonteCarlo) {
  RunningMoments s;
  const int draws = 100000;
  for (std::uint64_t k = 0; k < draws; ++k) s.add(degree_variance(summarize(sample_er(100, 0.3, derive_seed(12, {k})))));
  const auto m = vn_null_moments(100, 0.3);
  EXPECT_NEAR(s.mean, m.mean, 3 * std::sqrt(m.variance / draws));
  EXPECT_NEAR(s.variance(), m.variance, 0.03 * m.variance);
}

TEST(DegreeVarianceTest, DecompositionIdentity) {
  std::mt19937_64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    const auto [g, p] = DrawCase(rng, 4, 64);
    const auto d = vn_decomposition(g, p);
    EXPECT_NEAR(d.sum() + vn_null_moments(g.num_vertices(), p).mean, degree_variance(g), 1e-9);
  }
}

TEST(DegreeVarianceTest, DecompositionDegenerateCases) {
  const auto empty = vn_decomposition(SimpleGraph(9), 0.0);
  EXPECT_EQ(empty.edge_part, 0.0);
  EXPECT_EQ(empty.two_star_part, 0.0);
  EXPECT_EQ(empty.disjoint_part, 0.0);
  const auto full = vn_decomposition(SimpleGraph::complete(9), 1.0);
  EXPECT_EQ(full.edge_part, 0.0);
  EXPECT_EQ(full.two_star_part, 0.0);
  EXPECT_EQ(full.disjoint_part, 0.0);
  EXPECT_THROW(vn_decomposition(SimpleGraph(3), 0.5), UnsupportedSize);
}

TEST(RawTriangleTest, NullMoments) {
  EXPECT_EQ(tn_c3_null_moments(10, 0.0).mean, 0.0);
  EXPECT_EQ(tn_c3_null_moments(10, 0.0).variance, 0.0);
  EXPECT_EQ(tn_c3_null_moments(10, 1.0).mean, 120.0);
  EXPECT_EQ(tn_c3_null_moments(10, 1.0).variance, 0.0);
  EXPECT_DOUBLE_EQ(tn_c3_null_moments(4, 0.5).mean, 0.5);
}

TEST(RawTriangleTest, NullMomentsByMonteCarlo) {
  RunningMoments s;
  const int draws = 100000;
  for (std::uint64_t k = 0; k < draws; ++k) {
    s.add(static_cast<double>(triangle_count(sample_er(64, 0.2, derive_seed(13, {k})))));
  }
  const auto m = tn_c3_null_moments(64, 0.2);
  EXPECT_NEAR(s.mean, m.mean, 3 * std::sqrt(m.variance / draws));
  EXPECT_NEAR(s.variance(), m.variance, 0.03 * m.variance);
}

}  // namespace
}  // namespace ergof
