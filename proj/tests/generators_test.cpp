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
#include <map>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ergof/generators.hpp"
#include "ergof/rng.hpp"
#include "ergof/stats.hpp"

namespace ergof {
namespace {

double CalibrationResidual(const ProbabilityMatrix& p, double target) {
  return std::abs(p.mean_connectivity() - target);
}

TEST(RngTest, CounterStreamIsPureFunctionOfCounter) {
  const CounterStream a(42);
  const CounterStream b(42);
  for (std::uint64_t k : {0ULL, 1ULL, 1000ULL, 123456789ULL}) EXPECT_EQ(a.bits(k), b.bits(k));
  EXPECT_NE(CounterStream(42).bits(0), CounterStream(43).bits(0));
}

TEST(RngTest, SplitMixReferenceOutputs) {
  // First outputs of the reference SplitMix64 seeded with 0.
  SplitMix64 g(0);
  EXPECT_EQ(g(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(g(), 0x06c45d188009454fULL);
  const CounterStream s(0);
  EXPECT_EQ(s.bits(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(s.bits(2), 0x06c45d188009454fULL);
}

TEST(RngTest, DeriveSeedDependsOnEveryPartAndOrder) {
  const auto a = derive_seed(1, {2, 3});
  EXPECT_NE(a, derive_seed(1, {3, 2}));
  EXPECT_NE(a, derive_seed(1, {2, 4}));
  EXPECT_NE(a, derive_seed(2, {2, 3}));
  EXPECT_EQ(a, derive_seed(1, {2, 3}));
}

TEST(RngTest, UniformAndNormalMoments) {
  const CounterStream s(7);
  RunningMoments u;
  RunningMoments z;
  for (std::uint64_t k = 0; k < 200000; ++k) {
    u.add(s.uniform(k));
    z.add(s.normal(k));
  }
  EXPECT_NEAR(u.mean, 0.5, 4 * std::sqrt(1.0 / 12 / 200000));
  EXPECT_NEAR(z.mean, 0.0, 4 * std::sqrt(1.0 / 200000));
  EXPECT_NEAR(z.variance(), 1.0, 4 * std::sqrt(2.0 / 200000));
}

TEST(RngTest, BelowIsUniform) {
  const CounterStream s(3);
  std::vector<int> hist(6, 0);
  const int draws = 60000;
  for (int k = 0; k < draws; ++k) ++hist[s.below(static_cast<std::uint64_t>(k), 6)];
  for (int c : hist) EXPECT_NEAR(c, draws / 6.0, 5 * std::sqrt(draws / 6.0));
}

TEST(SampleErTest, DegenerateProbabilities) {
  EXPECT_EQ(sample_er(5, 0.0, 1), SimpleGraph(5));
  EXPECT_EQ(sample_er(5, 1.0, 1), SimpleGraph::complete(5));
  EXPECT_THROW(sample_er(5, -0.1, 1), InvalidInput);
  EXPECT_THROW(sample_er(5, 1.5, 1), InvalidInput);
}

TEST(SampleErTest, EdgeFractionMatchesBernoulliMean) {
  const int n = 128;
  const double p = 0.3;
  const int draws = 10000;
  double edges = 0.0;
  for (int s = 0; s < draws; ++s) edges += static_cast<double>(sample_er(n, p, derive_seed(99, {static_cast<std::uint64_t>(s)})).num_edges());
  const double pairs = static_cast<double>(pair_count(n)) * draws;
  EXPECT_NEAR(edges / pairs, p, 3 * std::sqrt(p * (1 - p) / pairs));
}

TEST(SampleErTest, DeterministicGivenSeed) {
  EXPECT_EQ(sample_er(50, 0.2, 17), sample_er(50, 0.2, 17));
  EXPECT_FALSE(sample_er(50, 0.2, 17) == sample_er(50, 0.2, 18));
}

TEST(SampleHerTest, ConstantMatricesAtTheEnds) {
  EXPECT_EQ(sample_her(ProbabilityMatrix::constant(6, 0.0), 2), SimpleGraph(6));
  EXPECT_EQ(sample_her(ProbabilityMatrix::constant(6, 1.0), 2), SimpleGraph::complete(6));
}

TEST(SampleHerTest, ConstantMatrixReproducesEr) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(sample_her(ProbabilityMatrix::constant(40, 0.35), seed), sample_er(40, 0.35, seed));
  }
}

TEST(SampleHerTest, ConstantMatrixEdgeCountMoments) {
  const int n = 30;
  const double p = 0.2;
  const auto probs = ProbabilityMatrix::constant(n, p);
  RunningMoments her;
  RunningMoments er;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    her.add(static_cast<double>(sample_her(probs, derive_seed(1, {s})).num_edges()));
    er.add(static_cast<double>(sample_er(n, p, derive_seed(2, {s})).num_edges()));
  }
  const double pairs = static_cast<double>(pair_count(n));
  const double var = pairs * p * (1 - p);
  EXPECT_NEAR(her.mean, er.mean, 4 * std::sqrt(2 * var / 10000));
  EXPECT_NEAR(her.variance(), var, 0.1 * var);
  EXPECT_NEAR(er.variance(), var, 0.1 * var);
}

TEST(SampleHerTest, EdgeFrequenciesFollowMatrix) {
  std::vector<double> upper = {0.1, 0.9, 0.5};
  const ProbabilityMatrix probs(3, upper);
  std::vector<int> hits(3, 0);
  const int draws = 20000;
  for (std::uint64_t s = 0; s < draws; ++s) {
    const SimpleGraph g = sample_her(probs, s);
    hits[0] += g.has_edge(0, 1);
    hits[1] += g.has_edge(0, 2);
    hits[2] += g.has_edge(1, 2);
  }
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(hits[k] / static_cast<double>(draws), upper[k],
                4 * std::sqrt(upper[k] * (1 - upper[k]) / draws));
  }
}

TEST(ProbabilityMatrixTest, RejectsOutOfRangeEntries) {
  EXPECT_THROW(ProbabilityMatrix(3, {0.1, 1.2, 0.3}), InvalidInput);
  EXPECT_THROW(ProbabilityMatrix(3, {0.1, 0.2}), InvalidInput);
  const ProbabilityMatrix p(3, {0.1, 0.2, 0.3});
  EXPECT_DOUBLE_EQ(p(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(p(2, 1), 0.3);
  EXPECT_DOUBLE_EQ(p(1, 2), 0.3);
}

TEST(CalibrateOffsetTest, ClosedForms) {
  const std::vector<double> zeros(10, 0.0);
  EXPECT_NEAR(calibrate_offset(zeros, 0.3), logit(0.3), 1e-9);
  const std::vector<double> shifted(10, 1.7);
  EXPECT_NEAR(calibrate_offset(shifted, 0.3), logit(0.3) - 1.7, 1e-9);
}

TEST(CalibrateOffsetTest, UnreachableTargetFails) {
  const std::vector<double> huge(5, 1000.0);
  EXPECT_THROW(calibrate_offset(huge, 0.3), CalibrationFailure);
  EXPECT_THROW(calibrate_offset(huge, 1.0), InvalidInput);
}

TEST(Sbm2Test, NullAndOrdering) {
  const auto null = build_sbm2_probs(20, 0.3, 0.0);
  for (double v : null.upper()) EXPECT_EQ(v, 0.3);
  const auto p = build_sbm2_probs(20, 0.3, 2.0);
  const double intra = p(0, 1);
  const double inter = p(0, 19);
  EXPECT_GT(intra, 0.3);
  EXPECT_LT(inter, 0.3);
  std::set<double> distinct(p.upper().begin(), p.upper().end());
  EXPECT_EQ(distinct.size(), 2U);
  EXPECT_THROW(build_sbm2_probs(21, 0.3, 1.0), InvalidInput);
}

TEST(Sbm2Test, CalibrationResiduals) {
  EXPECT_LE(CalibrationResidual(build_sbm2_probs(64, 0.125, 2.0), 0.125), 1e-10);
  EXPECT_LE(CalibrationResidual(build_sbm2_probs(100, 0.3, 2.0), 0.3), 1e-10);
}

TEST(Sbm3Test, BlockSizesValidAndUniform) {
  // n = 8 leaves r = 2 spare vertices: binom(4, 2) = 6 compositions.
  std::map<std::array<int, 3>, int> freq;
  const int draws = 6000;
  for (std::uint64_t s = 0; s < draws; ++s) {
    const auto b = sbm3_block_sizes(8, s);
    EXPECT_EQ(b[0] + b[1] + b[2], 8);
    for (int x : b) EXPECT_GE(x, 2);
    ++freq[b];
  }
  EXPECT_EQ(freq.size(), 6U);
  for (const auto& [b, c] : freq) EXPECT_NEAR(c, draws / 6.0, 5 * std::sqrt(draws / 6.0));
  EXPECT_THROW(sbm3_block_sizes(5, 0), InvalidInput);
}

TEST(Sbm3Test, ZeroWeightPairsShareOneValue) {
  const int n = 30;
  const auto sizes = sbm3_block_sizes(n, 4);
  for (double lambda : {1.0, 3.0}) {
    const auto p = build_sbm3_probs(n, 0.2, lambda, 4);
    const int z0 = sizes[0];
    const double ref = p(z0, 0);
    for (int i = z0; i < z0 + sizes[1]; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          EXPECT_DOUBLE_EQ(p(i, j), ref);
        }
      }
    }
  }
}

TEST(Sbm3Test, NullAndCalibration) {
  const auto null = build_sbm3_probs(12, 0.4, 0.0, 1);
  for (double v : null.upper()) EXPECT_EQ(v, 0.4);
  const double pm = std::log(32.0) / 32.0;
  EXPECT_LE(CalibrationResidual(build_sbm3_probs(32, pm, 3.0, 5), pm), 1e-10);
  EXPECT_THROW(build_sbm3_probs(5, 0.3, 1.0, 0), InvalidInput);
}

TEST(CovariateTest, NullIdenticalCovariatesAndCalibration) {
  const auto null = build_covariate_probs(15, 0.25, 0.0, 3);
  for (double v : null.upper()) EXPECT_EQ(v, 0.25);
  std::vector<std::array<double, 2>> x = {{0.3, -1.0}, {0.3, -1.0}, {0.3, -1.0}, {2.0, 1.0}};
  const auto p = covariate_probs(x, 0.3, 1.0);
  EXPECT_DOUBLE_EQ(p(0, 1), p(0, 2));
  EXPECT_DOUBLE_EQ(p(0, 1), p(1, 2));
  EXPECT_GT(p(0, 1), p(0, 3));
  EXPECT_LE(CalibrationResidual(build_covariate_probs(64, 0.125, 1.5, 8), 0.125), 1e-10);
}

TEST(ScenarioTest, HeterogeneityZeroIsBitwiseConstant) {
  for (ModelFamily f : {ModelFamily::kSBM2, ModelFamily::kSBM3, ModelFamily::kCovariate}) {
    const ScenarioConfig c{f, 24, 0.17, 0.0, 9};
    const auto probs = build_probabilities(c, 1);
    for (double v : probs.upper()) EXPECT_EQ(v, 0.17);
  }
}

TEST(ScenarioTest, CalibrationHoldsAcrossFamilies) {
  for (ModelFamily f : {ModelFamily::kSBM2, ModelFamily::kSBM3, ModelFamily::kCovariate}) {
    for (double h : {0.5, 2.0, 4.0}) {
      const ScenarioConfig c{f, 32, 0.15, h, 9};
      EXPECT_LE(CalibrationResidual(build_probabilities(c, 3), 0.15), 1e-10) << to_string(f) << " " << h;
    }
  }
}

TEST(ScenarioTest, SamplingIsDeterministic) {
  const ScenarioConfig c{ModelFamily::kCovariate, 40, 0.2, 1.5, 77};
  EXPECT_EQ(sample_scenario(c), sample_scenario(c));
  ScenarioConfig d = c;
  d.seed = 78;
  EXPECT_FALSE(sample_scenario(c) == sample_scenario(d));
}

TEST(ScenarioTest, ValidationAndParsing) {
  EXPECT_THROW((ScenarioConfig{ModelFamily::kER, 10, 0.0, 0.0, 0}.validate()), InvalidInput);
  EXPECT_THROW((ScenarioConfig{ModelFamily::kER, 10, 0.5, -1.0, 0}.validate()), InvalidInput);
  EXPECT_EQ(parse_family("sbm3"), ModelFamily::kSBM3);
  EXPECT_THROW(parse_family("sbm4"), InvalidInput);
}

}  // namespace
}  // namespace ergof
