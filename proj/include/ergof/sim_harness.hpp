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

// Monte Carlo power estimation over scenario grids.
//
// Replication b of scenario `id` is seeded with
//   derive_seed(master_seed, {fnv1a64(id), b})
// and draws its own probability matrix (fresh blocks or covariates), its
// own graph and its own bootstrap graphs from that seed alone. Results are
// therefore identical for any thread count and any subset of scenarios.

#ifndef ERGOF_SIM_HARNESS_HPP
#define ERGOF_SIM_HARNESS_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ergof/error.hpp"
#include "ergof/generators.hpp"
#include "ergof/got_tests.hpp"
#include "ergof/rng.hpp"
#include "ergof/stats.hpp"

namespace ergof {

enum class PMeanRule { kLogNOverN, kInvSqrtN, kLogNOverSqrtN, kFixed };

struct PMeanSpec {
  PMeanRule rule = PMeanRule::kInvSqrtN;
  double fixed = 0.0;

  double value(int n) const {
    const double nd = n;
    switch (rule) {
      case PMeanRule::kLogNOverN:
        return std::log(nd) / nd;
      case PMeanRule::kInvSqrtN:
        return 1.0 / std::sqrt(nd);
      case PMeanRule::kLogNOverSqrtN:
        return std::log(nd) / std::sqrt(nd);
      case PMeanRule::kFixed:
        return fixed;
    }
    return fixed;
  }

  std::string label() const {
    switch (rule) {
      case PMeanRule::kLogNOverN:
        return "LOG_N_OVER_N";
      case PMeanRule::kInvSqrtN:
        return "INV_SQRT_N";
      case PMeanRule::kLogNOverSqrtN:
        return "LOG_N_OVER_SQRT_N";
      case PMeanRule::kFixed: {
        std::ostringstream s;
        s << "FIXED(" << fixed << ')';
        return s.str();
      }
    }
    return "?";
  }

  /// log-n-over-n, inv-sqrt-n, log-n-over-sqrt-n, or a number in (0, 1).
  static PMeanSpec parse(const std::string& s) {
    if (s == "log-n-over-n") return {PMeanRule::kLogNOverN, 0.0};
    if (s == "inv-sqrt-n") return {PMeanRule::kInvSqrtN, 0.0};
    if (s == "log-n-over-sqrt-n") return {PMeanRule::kLogNOverSqrtN, 0.0};
    double v = 0.0;
    std::size_t used = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::logic_error&) {
      used = 0;
    }
    if (used != s.size() || !(v > 0.0 && v < 1.0)) {
      throw InvalidInput("p-mean must be log-n-over-n, inv-sqrt-n, log-n-over-sqrt-n or a value in (0, 1)");
    }
    return {PMeanRule::kFixed, v};
  }
};

/// One simulation cell: a model family at fixed n, p_mean and heterogeneity.
struct Scenario {
  ModelFamily family = ModelFamily::kER;
  int n = 16;
  PMeanSpec p_mean;
  double heterogeneity = 0.0;

  ScenarioConfig config(std::uint64_t seed) const {
    return {family, n, p_mean.value(n), heterogeneity, seed};
  }

  std::string id() const {
    std::ostringstream s;
    s << to_string(family) << "/n=" << n << "/p=" << p_mean.label() << "/h=" << heterogeneity;
    return s.str();
  }
};

struct PowerCurvePoint {
  std::string scenario;
  ModelFamily family = ModelFamily::kER;
  int n = 0;
  std::string p_mean_rule;
  double p_mean_value = 0.0;
  double heterogeneity = 0.0;
  std::string functional;
  TestMode mode = TestMode::kAsymptotic;
  double alpha = kDefaultAlpha;
  int B = 0;
  int R = 0;
  std::int64_t rejections = 0;
  std::int64_t failures = 0;
  double power = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t master_seed = 0;

  /// Replications that produced a decision.
  std::int64_t valid() const noexcept { return R - failures; }
};

/// Runs body(i) for i in [0, count) on up to `threads` workers. body must
/// only write to per-index state.
inline void parallel_for_index(std::int64_t count, int threads,
                               const std::function<void(std::int64_t)>& body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
  if (threads <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::int64_t i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline std::uint64_t replication_seed(std::uint64_t master_seed, const std::string& scenario_id,
                                      std::int64_t rep) {
  return derive_seed(master_seed, {fnv1a64(scenario_id), static_cast<std::uint64_t>(rep)});
}

/// Estimates the power of every test in `tests` on `scenario`. Bootstrap
/// tests with equal B share one set of bootstrap graphs per replication.
/// A replication whose test throws (e.g. an empty graph) counts as a
/// failure for that test and is left out of the power denominator.
inline std::vector<PowerCurvePoint> run_scenario(const Scenario& scenario, std::span<const TestSpec> tests,
                                                 int R, std::uint64_t master_seed, int threads = 0) {
  if (R < 1) throw InvalidInput("need at least one replication");
  scenario.config(0).validate();
  for (const auto& t : tests) t.validate();
  const std::string id = scenario.id();

  // Distinct bootstrap functionals per B, so each graph is evaluated once.
  std::map<int, std::vector<FunctionalSpec>> boot_functionals;
  std::vector<std::pair<int, std::size_t>> boot_slot(tests.size(), {0, 0});
  for (std::size_t k = 0; k < tests.size(); ++k) {
    if (!tests[k].is_bootstrap()) continue;
    auto& list = boot_functionals[tests[k].B];
    std::size_t slot = list.size();
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (list[j].name() == tests[k].functional.name()) slot = j;
    }
    if (slot == list.size()) list.push_back(tests[k].functional);
    boot_slot[k] = {tests[k].B, slot};
  }

  // outcome[rep * T + k]: 0 accept, 1 reject, 2 failure.
  const std::size_t T = tests.size();
  std::vector<std::uint8_t> outcome(static_cast<std::size_t>(R) * T, 2);
  parallel_for_index(R, threads, [&](std::int64_t rep) {
    const std::uint64_t seed = replication_seed(master_seed, id, rep);
    std::optional<SimpleGraph> drawn;
    try {
      drawn.emplace(sample_scenario(scenario.config(seed)));
    } catch (const Error&) {
      return;  // every test of this replication stays a failure
    }
    const SimpleGraph& g = *drawn;
    const GraphSummary s = summarize(g);
    std::map<int, std::vector<BootstrapSample>> samples;
    bool boot_failed = false;
    for (const auto& [B, list] : boot_functionals) {
      try {
        samples[B] = bootstrap_null_samples(g, list, B, derive_seed(seed, {3, static_cast<std::uint64_t>(B)}));
      } catch (const Error&) {
        boot_failed = true;
      }
    }
    for (std::size_t k = 0; k < T; ++k) {
      std::uint8_t& out = outcome[static_cast<std::size_t>(rep) * T + k];
      try {
        if (!tests[k].is_bootstrap()) {
          out = test_asymptotic(g, tests[k].functional, tests[k].alpha).reject ? 1 : 0;
        } else if (!boot_failed) {
          const auto& [B, slot] = boot_slot[k];
          const double x = tests[k].functional.evaluate(g, s);
          out = bootstrap_decision(g, tests[k], x, samples.at(B)[slot]).reject ? 1 : 0;
        }
      } catch (const Error&) {
        out = 2;
      }
    }
  });

  std::vector<PowerCurvePoint> points;
  points.reserve(T);
  for (std::size_t k = 0; k < T; ++k) {
    PowerCurvePoint pt;
    pt.scenario = id;
    pt.family = scenario.family;
    pt.n = scenario.n;
    pt.p_mean_rule = scenario.p_mean.label();
    pt.p_mean_value = scenario.p_mean.value(scenario.n);
    pt.heterogeneity = scenario.heterogeneity;
    pt.functional = tests[k].functional.name();
    pt.mode = tests[k].mode;
    pt.alpha = tests[k].alpha;
    pt.B = tests[k].is_bootstrap() ? tests[k].B : 0;
    pt.R = R;
    pt.master_seed = master_seed;
    for (std::int64_t rep = 0; rep < R; ++rep) {
      const auto o = outcome[static_cast<std::size_t>(rep) * T + k];
      pt.rejections += o == 1;
      pt.failures += o == 2;
    }
    const auto valid = pt.valid();
    pt.power = valid > 0 ? static_cast<double>(pt.rejections) / static_cast<double>(valid)
                         : std::nan("");
    const Interval ci = wilson_interval(pt.rejections, valid);
    pt.ci_low = ci.low;
    pt.ci_high = ci.high;
    points.push_back(std::move(pt));
  }
  return points;
}

/// vn, sc3 and sp3, each in all three modes.
inline std::vector<TestSpec> standard_test_battery(int B, double alpha = kDefaultAlpha) {
  std::vector<TestSpec> out;
  for (const char* f : {"vn", "sc3", "sp3"}) {
    for (TestMode m : {TestMode::kAsymptotic, TestMode::kBootPercentile, TestMode::kBootHall}) {
      out.push_back({FunctionalSpec::parse(f), m, alpha, B, 0});
    }
  }
  return out;
}

inline const std::vector<int>& standard_n_grid() {
  static const std::vector<int> grid = {16, 32, 64, 128};
  return grid;
}

inline std::vector<double> lambda_grid() {
  std::vector<double> g;
  for (int i = 0; i <= 8; ++i) g.push_back(0.5 * i);
  return g;
}

inline std::vector<double> sigma2_grid() { return {0.0, 0.5, 1.0, 1.5, 2.0}; }

/// n x p_mean rule x (SBM2 and SBM3 over the lambda grid, covariate over the
/// sigma^2 grid).
inline std::vector<Scenario> standard_grid_scenarios() {
  std::vector<Scenario> out;
  const std::vector<PMeanSpec> rules = {{PMeanRule::kLogNOverN, 0.0},
                                        {PMeanRule::kInvSqrtN, 0.0},
                                        {PMeanRule::kLogNOverSqrtN, 0.0}};
  for (int n : standard_n_grid()) {
    for (const auto& rule : rules) {
      for (double l : lambda_grid()) out.push_back({ModelFamily::kSBM2, n, rule, l});
      for (double l : lambda_grid()) out.push_back({ModelFamily::kSBM3, n, rule, l});
      for (double s2 : sigma2_grid()) out.push_back({ModelFamily::kCovariate, n, rule, s2});
    }
  }
  return out;
}

inline void write_power_csv_header(std::ostream& out) {
  out << "scenario,family,n,p_mean_rule,p_mean_value,heterogeneity,functional,mode,alpha,B,R,"
         "rejections,failures,power,ci_low,ci_high,master_seed\n";
}

inline void write_power_csv_row(std::ostream& out, const PowerCurvePoint& p) {
  std::ostringstream s;
  s << std::setprecision(10);
  s << p.scenario << ',' << to_string(p.family) << ',' << p.n << ',' << p.p_mean_rule << ','
    << p.p_mean_value << ',' << p.heterogeneity << ',' << p.functional << ',' << to_string(p.mode) << ','
    << p.alpha << ',' << p.B << ',' << p.R << ',' << p.rejections << ',' << p.failures << ',' << p.power
    << ',' << p.ci_low << ',' << p.ci_high << ',' << p.master_seed << '\n';
  out << s.str();
}

struct GridSize {
  int R = 0;
  int B = 0;
};

/// R = round(1000 scale), B = round(500 scale), each at least 1.
inline GridSize standard_grid_size(double scale) {
  if (!(scale > 0.0 && scale <= 1.0)) throw InvalidInput("scale must lie in (0, 1]");
  return {std::max(1, static_cast<int>(std::lround(1000.0 * scale))),
          std::max(1, static_cast<int>(std::lround(500.0 * scale)))};
}

using ProgressFn = std::function<void(std::size_t done, std::size_t total, const std::string& id)>;

inline void run_standard_grid(std::ostream& out, std::uint64_t master_seed, double scale, int threads = 0,
                           const ProgressFn& progress = {}) {
  const GridSize size = standard_grid_size(scale);
  const auto tests = standard_test_battery(size.B);
  const auto scenarios = standard_grid_scenarios();
  write_power_csv_header(out);
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (const auto& p : run_scenario(scenarios[i], tests, size.R, master_seed, threads)) {
      write_power_csv_row(out, p);
    }
    if (progress) progress(i + 1, scenarios.size(), scenarios[i].id());
  }
}

inline void run_standard_grid(const std::string& path, std::uint64_t master_seed, double scale,
                           int threads = 0, const ProgressFn& progress = {}) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  run_standard_grid(out, master_seed, scale, threads, progress);
  out.flush();
  if (!out) throw InvalidInput("write to " + path + " failed");
}

}  // namespace ergof

#endif  // ERGOF_SIM_HARNESS_HPP
