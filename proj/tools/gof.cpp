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

// gof: goodness-of-fit tests for Erdos-Renyi graphs.
//
//   gof test    --input g.edges --functional sc3 --mode boot-hall
//   gof power   --grid paper --out results.csv --scale 0.1
//   gof power   --family sbm2 --n 64 --p-mean inv-sqrt-n --lambda 2
//   gof theory  --n 100 --p-mean 0.3 --eps-grid 0:0.45:0.05
//   gof verify
//   gof sample  --family sbm3 --n 32 --p-mean 0.2 --lambda 3
//
// Exit codes: 0 success, 1 usage or input error, 2 degenerate graph,
// 3 internal error. Data goes to stdout or --out; progress to stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ergof/ergof.hpp"
#include "ergof/serialize.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitInternal = 3;

/// Runs `write` against a file, or stdout for "-".
template <typename F>
void with_output(const std::string& path, F&& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ergof::InvalidInput("cannot write " + path);
  write(out);
  out.flush();
  if (!out) throw ergof::InvalidInput("write to " + path + " failed");
}

struct TestArgs {
  std::string input;
  std::string functional;
  std::string mode = "asym";
  double alpha = ergof::kDefaultAlpha;
  int B = ergof::kDefaultBootstrapReplicates;
};

struct ScenarioArgs {
  std::string family;
  int n = 0;
  std::string p_mean;
  std::optional<double> lambda;
  std::optional<double> sigma2;
};

struct PowerArgs {
  std::string grid;
  std::string out = "-";
  double scale = 1.0;
  int R = 1000;
  int B = ergof::kDefaultBootstrapReplicates;
  double alpha = ergof::kDefaultAlpha;
  std::vector<std::string> functionals = {"vn", "sc3", "sp3"};
  std::vector<std::string> modes = {"asym", "boot-pct", "boot-hall"};
  bool quiet = false;
};

struct TheoryArgs {
  int n = 100;
  double p_mean = 0.3;
  std::string eps_grid = "0:0.45:0.05";
  std::string out = "-";
};

struct VerifyArgs {
  bool literal_copies = false;
  bool literal_e3 = false;
};

struct SampleArgs {
  std::string format = "edges";
  std::string out = "-";
  std::string probs_out;
};

double heterogeneity_of(const ScenarioArgs& a, ergof::ModelFamily family) {
  if (a.lambda && a.sigma2) throw ergof::InvalidInput("give either --lambda or --sigma2, not both");
  if (family == ergof::ModelFamily::kCovariate && a.lambda) {
    throw ergof::InvalidInput("covariate model takes --sigma2");
  }
  if ((family == ergof::ModelFamily::kSBM2 || family == ergof::ModelFamily::kSBM3) && a.sigma2) {
    throw ergof::InvalidInput("block models take --lambda");
  }
  return a.lambda.value_or(a.sigma2.value_or(0.0));
}

ergof::Scenario scenario_of(const ScenarioArgs& a) {
  if (a.family.empty() || a.n <= 0 || a.p_mean.empty()) {
    throw ergof::InvalidInput("a single scenario needs --family, --n and --p-mean");
  }
  ergof::Scenario s;
  s.family = ergof::parse_family(a.family);
  s.n = a.n;
  s.p_mean = ergof::PMeanSpec::parse(a.p_mean);
  s.heterogeneity = heterogeneity_of(a, s.family);
  s.config(0).validate();
  return s;
}

int cmd_test(const TestArgs& a, std::uint64_t seed) {
  const ergof::SimpleGraph g = ergof::read_graph_file(a.input);
  ergof::TestSpec spec{ergof::FunctionalSpec::parse(a.functional), ergof::parse_mode(a.mode), a.alpha,
                       a.B, seed};
  const ergof::TestReport report = ergof::run_test(g, spec);
  std::cout << ergof::to_json(report).dump(2) << '\n';
  return kExitOk;
}

int cmd_power(const PowerArgs& a, const ScenarioArgs& sa, std::uint64_t seed, int threads) {
  const auto progress = [&](std::size_t done, std::size_t total, const std::string& id) {
    if (!a.quiet) std::cerr << "[" << done << "/" << total << "] " << id << '\n';
  };
  if (!a.grid.empty()) {
    if (a.grid != "paper") throw ergof::InvalidInput("unknown grid '" + a.grid + "' (expected paper)");
    if (!sa.family.empty()) throw ergof::InvalidInput("--grid and --family are mutually exclusive");
    with_output(a.out, [&](std::ostream& out) { ergof::run_standard_grid(out, seed, a.scale, threads, progress); });
    return kExitOk;
  }
  const ergof::Scenario scenario = scenario_of(sa);
  std::vector<ergof::TestSpec> tests;
  for (const auto& f : a.functionals) {
    for (const auto& m : a.modes) {
      tests.push_back({ergof::FunctionalSpec::parse(f), ergof::parse_mode(m), a.alpha, a.B, 0});
    }
  }
  const auto points = ergof::run_scenario(scenario, tests, a.R, seed, threads);
  with_output(a.out, [&](std::ostream& out) {
    ergof::write_power_csv_header(out);
    for (const auto& p : points) ergof::write_power_csv_row(out, p);
  });
  progress(1, 1, scenario.id());
  return kExitOk;
}

int cmd_theory(const TheoryArgs& a) {
  const auto grid = ergof::parse_grid(a.eps_grid);
  const auto rows = ergof::sensitivity_curve(a.n, a.p_mean, grid);
  with_output(a.out, [&](std::ostream& out) { ergof::write_sensitivity_csv(out, rows); });
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
  ergof::ArbitrationOptions opt;
  if (a.literal_copies) opt.copy_convention = ergof::CopyConvention::kLiteralAutTimesFalling;
  if (a.literal_e3) opt.empty_triple_form = ergof::EmptyTripleForm::kLiteralMisprint;
  const auto checks = ergof::run_arbitration_checks(opt);
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.name.size());
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << c.name
              << "  [" << c.convention << "]  " << c.detail << '\n';
    failed += !c.passed;
  }
  std::cout << (checks.size() - static_cast<std::size_t>(failed)) << "/" << checks.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitInternal;
}

int cmd_sample(const SampleArgs& a, const ScenarioArgs& sa, std::uint64_t seed) {
  const ergof::Scenario scenario = scenario_of(sa);
  const ergof::ScenarioConfig config = scenario.config(seed);
  if (!a.probs_out.empty()) {
    const auto probs = ergof::build_probabilities(config, ergof::derive_seed(seed, {1}));
    with_output(a.probs_out, [&](std::ostream& out) { ergof::write_matrix_csv(out, probs); });
  }
  const ergof::SimpleGraph g = ergof::sample_scenario(config);
  with_output(a.out, [&](std::ostream& out) {
    if (a.format == "edges") {
      ergof::write_edge_list(out, g);
    } else {
      ergof::write_matrix_csv(out, g);
    }
  });
  return kExitOk;
}

void add_scenario_options(CLI::App* cmd, ScenarioArgs& sa) {
  cmd->add_option("--family", sa.family, "Model family")->check(CLI::IsMember({"er", "sbm2", "sbm3", "covariate"}));
  cmd->add_option("--n", sa.n, "Vertex count")->check(CLI::Range(1, ergof::kMaxVertices));
  cmd->add_option("--p-mean", sa.p_mean, "log-n-over-n, inv-sqrt-n, log-n-over-sqrt-n, or a value in (0,1)");
  cmd->add_option("--lambda", sa.lambda, "Block-model heterogeneity")->check(CLI::NonNegativeNumber);
  cmd->add_option("--sigma2", sa.sigma2, "Covariate-model heterogeneity")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Goodness-of-fit tests for Erdos-Renyi random graphs"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  int threads = 0;
  app.add_option("--seed", seed, "Master seed (falls back to GOF_SEED, then 0)")->envname("GOF_SEED");
  app.add_option("--threads", threads, "Worker threads; 0 uses every core")->check(CLI::NonNegativeNumber);

  TestArgs ta;
  auto* test = app.add_subcommand("test", "Run one test on a graph and print a JSON report");
  test->add_option("--input", ta.input, "Edge list or 0/1 matrix CSV")->required();
  test->add_option("--functional", ta.functional, "Test statistic")
      ->required()
      ->check(CLI::IsMember({"vn", "sc3", "sp3", "tc3"}));
  test->add_option("--mode", ta.mode, "Decision rule")->check(CLI::IsMember({"asym", "boot-pct", "boot-hall"}));
  test->add_option("--alpha", ta.alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  test->add_option("--B", ta.B, "Bootstrap replications")->check(CLI::PositiveNumber);

  PowerArgs pa;
  ScenarioArgs power_scenario;
  auto* power = app.add_subcommand("power", "Estimate power over a scenario grid; writes CSV");
  power->add_option("--grid", pa.grid, "Named grid (paper)");
  power->add_option("--out", pa.out, "Output CSV path, - for stdout");
  power->add_option("--scale", pa.scale, "Shrinks R and B of the named grid")->check(CLI::Range(0.0, 1.0));
  power->add_option("--R", pa.R, "Replications for a single scenario")->check(CLI::PositiveNumber);
  power->add_option("--B", pa.B, "Bootstrap replications for a single scenario")->check(CLI::PositiveNumber);
  power->add_option("--alpha", pa.alpha, "Test level")->check(CLI::Range(0.0, 1.0));
  power->add_option("--functionals", pa.functionals, "Statistics for a single scenario")
      ->check(CLI::IsMember({"vn", "sc3", "sp3", "tc3"}));
  power->add_option("--modes", pa.modes, "Decision rules for a single scenario")
      ->check(CLI::IsMember({"asym", "boot-pct", "boot-hall"}));
  power->add_flag("--quiet", pa.quiet, "No progress on stderr");
  add_scenario_options(power, power_scenario);

  TheoryArgs tha;
  auto* theory = app.add_subcommand("theory", "Expected centered counts under a two-block SBM; writes CSV");
  theory->add_option("--n", tha.n, "Even vertex count")->check(CLI::Range(6, 1 << 20));
  theory->add_option("--p-mean", tha.p_mean, "Mean connectivity")->check(CLI::Range(0.0, 1.0));
  theory->add_option("--eps-grid", tha.eps_grid, "start:stop:step");
  theory->add_option("--out", tha.out, "Output CSV path, - for stdout");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the brute-force convention checks");
  verify->add_flag("--literal-copies", va.literal_copies, "Use |aut(H)| (n)_k as the variance constant");
  verify->add_flag("--literal-e3", va.literal_e3, "Use 1 - p_intra^3 in the empty-triple expectation");

  SampleArgs sma;
  ScenarioArgs sample_scenario;
  auto* sample = app.add_subcommand("sample", "Draw one graph from a model");
  add_scenario_options(sample, sample_scenario);
  sample->add_option("--format", sma.format, "edges or csv")->check(CLI::IsMember({"edges", "csv"}));
  sample->add_option("--out", sma.out, "Output path, - for stdout");
  sample->add_option("--probs-out", sma.probs_out, "Also write the probability matrix as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*test) return cmd_test(ta, seed);
    if (*power) return cmd_power(pa, power_scenario, seed, threads);
    if (*theory) return cmd_theory(tha);
    if (*verify) return cmd_verify(va);
    if (*sample) return cmd_sample(sma, sample_scenario, seed);
  } catch (const ergof::DegenerateGraph& e) {
    std::cerr << "gof: degenerate graph: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const ergof::ParseError& e) {
    std::cerr << "gof: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ergof::InvalidInput& e) {
    std::cerr << "gof: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ergof::UnsupportedSize& e) {
    std::cerr << "gof: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "gof: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
