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

// Draws one two-block graph, tests it against G(n, p) with each statistic,
// then estimates power of the triangle test over a short lambda sweep.

#include <cstdio>
#include <vector>

#include "ergof/ergof.hpp"

int main() {
  using namespace ergof;

  const ScenarioConfig config{ModelFamily::kSBM2, 64, 0.125, 2.0, 2026};
  const SimpleGraph g = sample_scenario(config);
  std::printf("n=%d m=%lld p_hat=%.4f\n", g.num_vertices(), static_cast<long long>(g.num_edges()),
              mean_connectivity_hat(g));

  for (const char* name : {"vn", "sc3", "sp3", "tc3"}) {
    const TestSpec spec{FunctionalSpec::parse(name), TestMode::kBootHall, 0.05, 500, 7};
    const TestReport asym = test_asymptotic(g, spec.functional);
    const TestReport boot = test_bootstrap(g, spec);
    std::printf("%-4s z=%8.3f reject(asym)=%d  reject(hall)=%d\n", name, *asym.standardized, asym.reject,
                boot.reject);
  }

  const std::vector<TestSpec> tests = {{FunctionalSpec::parse("sc3"), TestMode::kAsymptotic, 0.05, 0, 0}};
  for (double lambda : {0.0, 1.0, 2.0, 3.0}) {
    const Scenario s{ModelFamily::kSBM2, 64, {PMeanRule::kInvSqrtN, 0.0}, lambda};
    const PowerCurvePoint p = run_scenario(s, tests, 200, 1)[0];
    std::printf("lambda=%.1f power=%.3f [%.3f, %.3f]\n", lambda, p.power, p.ci_low, p.ci_high);
  }
  return 0;
}
