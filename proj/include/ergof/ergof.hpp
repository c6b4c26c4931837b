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

// Umbrella header. serialize.hpp is not included here because it pulls in
// nlohmann/json.

#ifndef ERGOF_ERGOF_HPP
#define ERGOF_ERGOF_HPP

#include "ergof/error.hpp"
#include "ergof/generators.hpp"
#include "ergof/got_tests.hpp"
#include "ergof/graph.hpp"
#include "ergof/graph_io.hpp"
#include "ergof/oracle.hpp"
#include "ergof/pattern.hpp"
#include "ergof/power_theory.hpp"
#include "ergof/rng.hpp"
#include "ergof/sim_harness.hpp"
#include "ergof/stats.hpp"
#include "ergof/subgraph_stats.hpp"

#endif  // ERGOF_ERGOF_HPP
