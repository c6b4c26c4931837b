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

// JSON and key=value forms of ScenarioConfig and TestReport.

#ifndef ERGOF_SERIALIZE_HPP
#define ERGOF_SERIALIZE_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "ergof/error.hpp"
#include "ergof/generators.hpp"
#include "ergof/got_tests.hpp"
#include "ergof/graph_io.hpp"

namespace ergof {

inline nlohmann::ordered_json to_json(const TestReport& r) {
  nlohmann::ordered_json j;
  j["functional"] = r.functional;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["p_hat"] = r.p_hat;
  j["statistic"] = r.statistic;
  j["standardized"] = r.standardized ? nlohmann::ordered_json(*r.standardized) : nlohmann::ordered_json(nullptr);
  j["critical_low"] = r.critical_low;
  j["critical_high"] = r.critical_high;
  j["reject"] = r.reject;
  j["alpha"] = r.alpha;
  j["B"] = r.B ? nlohmann::ordered_json(*r.B) : nlohmann::ordered_json(nullptr);
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  return j;
}

inline nlohmann::ordered_json to_json(const ScenarioConfig& c) {
  return {{"family", to_string(c.family)},
          {"n", c.n},
          {"p_mean", c.p_mean},
          {"heterogeneity", c.heterogeneity},
          {"seed", c.seed}};
}

inline ScenarioConfig scenario_from_json(const nlohmann::ordered_json& j) {
  ScenarioConfig c;
  try {
    c.family = parse_family(j.at("family").get<std::string>());
    c.n = j.at("n").get<int>();
    c.p_mean = j.at("p_mean").get<double>();
    c.heterogeneity = j.value("heterogeneity", 0.0);
    c.seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::ordered_json::exception& e) {
    throw InvalidInput(std::string("scenario JSON: ") + e.what());
  }
  c.validate();
  return c;
}

/// Flat `key = value` lines; '#' starts a comment line.
inline ScenarioConfig scenario_from_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = io_detail::trim(raw);
    if (io_detail::skippable(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no);
    const std::string key = io_detail::trim(line.substr(0, eq));
    if (kv.count(key) != 0) throw ParseError("duplicate key '" + key + "'", line_no);
    kv[key] = io_detail::trim(line.substr(eq + 1));
  }
  const auto get = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw InvalidInput("scenario config is missing '" + key + "'");
    return it->second;
  };
  ScenarioConfig c;
  try {
    c.family = parse_family(get("family"));
    c.n = std::stoi(get("n"));
    c.p_mean = std::stod(get("p_mean"));
    c.heterogeneity = kv.count("heterogeneity") ? std::stod(kv["heterogeneity"]) : 0.0;
    c.seed = kv.count("seed") ? std::stoull(kv["seed"]) : 0;
  } catch (const std::logic_error&) {
    throw InvalidInput("scenario config has a malformed number");
  }
  for (const auto& [key, value] : kv) {
    if (key != "family" && key != "n" && key != "p_mean" && key != "heterogeneity" && key != "seed") {
      throw InvalidInput("unknown scenario key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

inline std::string to_key_values(const ScenarioConfig& c) {
  std::ostringstream s;
  s.precision(17);
  s << "family = " << to_string(c.family) << "\nn = " << c.n << "\np_mean = " << c.p_mean
    << "\nheterogeneity = " << c.heterogeneity << "\nseed = " << c.seed << '\n';
  return s.str();
}

}  // namespace ergof

#endif  // ERGOF_SERIALIZE_HPP
