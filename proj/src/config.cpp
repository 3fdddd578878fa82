/* Copyright 2026 The qesplit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "qea/config.hpp"

#include <algorithm>
#include <stdexcept>

namespace qea {

namespace {
std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}
}  // namespace

const std::vector<std::string>& all_phases() {
  static const std::vector<std::string> phases = {
      "setalg", "split",   "equiv",   "partition",
      "embed",  "witness", "nondiag", "equations"};
  return phases;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.dimension = j.at("dimension").get<int>();
  c.blocks = j.at("blocks").get<std::vector<int>>();
  c.m = j.at("m").get<int>();
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.enlargement = j.value("enlargement", 1);
  c.maxBase = j.value("maxBase", 4);
  c.budget = j.value("budget", std::uint64_t{2000000});
  c.seed = j.value("seed", std::uint64_t{0});
  c.phases = j.value("phases", all_phases());
  return c;
}

nlohmann::ordered_json ExperimentConfig::to_json() const {
  nlohmann::ordered_json j;
  j["dimension"] = dimension;
  j["blocks"] = blocks;
  j["m"] = m;
  j["n"] = n;
  j["k"] = k;
  j["enlargement"] = enlargement;
  j["maxBase"] = maxBase;
  j["budget"] = budget;
  j["seed"] = seed;
  j["phases"] = phases;
  return j;
}

std::vector<std::string> ExperimentConfig::validate() const {
  auto has_phase = [&](const std::string& p) {
    return std::find(phases.begin(), phases.end(), p) != phases.end();
  };
  for (const std::string& p : phases)
    if (std::find(all_phases().begin(), all_phases().end(), p) ==
        all_phases().end())
      throw std::invalid_argument("unknown phase '" + p + "'");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (static_cast<int>(blocks.size()) != dimension)
    throw std::invalid_argument("need one block per coordinate");
  for (int b : blocks)
    if (b < 1) throw std::invalid_argument("blocks must be nonempty");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (n < 1 || n > dimension)
    throw std::invalid_argument("n must lie in 1..dimension");
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (has_phase("witness") && dimension < m + 1)
    throw std::invalid_argument(
        "witness construction needs dimension >= m+1");
  if (has_phase("partition") || has_phase("embed")) {
    const int least = *std::min_element(blocks.begin(), blocks.end());
    if (least < m)
      throw std::invalid_argument(
          "partition into m pieces needs every block >= m");
  }

  std::vector<std::string> warnings;
  const std::uint64_t bound = std::uint64_t{1}
                              << (static_cast<std::uint64_t>(k) * factorial(n) + 1);
  if (static_cast<std::uint64_t>(m) < bound)
    warnings.push_back(
        "m = " + std::to_string(m) + " is below 2^(k*n!+1) = " +
        std::to_string(bound) +
        "; the k-generator representability guarantee is not claimed");
  return warnings;
}

ExperimentConfig preset(const std::string& name) {
  ExperimentConfig c;
  if (name == "tiny") {
    c.dimension = 3;
    c.blocks = {2, 2, 2};
    c.m = 2;
    c.n = 2;
    c.k = 1;
    c.enlargement = 1;
    c.maxBase = 4;
    c.budget = 2000000;
    c.seed = 0;
    c.phases = all_phases();
    return c;
  }
  if (name == "small") {
    // Every phase stays desk-sized: dimension 4, a 15-point base, 3 split
    // parts. The classical bound on m is deliberately not met (the runner
    // records the warning); meeting it needs m >= 8 and blows up the spaces.
    c.dimension = 4;
    c.blocks = {3, 4, 4, 4};
    c.m = 3;
    c.n = 2;
    c.k = 1;
    c.enlargement = 1;
    c.maxBase = 4;
    c.budget = 2000000;
    c.seed = 0;
    c.phases = all_phases();
    return c;
  }
  if (name == "bounds") {
    // Block-count bound checks on synthetic part tables only.
    c.dimension = 3;
    c.blocks = {2, 2, 2};
    c.m = 16;
    c.n = 2;
    c.k = 2;
    c.enlargement = 0;
    c.maxBase = 0;
    c.budget = 0;
    c.seed = 0;
    c.phases = {"equiv"};
    return c;
  }
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace qea
