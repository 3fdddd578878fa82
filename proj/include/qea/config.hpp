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

#ifndef QEA_CONFIG_HPP
#define QEA_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace qea {

/// Parameters of a batch verification run. Loaded from JSON; see the README
/// for the schema.
struct ExperimentConfig {
  int dimension = 3;
  std::vector<int> blocks = {2, 2, 2};
  int m = 2;
  int n = 2;
  int k = 1;
  int enlargement = 1;
  int maxBase = 4;
  std::uint64_t budget = 2000000;
  std::uint64_t seed = 0;
  std::vector<std::string> phases;

  static ExperimentConfig from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  /// Hard inconsistencies throw; soft ones (the classical bound on m) come
  /// back as warnings.
  std::vector<std::string> validate() const;
};

/// Known phase names in dependency order.
const std::vector<std::string>& all_phases();

/// tiny | small | bounds.
ExperimentConfig preset(const std::string& name);

}  // namespace qea

#endif  // QEA_CONFIG_HPP
