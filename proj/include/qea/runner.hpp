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

#ifndef QEA_RUNNER_HPP
#define QEA_RUNNER_HPP

#include <json.hpp>

#include "qea/config.hpp"

namespace qea {

/// Executes the configured phases in dependency order and returns the
/// report. Every asserted pass/fail in the report is backed by a
/// machine-checked record. Identical configs (seeds included) produce
/// byte-identical reports except for the "millis" timing fields.
nlohmann::ordered_json run(const ExperimentConfig& config);

bool report_ok(const nlohmann::ordered_json& report);

}  // namespace qea

#endif  // QEA_RUNNER_HPP
