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

// Batch driver: builds the configured constructions, runs the verification
// phases and writes a JSON report. `check-eq` evaluates a single equation
// against one of the built algebras.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "qea/runner.hpp"
#include "qea/splitting.hpp"

namespace {

qea::ExperimentConfig load_config(const std::string& config_path,
                                  const std::string& preset_name,
                                  std::optional<std::uint64_t> seed) {
  qea::ExperimentConfig cfg;
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config " + config_path);
    nlohmann::json j;
    in >> j;
    cfg = qea::ExperimentConfig::from_json(j);
  } else {
    cfg = qea::preset(preset_name.empty() ? "tiny" : preset_name);
  }
  if (seed) cfg.seed = *seed;
  return cfg;
}

void write_report(const nlohmann::ordered_json& report,
                  const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report " + path);
  out << report.dump(2) << "\n";
}

int cmd_run(const std::string& config_path, const std::string& preset_name,
            const std::string& report_path,
            std::optional<std::uint64_t> seed) {
  qea::ExperimentConfig cfg = load_config(config_path, preset_name, seed);
  nlohmann::ordered_json report = qea::run(cfg);
  write_report(report, report_path);
  if (!qea::report_ok(report)) {
    std::cerr << "FAILED: " << report["summary"]["failed"]
              << " checks failed\n";
    return 1;
  }
  std::cerr << "ok: " << report["summary"]["checks"] << " checks passed\n";
  return 0;
}

int cmd_check_eq(const std::string& config_path, const std::string& preset_name,
                 const std::string& algebra, const std::string& eq,
                 const std::string& strategy, int count,
                 std::optional<std::uint64_t> seed) {
  qea::ExperimentConfig cfg = load_config(config_path, preset_name, seed);
  cfg.validate();

  qea::BaseSpec base(cfg.blocks);
  auto sp = std::make_shared<const qea::SeqSpace>(cfg.dimension,
                                                  base.universe());
  qea::Bits r = qea::product_r(*sp, base);

  std::shared_ptr<const qea::Algebra> alg;
  if (algebra == "powerset") {
    alg = std::make_shared<const qea::PowersetAlgebra>(sp, cfg.n);
  } else if (algebra == "base-subalgebra") {
    alg = qea::GeneratedAlgebra::generate(sp, cfg.n, {r});
  } else if (algebra == "split") {
    auto a = qea::GeneratedAlgebra::generate(sp, cfg.n, {r});
    alg = qea::split(qea::SplitSpec{a, r, cfg.m, cfg.n, cfg.k});
  } else {
    throw std::runtime_error(
        "unknown algebra '" + algebra +
        "' (expected powerset | base-subalgebra | split)");
  }

  const auto epos = eq.find('=');
  if (epos == std::string::npos)
    throw std::runtime_error("equation must contain '='");
  qea::Term lhs =
      qea::parse_term(eq.substr(0, epos), cfg.dimension, cfg.n);
  qea::Term rhs =
      qea::parse_term(eq.substr(epos + 1), cfg.dimension, cfg.n);

  qea::Strategy strat;
  if (strategy == "exhaustive")
    strat = qea::Exhaustive{};
  else
    strat = qea::Sampled{count, cfg.seed};

  qea::Verdict v = qea::check_equation(lhs, rhs, *alg, strat);
  if (v.holds) {
    std::cout << "holds (" << (v.exhaustive ? "exhaustive" : "sampled")
              << ", " << v.cases << " assignments)\n";
    return 0;
  }
  std::cout << "fails; counter-assignment:\n";
  for (std::size_t i = 0; i < v.counter.size(); ++i)
    std::cout << "  x" << i << " = " << v.counter[i].to_string() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite splitting constructions for quasipolyadic equality set algebras"};
  app.require_subcommand(1);

  std::string config_path, preset_name, report_path;
  std::optional<std::uint64_t> seed;

  auto* run_cmd = app.add_subcommand("run", "run verification phases");
  run_cmd->add_option("--config", config_path, "config JSON path");
  run_cmd->add_option("--preset", preset_name, "tiny | small | bounds");
  run_cmd->add_option("--report", report_path, "report path ('-' = stdout)");
  run_cmd->add_option("--seed", seed, "override the config seed");

  std::string algebra = "split", eq, strategy = "sampled";
  int count = 200;
  auto* check_cmd =
      app.add_subcommand("check-eq", "check an equation on a built algebra");
  check_cmd->add_option("--config", config_path, "config JSON path");
  check_cmd->add_option("--preset", preset_name, "tiny | small | bounds");
  check_cmd->add_option("--algebra", algebra,
                        "powerset | base-subalgebra | split");
  check_cmd->add_option("--eq", eq, "equation 'lhs = rhs'")->required();
  check_cmd->add_option("--strategy", strategy, "sampled | exhaustive");
  check_cmd->add_option("--count", count, "samples in sampled mode");
  check_cmd->add_option("--seed", seed, "override the config seed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed())
      return cmd_run(config_path, preset_name, report_path, seed);
    return cmd_check_eq(config_path, preset_name, algebra, eq, strategy,
                        count, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
