// Copyright 2026 The Concord Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// concord run <config> [options]   build graphs, manifest and statistics
// concord check <config>           validate a configuration (exit 0 / 2)
// concord stats <manifest>         size statistics of an existing run

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "concord/dsl.h"
#include "concord/pipeline.h"
#include "concord/serialize.h"
#include "concord/stats.h"

namespace {

namespace fs = std::filesystem;
using concord::pipeline::Granularity;

int Check(const std::string& config) {
  std::string text;
  try {
    text = concord::pipeline::ReadFile(config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return concord::pipeline::kExitInvalidConfig;
  }
  try {
    concord::dsl::ConcordModel model = concord::dsl::LoadConfig(text, config);
    for (const auto& d : model.diagnostics) {
      std::cerr << concord::dsl::FormatDiagnostic(d) << "\n";
    }
    if (model.HasErrors()) return concord::pipeline::kExitInvalidConfig;
    std::cout << config << ": " << model.tasks.size() << " task(s), "
              << model.representations.size() << " representation(s)\n";
    return concord::pipeline::kExitOk;
  } catch (const concord::dsl::SyntaxError& e) {
    for (const auto& d : e.errors()) {
      std::cerr << concord::dsl::FormatDiagnostic(d) << "\n";
    }
    return concord::pipeline::kExitInvalidConfig;
  }
}

int Stats(const std::string& manifest_path,
          const std::optional<std::string>& baseline,
          const std::optional<std::string>& out) {
  try {
    concord::pipeline::Manifest manifest =
        concord::pipeline::ReadManifest(manifest_path);
    fs::path dir = fs::path(manifest_path).parent_path();
    if (dir.empty()) dir = ".";
    concord::pipeline::RunStats stats =
        concord::pipeline::ComputeStats(manifest, dir, baseline);
    std::cerr << concord::pipeline::FormatStatsTable(stats);
    std::string json = concord::pipeline::ToJson(stats).dump(2) + "\n";
    if (out) {
      concord::pipeline::WriteFile(*out, json);
    } else {
      std::cout << json;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CONCORD graph representation generator"};
  app.require_subcommand(1);

  std::string config;
  concord::pipeline::RunOptions options;
  std::optional<std::string> baseline, labels, stats_out, manifest;
  Granularity granularity = Granularity::kMethod;
  std::map<std::string, Granularity> granularities = {
      {"method", Granularity::kMethod}, {"class", Granularity::kClass}};

  CLI::App* run = app.add_subcommand("run", "Generate graphs for a config");
  run->add_option("config", config, "Configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--granularity", granularity, "Code unit: method or class")
      ->transform(CLI::CheckedTransformer(granularities, CLI::ignore_case));
  run->add_option("--baseline", baseline,
                  "Representation the reductions are measured against");
  run->add_option("--jobs,-j", options.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  run->add_option("--labels", labels, "CSV with project,unit,label[,split]")
      ->check(CLI::ExistingFile);
  run->add_flag("--strict", options.strict, "Exit 1 when warnings occurred");
  run->add_option("--stats-out", stats_out, "Write statistics JSON here");
  run->add_option("--manifest", manifest, "Manifest path");

  std::string check_config;
  CLI::App* check = app.add_subcommand("check", "Validate a config");
  check->add_option("config", check_config, "Configuration file")->required();

  std::string manifest_path;
  std::optional<std::string> stats_baseline, stats_json;
  CLI::App* stats = app.add_subcommand("stats", "Statistics of a manifest");
  stats->add_option("manifest", manifest_path, "Manifest CSV")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--baseline", stats_baseline, "Baseline representation");
  stats->add_option("--out", stats_json, "Write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);
  concord::pipeline::InitLogging();

  if (*check) return Check(check_config);
  if (*stats) return Stats(manifest_path, stats_baseline, stats_json);

  options.granularity = granularity;
  options.baseline = baseline;
  if (labels) options.labels = *labels;
  if (stats_out) options.stats_out = *stats_out;
  if (manifest) options.manifest = *manifest;
  concord::pipeline::RunResult result;
  try {
    result = concord::pipeline::RunConfigFile(config, options);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (result.exit_code == concord::pipeline::kExitOk ||
      result.exit_code == concord::pipeline::kExitWarnings) {
    std::cerr << concord::pipeline::FormatStatsTable(result.stats);
    std::cerr << "manifest: " << result.manifest_path.string() << " ("
              << result.manifest.rows.size() << " rows, "
              << result.warnings.size() << " warning(s))\n";
  }
  return result.exit_code;
}
