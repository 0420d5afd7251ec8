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

// End-to-end execution of a configuration: for every representation and
// every source file of its repositories, prune, parse, build and merge the
// base graphs, add edges, and write one graph per code unit plus a manifest.
//
// Output layout (relative paths in a config resolve against the config's
// directory):
//
//   <output_dir>/<rep>/<project>/<unit>_<id>.json    graphs
//   <output_dir>/<rep>.pruned/<project>/<path>       pruned sources, with a
//   <output_dir>/<rep>.pruned/<project>/<path>.prune.json report
//   <manifest dir>/manifest.csv                      defaults to the first
//                                                    representation's
//                                                    output_dir
//   <manifest dir>/baseline/<project>/<unit>_<id>.code  original unit code

#ifndef CONCORD_PIPELINE_H_
#define CONCORD_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "concord/dsl.h"
#include "concord/graphs.h"
#include "concord/manifest.h"
#include "concord/pruner.h"
#include "concord/stats.h"

namespace concord::pipeline {

enum class Granularity { kMethod, kClass };

inline constexpr int kExitOk = 0;
inline constexpr int kExitWarnings = 1;  // only with strict
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitUnreadableRepoList = 3;

struct RunOptions {
  Granularity granularity = Granularity::kMethod;
  std::optional<std::string> baseline;
  int jobs = 1;
  std::optional<std::filesystem::path> labels;
  bool strict = false;
  std::optional<std::filesystem::path> stats_out;
  std::optional<std::filesystem::path> manifest;
  std::vector<std::string> extensions = {".java", ".c"};
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> warnings;
  std::vector<dsl::Diagnostic> diagnostics;  // configuration findings
  std::filesystem::path manifest_path;
  Manifest manifest;
  RunStats stats;
};

// What one representation does to a file.
struct RepresentationPlan {
  std::string name;
  std::set<BaseGraphKind> base;
  std::vector<prune::PruneRule> prune_rules;  // empty: no removal
  std::vector<dsl::Task> tasks;               // edge operations applied
};

struct UnitGraph {
  std::string name;   // method or class name
  int index = 0;      // among units of the same name in the file
  graph::CodeGraph graph;
};

struct RepresentationOutput {
  std::vector<UnitGraph> units;
  std::optional<prune::RewriteResult> pruned;  // set when rules exist
};

// Graph units of one source file under one representation. Throws on
// parser-level failures; the caller isolates them per file.
RepresentationOutput BuildRepresentation(const std::string& text,
                                         const std::string& relpath,
                                         const RepresentationPlan& plan,
                                         Granularity granularity);

// Unit names and original code of a file, in the same order and naming as
// BuildRepresentation uses.
struct BaselineUnit {
  std::string name;
  int index = 0;
  std::string code;
};
std::vector<BaselineUnit> BaselineUnits(const std::string& text,
                                        const std::string& relpath,
                                        Granularity granularity);

std::vector<RepresentationPlan> MakePlans(const dsl::ConcordModel& model,
                                          std::vector<std::string>* warnings);

// `base_dir` resolves relative paths of the model.
RunResult Run(const dsl::ConcordModel& model,
              const std::filesystem::path& base_dir, const RunOptions& options);
// Loads and validates the file first (exit 2 on syntax or semantic errors).
RunResult RunConfigFile(const std::filesystem::path& config,
                        const RunOptions& options);

// Log level from CONCORD_LOG (trace, debug, info, warn, error, off).
void InitLogging();

}  // namespace concord::pipeline

#endif  // CONCORD_PIPELINE_H_
