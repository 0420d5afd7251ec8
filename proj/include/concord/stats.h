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

// Graph size statistics over a manifest.

#ifndef CONCORD_STATS_H_
#define CONCORD_STATS_H_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "concord/manifest.h"
#include "json.hpp"

namespace concord::pipeline {

struct RepresentationStats {
  std::string name;
  size_t samples = 0;  // graphs read successfully
  double avg_nodes = 0;
  double avg_edges = 0;
  size_t missing_files = 0;  // referenced but unreadable
  // Relative to the baseline representation: (base - rep) / base * 100.
  std::optional<double> node_reduction_pct;
  std::optional<double> edge_reduction_pct;
  // Rows whose graph has fewer nodes than the baseline's graph.
  std::optional<size_t> affected_units;

  friend bool operator==(const RepresentationStats&,
                         const RepresentationStats&) = default;
};

struct RunStats {
  std::optional<std::string> baseline;
  std::vector<RepresentationStats> representations;

  const RepresentationStats* Find(const std::string& name) const;
  friend bool operator==(const RunStats&, const RunStats&) = default;
};

// Graph paths resolve against `manifest_dir`. Throws std::invalid_argument
// when `baseline` is not a representation of the manifest.
RunStats ComputeStats(const Manifest& manifest,
                      const std::filesystem::path& manifest_dir,
                      const std::optional<std::string>& baseline);

nlohmann::json ToJson(const RunStats& stats);
// Fixed-width table for terminals.
std::string FormatStatsTable(const RunStats& stats);

}  // namespace concord::pipeline

#endif  // CONCORD_STATS_H_
