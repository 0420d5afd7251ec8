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

#include "concord/stats.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "concord/serialize.h"

namespace concord::pipeline {
namespace {

struct Size {
  size_t nodes = 0;
  size_t edges = 0;
};

double Reduction(double base, double rep) {
  return base == 0 ? 0.0 : (base - rep) / base * 100.0;
}

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

}  // namespace

const RepresentationStats* RunStats::Find(const std::string& name) const {
  for (const RepresentationStats& r : representations) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

RunStats ComputeStats(const Manifest& manifest,
                      const std::filesystem::path& manifest_dir,
                      const std::optional<std::string>& baseline) {
  if (baseline &&
      std::find(manifest.representations.begin(),
                manifest.representations.end(),
                *baseline) == manifest.representations.end()) {
    throw std::invalid_argument("baseline '" + *baseline +
                                "' is not a representation of the manifest");
  }
  // Per representation, per row index.
  std::map<std::string, std::map<size_t, Size>> sizes;
  RunStats stats;
  stats.baseline = baseline;
  for (const std::string& rep : manifest.representations) {
    RepresentationStats s;
    s.name = rep;
    double nodes = 0, edges = 0;
    for (size_t i = 0; i < manifest.rows.size(); ++i) {
      auto it = manifest.rows[i].files.find(rep);
      if (it == manifest.rows[i].files.end() || it->second.empty()) continue;
      try {
        graph::CodeGraph g = ReadGraph(manifest_dir / it->second);
        sizes[rep][i] = {g.nodes.size(), g.edges.size()};
        nodes += static_cast<double>(g.nodes.size());
        edges += static_cast<double>(g.edges.size());
        ++s.samples;
      } catch (const std::exception&) {
        ++s.missing_files;
      }
    }
    if (s.samples > 0) {
      s.avg_nodes = nodes / static_cast<double>(s.samples);
      s.avg_edges = edges / static_cast<double>(s.samples);
    }
    stats.representations.push_back(std::move(s));
  }
  if (baseline) {
    const RepresentationStats base = *stats.Find(*baseline);
    const auto& base_sizes = sizes[*baseline];
    for (RepresentationStats& s : stats.representations) {
      s.node_reduction_pct = Reduction(base.avg_nodes, s.avg_nodes);
      s.edge_reduction_pct = Reduction(base.avg_edges, s.avg_edges);
      size_t affected = 0;
      for (const auto& [row, size] : sizes[s.name]) {
        auto b = base_sizes.find(row);
        if (b != base_sizes.end() && size.nodes < b->second.nodes) ++affected;
      }
      s.affected_units = affected;
    }
  }
  return stats;
}

nlohmann::json ToJson(const RunStats& stats) {
  nlohmann::json reps = nlohmann::json::array();
  for (const RepresentationStats& s : stats.representations) {
    nlohmann::json r = {{"name", s.name},
                        {"samples", s.samples},
                        {"avg_nodes", s.avg_nodes},
                        {"avg_edges", s.avg_edges},
                        {"missing_files", s.missing_files}};
    r["node_reduction_pct"] =
        s.node_reduction_pct ? nlohmann::json(*s.node_reduction_pct) : nullptr;
    r["edge_reduction_pct"] =
        s.edge_reduction_pct ? nlohmann::json(*s.edge_reduction_pct) : nullptr;
    r["affected_units"] =
        s.affected_units ? nlohmann::json(*s.affected_units) : nullptr;
    reps.push_back(std::move(r));
  }
  return {{"baseline", stats.baseline ? nlohmann::json(*stats.baseline)
                                      : nlohmann::json(nullptr)},
          {"representations", reps}};
}

std::string FormatStatsTable(const RunStats& stats) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %8s %10s %10s %8s %8s %8s %9s\n",
                "representation", "samples", "avg_nodes", "avg_edges",
                "missing", "node_%", "edge_%", "affected");
  out += line;
  for (const RepresentationStats& s : stats.representations) {
    std::string node_pct =
        s.node_reduction_pct ? Fixed(*s.node_reduction_pct, 2) : "-";
    std::string edge_pct =
        s.edge_reduction_pct ? Fixed(*s.edge_reduction_pct, 2) : "-";
    std::string affected =
        s.affected_units ? std::to_string(*s.affected_units) : "-";
    std::snprintf(line, sizeof line, "%-16s %8zu %10s %10s %8zu %8s %8s %9s\n",
                  s.name.c_str(), s.samples, Fixed(s.avg_nodes, 2).c_str(),
                  Fixed(s.avg_edges, 2).c_str(), s.missing_files,
                  node_pct.c_str(), edge_pct.c_str(), affected.c_str());
    out += line;
  }
  return out;
}

}  // namespace concord::pipeline
