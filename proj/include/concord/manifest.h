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

// CSV files of a run: repository lists, external labels and the dataset
// manifest.

#ifndef CONCORD_MANIFEST_H_
#define CONCORD_MANIFEST_H_

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace concord::pipeline {

using CsvRow = std::vector<std::string>;

// RFC 4180 quoting: fields containing `,`, `"`, CR or LF are wrapped in
// quotes with inner quotes doubled.
std::string CsvField(std::string_view field);
// Records end with "\n".
std::string RenderCsv(const std::vector<CsvRow>& rows);
// Accepts LF or CRLF record ends and quoted fields spanning lines. Throws
// std::invalid_argument for an unterminated quote.
std::vector<CsvRow> ParseCsv(std::string_view text);

struct ManifestRow {
  long concord_id = 0;
  std::string project;
  std::string unit;  // not a manifest column; used for label joins
  std::string baseline_file;
  // Representation name -> graph file (relative to the manifest directory);
  // empty when the unit is missing from that representation.
  std::map<std::string, std::string> files;
  int label = 0;
  std::string split = "train";

  friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

struct Manifest {
  std::vector<std::string> representations;  // column order
  std::vector<ManifestRow> rows;

  std::vector<std::string> Header() const;
  friend bool operator==(const Manifest&, const Manifest&) = default;
};

std::string RenderManifest(const Manifest& manifest);
// Throws std::invalid_argument when the header does not have the manifest
// shape or a row has the wrong number of fields.
Manifest ParseManifest(std::string_view text);
void WriteManifest(const Manifest& manifest, const std::filesystem::path& path);
Manifest ReadManifest(const std::filesystem::path& path);

// One repository directory per row (first column); an optional `repo_path`
// header and blank rows are skipped. Relative paths resolve against the
// list's directory. Throws std::runtime_error when the list is unreadable.
std::vector<std::filesystem::path> ReadRepoList(
    const std::filesystem::path& path);

struct Label {
  int label = 0;
  std::string split;  // empty keeps the manifest default
};

// Header `project,unit,label[,split]`. Keyed by (project, unit). Throws
// std::invalid_argument for malformed rows.
std::map<std::pair<std::string, std::string>, Label> ReadLabels(
    const std::filesystem::path& path);

}  // namespace concord::pipeline

#endif  // CONCORD_MANIFEST_H_
