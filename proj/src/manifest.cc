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

#include "concord/manifest.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "concord/serialize.h"

namespace concord::pipeline {
namespace {

constexpr std::string_view kFileSuffix = "_file";

bool IsBlankRow(const CsvRow& row) {
  return std::all_of(row.begin(), row.end(), [](const std::string& f) {
    return std::all_of(f.begin(), f.end(),
                       [](unsigned char c) { return std::isspace(c); });
  });
}

std::string Trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

int ParseInt(const std::string& text, const std::string& what) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid " + what + " '" + text + "'");
  }
}

}  // namespace

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string RenderCsv(const std::vector<CsvRow>& rows) {
  std::string out;
  for (const CsvRow& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += CsvField(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<CsvRow> ParseCsv(std::string_view text) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  bool quoted = false;
  bool row_open = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c != '"') {
        field += c;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        quoted = false;
      }
      continue;
    }
    row_open = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\n' || c == '\r') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      row_open = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quoted CSV field");
  if (row_open) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> Manifest::Header() const {
  std::vector<std::string> header = {"concord_id", "project", "baseline_file"};
  for (const std::string& rep : representations) {
    header.push_back(rep + std::string(kFileSuffix));
  }
  header.push_back("label");
  header.push_back("split");
  return header;
}

std::string RenderManifest(const Manifest& manifest) {
  std::vector<CsvRow> rows{manifest.Header()};
  for (const ManifestRow& r : manifest.rows) {
    CsvRow row = {std::to_string(r.concord_id), r.project, r.baseline_file};
    for (const std::string& rep : manifest.representations) {
      auto it = r.files.find(rep);
      row.push_back(it == r.files.end() ? "" : it->second);
    }
    row.push_back(std::to_string(r.label));
    row.push_back(r.split);
    rows.push_back(std::move(row));
  }
  return RenderCsv(rows);
}

Manifest ParseManifest(std::string_view text) {
  std::vector<CsvRow> rows = ParseCsv(text);
  if (rows.empty()) throw std::invalid_argument("manifest has no header");
  const CsvRow& header = rows.front();
  if (header.size() < 5 || header[0] != "concord_id" ||
      header[1] != "project" || header[2] != "baseline_file" ||
      header[header.size() - 2] != "label" || header.back() != "split") {
    throw std::invalid_argument("not a manifest header");
  }
  Manifest manifest;
  for (size_t i = 3; i + 2 < header.size(); ++i) {
    const std::string& column = header[i];
    if (column.size() <= kFileSuffix.size() ||
        column.compare(column.size() - kFileSuffix.size(), kFileSuffix.size(),
                       kFileSuffix) != 0) {
      throw std::invalid_argument("manifest column '" + column +
                                  "' does not end in _file");
    }
    manifest.representations.push_back(
        column.substr(0, column.size() - kFileSuffix.size()));
  }
  for (size_t r = 1; r < rows.size(); ++r) {
    const CsvRow& fields = rows[r];
    if (IsBlankRow(fields)) continue;
    if (fields.size() != header.size()) {
      throw std::invalid_argument("manifest row " + std::to_string(r + 1) +
                                  " has " + std::to_string(fields.size()) +
                                  " fields, expected " +
                                  std::to_string(header.size()));
    }
    ManifestRow row;
    row.concord_id = ParseInt(fields[0], "concord_id");
    row.project = fields[1];
    row.baseline_file = fields[2];
    for (size_t i = 0; i < manifest.representations.size(); ++i) {
      row.files[manifest.representations[i]] = fields[3 + i];
    }
    row.label = ParseInt(fields[fields.size() - 2], "label");
    row.split = fields.back();
    manifest.rows.push_back(std::move(row));
  }
  return manifest;
}

void WriteManifest(const Manifest& manifest,
                   const std::filesystem::path& path) {
  WriteFile(path, RenderManifest(manifest));
}

Manifest ReadManifest(const std::filesystem::path& path) {
  return ParseManifest(ReadFile(path));
}

std::vector<std::filesystem::path> ReadRepoList(
    const std::filesystem::path& path) {
  std::vector<CsvRow> rows = ParseCsv(ReadFile(path));
  std::vector<std::filesystem::path> repos;
  std::filesystem::path base = path.parent_path();
  for (size_t i = 0; i < rows.size(); ++i) {
    if (IsBlankRow(rows[i])) continue;
    std::string entry = Trim(rows[i].front());
    if (i == 0 && entry == "repo_path") continue;
    if (entry.empty()) continue;
    std::filesystem::path repo(entry);
    repos.push_back(repo.is_absolute() ? repo : base / repo);
  }
  return repos;
}

std::map<std::pair<std::string, std::string>, Label> ReadLabels(
    const std::filesystem::path& path) {
  std::vector<CsvRow> rows = ParseCsv(ReadFile(path));
  std::map<std::pair<std::string, std::string>, Label> labels;
  for (size_t i = 0; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (IsBlankRow(row)) continue;
    if (i == 0 && Trim(row.front()) == "project") continue;
    if (row.size() < 3 || row.size() > 4) {
      throw std::invalid_argument("labels row " + std::to_string(i + 1) +
                                  ": expected project,unit,label[,split]");
    }
    Label label;
    label.label = ParseInt(Trim(row[2]), "label");
    if (row.size() == 4) label.split = Trim(row[3]);
    labels[{Trim(row[0]), Trim(row[1])}] = label;
  }
  return labels;
}

}  // namespace concord::pipeline
