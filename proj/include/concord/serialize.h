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

// Node-link JSON for code graphs, in the layout networkx reads:
//
//   {"directed": true, "multigraph": true,
//    "nodes": [{"id": 1, "kind": "METHOD_DECL", "code": "...", "line": 1}],
//    "links": [{"source": 1, "target": 2, "label": "AST"}]}
//
// written on one line with `", "` / `": "` separators, non-ASCII escaped,
// nodes sorted by id, links by (source, target, label), and a trailing
// newline.

#ifndef CONCORD_SERIALIZE_H_
#define CONCORD_SERIALIZE_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "concord/graphs.h"

namespace concord::pipeline {

std::string SerializeGraph(const graph::CodeGraph& g);

// Creates parent directories. Throws std::runtime_error when the file cannot
// be written.
void WriteGraph(const graph::CodeGraph& g, const std::filesystem::path& path);

// Inverse of SerializeGraph (unit and bases are not stored). Throws
// std::invalid_argument for malformed documents.
graph::CodeGraph ParseGraph(std::string_view text);
graph::CodeGraph ReadGraph(const std::filesystem::path& path);

// Whole-file helpers. ReadFile throws std::runtime_error when the file cannot
// be opened.
std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view content);

bool IsValidUtf8(std::string_view text);

}  // namespace concord::pipeline

#endif  // CONCORD_SERIALIZE_H_
