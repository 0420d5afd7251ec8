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

#include "concord/serialize.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace concord::pipeline {
namespace {

std::string Quote(std::string_view text) {
  return nlohmann::json(std::string(text)).dump(-1, ' ', /*ensure_ascii=*/true);
}

}  // namespace

std::string SerializeGraph(const graph::CodeGraph& g) {
  std::string out = "{\"directed\": true, \"multigraph\": true, \"nodes\": [";
  bool first = true;
  for (const auto& [id, node] : g.nodes) {
    if (!first) out += ", ";
    first = false;
    out += "{\"id\": " + std::to_string(id) +
           ", \"kind\": " + Quote(subject::ToString(node.kind)) +
           ", \"code\": " + Quote(node.code) +
           ", \"line\": " + std::to_string(node.line) + "}";
  }
  out += "], \"links\": [";
  first = true;
  for (const graph::GraphEdge& e : g.edges) {
    if (!first) out += ", ";
    first = false;
    out += "{\"source\": " + std::to_string(e.source) +
           ", \"target\": " + std::to_string(e.target) +
           ", \"label\": " + Quote(graph::ToString(e.label)) + "}";
  }
  out += "]}\n";
  return out;
}

void WriteGraph(const graph::CodeGraph& g, const std::filesystem::path& path) {
  WriteFile(path, SerializeGraph(g));
}

graph::CodeGraph ParseGraph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  graph::CodeGraph g;
  try {
    for (const auto& n : doc.at("nodes")) {
      auto kind = subject::ParseAstNodeKind(n.at("kind").get<std::string>());
      if (!kind) throw std::invalid_argument("unknown node kind");
      g.AddNode({n.at("id").get<int>(), *kind, n.at("code").get<std::string>(),
                 n.at("line").get<int>()});
    }
    for (const auto& e : doc.at("links")) {
      auto label = graph::ParseEdgeLabel(e.at("label").get<std::string>());
      if (!label) throw std::invalid_argument("unknown edge label");
      g.AddEdge(e.at("source").get<int>(), e.at("target").get<int>(), *label);
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("graph JSON: ") + e.what());
  }
  return g;
}

graph::CodeGraph ReadGraph(const std::filesystem::path& path) {
  return ParseGraph(ReadFile(path));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

bool IsValidUtf8(std::string_view text) {
  size_t i = 0;
  while (i < text.size()) {
    auto c = static_cast<unsigned char>(text[i]);
    size_t len;
    unsigned min;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      min = 0x80;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      min = 0x800;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      min = 0x10000;
    } else {
      return false;
    }
    if (i + len > text.size()) return false;
    unsigned code = c & (0xFF >> (len + 1));
    for (size_t k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(text[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      code = (code << 6) | (cc & 0x3F);
    }
    if (code < min || code > 0x10FFFF || (code >= 0xD800 && code <= 0xDFFF)) {
      return false;
    }
    i += len;
  }
  return true;
}

}  // namespace concord::pipeline
