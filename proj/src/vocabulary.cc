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

#include "concord/vocabulary.h"

#include <string>

namespace concord {

std::string_view ToString(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::kNextToken:
      return "next_token";
    case EdgeKind::kNextSibling:
      return "next_sibling";
    case EdgeKind::kForCfg:
      return "for_cfg";
    case EdgeKind::kWhileCfg:
      return "while_cfg";
    case EdgeKind::kLastReadWrite:
      return "last_read_write";
    case EdgeKind::kGuardedBy:
      return "guarded_by";
    case EdgeKind::kReturnsTo:
      return "returns_to";
    case EdgeKind::kComputedFrom:
      return "computed_from";
    case EdgeKind::kLastLexicalUse:
      return "last_lexical_use";
  }
  return "?";
}

std::string_view ToString(NodeKind kind) {
  switch (kind) {
    case NodeKind::kPrint:
      return "print";
    case NodeKind::kLogging:
      return "logging";
    case NodeKind::kSysExit:
      return "sys_exit";
    case NodeKind::kSimpleAssignment:
      return "simple_assignment";
  }
  return "?";
}

std::string_view ToString(BaseGraphKind kind) {
  switch (kind) {
    case BaseGraphKind::kAst:
      return "AST";
    case BaseGraphKind::kCfg:
      return "CFG";
    case BaseGraphKind::kPdg:
      return "PDG";
  }
  return "?";
}

std::string_view ToString(BlockKind kind) {
  switch (kind) {
    case BlockKind::kCatch:
      return "catch";
    case BlockKind::kFor:
      return "for";
    case BlockKind::kWhile:
      return "while";
    case BlockKind::kIf:
      return "if";
    case BlockKind::kElse:
      return "else";
  }
  return "?";
}

std::optional<EdgeKind> ParseEdgeKind(std::string_view text) {
  for (EdgeKind kind : kAllEdgeKinds) {
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::optional<NodeKind> ParseNodeKind(std::string_view text) {
  for (NodeKind kind : kAllNodeKinds) {
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::optional<BaseGraphKind> ParseBaseGraphKind(std::string_view text) {
  for (BaseGraphKind kind : kAllBaseGraphKinds) {
    if (ToString(kind) == text) return kind;
  }
  return std::nullopt;
}

std::optional<BlockKind> ParseBlockToken(std::string_view text) {
  constexpr std::string_view kSuffix = "_block";
  if (text.size() <= kSuffix.size() ||
      text.substr(text.size() - kSuffix.size()) != kSuffix) {
    return std::nullopt;
  }
  std::string_view bare = text.substr(0, text.size() - kSuffix.size());
  for (BlockKind kind : kAllBlockKinds) {
    if (ToString(kind) == bare) return kind;
  }
  return std::nullopt;
}

}  // namespace concord
