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

// Closed token sets shared by the configuration language and the backends.

#ifndef CONCORD_VOCABULARY_H_
#define CONCORD_VOCABULARY_H_

#include <array>
#include <optional>
#include <string_view>

namespace concord {

enum class EdgeKind {
  kNextToken,
  kNextSibling,
  kForCfg,
  kWhileCfg,
  kLastReadWrite,
  kGuardedBy,
  kReturnsTo,
  kComputedFrom,
  kLastLexicalUse,
};

enum class NodeKind {
  kPrint,
  kLogging,
  kSysExit,
  kSimpleAssignment,
};

enum class BaseGraphKind { kAst, kCfg, kPdg };

enum class BlockKind { kCatch, kFor, kWhile, kIf, kElse };

inline constexpr std::array kAllEdgeKinds = {
    EdgeKind::kNextToken,     EdgeKind::kNextSibling, EdgeKind::kForCfg,
    EdgeKind::kWhileCfg,      EdgeKind::kLastReadWrite,
    EdgeKind::kGuardedBy,     EdgeKind::kReturnsTo,   EdgeKind::kComputedFrom,
    EdgeKind::kLastLexicalUse,
};
inline constexpr std::array kAllNodeKinds = {
    NodeKind::kPrint, NodeKind::kLogging, NodeKind::kSysExit,
    NodeKind::kSimpleAssignment};
inline constexpr std::array kAllBaseGraphKinds = {
    BaseGraphKind::kAst, BaseGraphKind::kCfg, BaseGraphKind::kPdg};
inline constexpr std::array kAllBlockKinds = {
    BlockKind::kCatch, BlockKind::kFor, BlockKind::kWhile, BlockKind::kIf,
    BlockKind::kElse};

// Configuration-language spellings.
std::string_view ToString(EdgeKind kind);
std::string_view ToString(NodeKind kind);
std::string_view ToString(BaseGraphKind kind);
// Bare block name ("while"); the configuration language writes "while_block".
std::string_view ToString(BlockKind kind);

std::optional<EdgeKind> ParseEdgeKind(std::string_view text);
std::optional<NodeKind> ParseNodeKind(std::string_view text);
std::optional<BaseGraphKind> ParseBaseGraphKind(std::string_view text);
// Accepts only the suffixed spelling, e.g. "if_block".
std::optional<BlockKind> ParseBlockToken(std::string_view text);

}  // namespace concord

#endif  // CONCORD_VOCABULARY_H_
