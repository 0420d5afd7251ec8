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

// Statement-level pruning of source files.
//
// Removable statements are found on the syntax tree, filtered by the task's
// code conditions and then deleted from the text by replacing exactly their
// byte range with the empty string. Everything else, including brackets and
// the `;` separators of for-headers, is preserved byte for byte.

#ifndef CONCORD_PRUNER_H_
#define CONCORD_PRUNER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "concord/dsl.h"
#include "concord/subject_ast.h"
#include "concord/vocabulary.h"
#include "json.hpp"

namespace concord::prune {

struct StatementSpan {
  NodeKind kind = NodeKind::kSimpleAssignment;
  std::string file;
  subject::Span span;
  int line = 0;
  std::set<BlockKind> enclosing;
  bool in_for_init = false;
  subject::NodeId node = -1;  // statement (or for-init) node in the tree

  friend bool operator==(const StatementSpan&, const StatementSpan&) = default;
};

struct ExemptedSpan {
  StatementSpan statement;
  // Excluded block that caused the exemption; empty when the statement lies
  // outside every `include`d block.
  std::optional<BlockKind> reason;
};

struct PruneReport {
  std::vector<StatementSpan> removed;
  std::vector<ExemptedSpan> exempted;
  size_t rewritten_bytes = 0;  // bytes deleted
};

// A task's node-removal targets together with its code conditions.
struct PruneRule {
  std::set<NodeKind> targets;
  std::vector<dsl::CodeCondition> conditions;
};

// True iff `node` is an ASSIGNMENT with the plain `=` operator whose left
// operand is a single IDENTIFIER and whose right operand is built only from
// LITERAL leaves combined by arithmetic, bitwise, logical or relational
// operators. Throws std::out_of_range for unknown ids.
bool IsSimpleAssignment(const subject::SubjectAst& ast, subject::NodeId node);

// Qualified callee of a call statement, e.g. "System.out.println"; empty when
// `expr_stmt` is not a plain call statement.
std::string CalleeName(const subject::SubjectAst& ast,
                       subject::NodeId expr_stmt);

std::vector<StatementSpan> CollectStatements(const subject::SubjectAst& ast,
                                             const std::set<NodeKind>& targets);

struct ConditionSplit {
  std::vector<StatementSpan> keep_removing;
  std::vector<ExemptedSpan> exempted;
};

// exclude: exempt statements inside any excluded block kind.
// include: remove only statements inside an included block kind.
// Both: a statement must be inside an included block and outside every
// excluded one.
ConditionSplit ApplyConditions(const std::vector<StatementSpan>& spans,
                               const std::vector<dsl::CodeCondition>& conditions);

struct RewriteResult {
  std::string text;
  PruneReport report;
};

// Deletes the byte range of every span. Spans nested inside another span are
// dropped first (outermost wins). Throws std::out_of_range when a span lies
// outside the text and std::invalid_argument for partially overlapping spans.
RewriteResult RewriteFile(std::string_view text,
                          std::vector<StatementSpan> spans);

// Parse, collect per rule, apply each rule's conditions and rewrite.
RewriteResult PruneSource(std::string_view text, const std::string& path,
                          const std::vector<PruneRule>& rules);

nlohmann::json ToJson(const PruneReport& report);

}  // namespace concord::prune

#endif  // CONCORD_PRUNER_H_
