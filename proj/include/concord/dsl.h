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

// The configuration language: lexing, PEG-style parsing, semantic checks and
// canonical rendering.
//
// Concrete syntax:
//
//   Tasks {
//     <name> {
//       (Edge add <edge_type> | Node remove <node_type>)*
//       [Conditions { ((exclude|include) <block>_block)* }]
//     }*
//   }
//   Representations {
//     <name> { "<repo_list>" "<output_dir>" <AST|CFG|PDG>+ <task_ref>+ }*
//   }
//
// Comments (/* ... */ and // ...) may appear between any two tokens.

#ifndef CONCORD_DSL_H_
#define CONCORD_DSL_H_

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "concord/vocabulary.h"

namespace concord::dsl {

struct SourceLocation {
  std::string file;
  int line = 0;
  int column = 0;
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string message;
  SourceLocation location;
};

// "error: file:line:col: message"
std::string FormatDiagnostic(const Diagnostic& diagnostic);

enum class OpType { kAdd, kRemove };
// The leading Node/Edge keyword.
enum class GraphElement { kNode, kEdge };

struct Operation {
  GraphElement element = GraphElement::kEdge;
  OpType op_type = OpType::kAdd;
  std::variant<EdgeKind, NodeKind> target;
  SourceLocation location;

  bool targets_edge() const { return std::holds_alternative<EdgeKind>(target); }
  // Structural equality ignores the location.
  friend bool operator==(const Operation& a, const Operation& b) {
    return a.element == b.element && a.op_type == b.op_type &&
           a.target == b.target;
  }
};

std::string ToString(const Operation& op);  // "Edge add next_token"

enum class ConditionAction { kExclude, kInclude };

struct CodeCondition {
  ConditionAction action = ConditionAction::kExclude;
  BlockKind block = BlockKind::kIf;

  friend bool operator==(const CodeCondition&,
                         const CodeCondition&) = default;
};

struct Task {
  std::string name;
  std::vector<Operation> operations;
  std::vector<CodeCondition> conditions;
  SourceLocation location;

  friend bool operator==(const Task& a, const Task& b) {
    return a.name == b.name && a.operations == b.operations &&
           a.conditions == b.conditions;
  }
};

struct RepresentationSpec {
  std::string name;
  std::string repo_list_path;
  std::string output_dir;
  std::set<BaseGraphKind> base;
  std::vector<std::string> tasks;
  SourceLocation location;

  friend bool operator==(const RepresentationSpec& a,
                         const RepresentationSpec& b) {
    return a.name == b.name && a.repo_list_path == b.repo_list_path &&
           a.output_dir == b.output_dir && a.base == b.base &&
           a.tasks == b.tasks;
  }
};

struct ConcordModel {
  // Declaration order is preserved; names are unique.
  std::vector<Task> tasks;
  std::vector<RepresentationSpec> representations;
  std::vector<Diagnostic> diagnostics;

  const Task* FindTask(std::string_view name) const;
  bool HasErrors() const;
  bool Executable() const { return !HasErrors(); }

  // Structural equality: diagnostics and locations are not compared.
  friend bool operator==(const ConcordModel& a, const ConcordModel& b) {
    return a.tasks == b.tasks && a.representations == b.representations;
  }
};

// Thrown by ParseConfig. Carries every syntax error found (the parser stops
// at the first one, so in practice there is exactly one).
class SyntaxError : public std::runtime_error {
 public:
  explicit SyntaxError(std::vector<Diagnostic> errors);
  const std::vector<Diagnostic>& errors() const { return errors_; }

 private:
  std::vector<Diagnostic> errors_;
};

ConcordModel ParseConfig(std::string_view text,
                         std::string_view file_name = "<config>");

// Appends findings to model.diagnostics:
//   error   - op type / target mismatch (`Node remove next_token`)
//   error   - representation references an undeclared task
//   warning - the same operation listed twice in one task
//   warning - next_token / next_sibling without an AST base
//   warning - Node/Edge keyword disagrees with an otherwise valid target
ConcordModel ValidateSemantics(ConcordModel model);

// Parse followed by validation.
ConcordModel LoadConfig(std::string_view text,
                        std::string_view file_name = "<config>");

// Canonical concrete syntax. Throws std::invalid_argument when the model
// carries error diagnostics.
std::string RenderConfig(const ConcordModel& model);

}  // namespace concord::dsl

#endif  // CONCORD_DSL_H_
