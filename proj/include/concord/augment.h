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

// Edge-addition operations applied on top of a merged base graph.
//
// Directions: NEXT_TOKEN and NEXT_SIBLING run forward in source order,
// LAST_READ / LAST_WRITE and LAST_LEXICAL_USE run from an occurrence back to
// earlier ones, COMPUTED_FROM from a right-hand-side token to the assigned
// variable, RETURNS_TO from a return statement to its method and GUARDED_BY
// from a variable use to the guarding condition.
//
// Only NEXT_TOKEN and NEXT_SIBLING insist on an AST base; the other
// operations silently skip edges whose endpoints are not in the graph.

#ifndef CONCORD_AUGMENT_H_
#define CONCORD_AUGMENT_H_

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "concord/dsl.h"
#include "concord/graphs.h"
#include "concord/subject_ast.h"
#include "concord/vocabulary.h"

namespace concord::augment {

using graph::CodeGraph;
using subject::NodeId;

class MissingBase : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// In-facts of one CFG node: per variable, the occurrences that may have
// been the last read and the last write before the node executes.
struct FlowState {
  std::map<std::string, std::set<NodeId>> last_reads;
  std::map<std::string, std::set<NodeId>> last_writes;

  friend bool operator==(const FlowState&, const FlowState&) = default;
};

using FlowFacts = std::map<NodeId, FlowState>;

FlowFacts ComputeFlowFacts(const graph::Cfg& cfg,
                           const graph::OccurrenceTable& occurrences);

// Per-method analysis results shared by the operations.
struct UnitContext {
  const subject::SubjectAst* ast = nullptr;
  NodeId unit = -1;
  graph::Cfg cfg;
  graph::OccurrenceTable occurrences;
  FlowFacts facts;
};

UnitContext MakeContext(const subject::SubjectAst& ast, NodeId unit);

void AddNextToken(CodeGraph& g, const std::vector<NodeId>& leaves);
void AddNextSibling(CodeGraph& g);
void AddLastReadWrite(CodeGraph& g, const FlowFacts& facts,
                      const graph::OccurrenceTable& occurrences);
void AddLastLexicalUse(CodeGraph& g,
                       const graph::OccurrenceTable& occurrences);
void AddComputedFrom(CodeGraph& g, const subject::SubjectAst& ast,
                     NodeId unit);
void AddReturnsTo(CodeGraph& g, const subject::SubjectAst& ast, NodeId unit);
void AddGuardedBy(CodeGraph& g, const subject::SubjectAst& ast, NodeId unit,
                  const graph::OccurrenceTable& occurrences);

enum class LoopKind { kWhile, kFor };
void AddLoopCfg(CodeGraph& g, const subject::SubjectAst& ast, NodeId unit,
                LoopKind kind);

bool RequiresAstBase(EdgeKind kind);

void ApplyEdgeOperation(CodeGraph& g, EdgeKind kind, const UnitContext& ctx);

// Applies the task's edge additions in declaration order; node removals are
// ignored (they act on source files). Throws MissingBase when an operation
// needs a base the graph lacks.
CodeGraph ApplyTask(CodeGraph g, const dsl::Task& task,
                    const UnitContext& ctx);

}  // namespace concord::augment

#endif  // CONCORD_AUGMENT_H_
