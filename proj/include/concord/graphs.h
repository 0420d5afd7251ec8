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

// Base graph representations (AST, CFG, PDG) of a method and their merge.
//
// Graph node ids are the ids of the underlying syntax-tree nodes, so CFG and
// PDG edges land on the same nodes as the AST edges and merging is a plain
// edge union.

#ifndef CONCORD_GRAPHS_H_
#define CONCORD_GRAPHS_H_

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "concord/subject_ast.h"
#include "concord/vocabulary.h"

namespace concord::graph {

using subject::NodeId;

enum class EdgeLabel {
  kAst,
  kCfg,
  kPdgData,
  kPdgCtrl,
  kNextToken,
  kNextSibling,
  kLastRead,
  kLastWrite,
  kLastLexicalUse,
  kComputedFrom,
  kReturnsTo,
  kGuardedBy,
  kGuardedByNegation,
  kWhileExec,
  kWhileNext,
  kForExec,
  kForNext,
};

inline constexpr std::array kAllEdgeLabels = {
    EdgeLabel::kAst,          EdgeLabel::kCfg,
    EdgeLabel::kPdgData,      EdgeLabel::kPdgCtrl,
    EdgeLabel::kNextToken,    EdgeLabel::kNextSibling,
    EdgeLabel::kLastRead,     EdgeLabel::kLastWrite,
    EdgeLabel::kLastLexicalUse, EdgeLabel::kComputedFrom,
    EdgeLabel::kReturnsTo,    EdgeLabel::kGuardedBy,
    EdgeLabel::kGuardedByNegation, EdgeLabel::kWhileExec,
    EdgeLabel::kWhileNext,    EdgeLabel::kForExec,
    EdgeLabel::kForNext,
};

std::string_view ToString(EdgeLabel label);  // "NEXT_TOKEN"
std::optional<EdgeLabel> ParseEdgeLabel(std::string_view text);
bool IsBaseLabel(EdgeLabel label);

struct GraphNode {
  NodeId id = 0;
  subject::AstNodeKind kind = subject::AstNodeKind::kLiteral;
  std::string code;
  int line = 0;

  friend bool operator==(const GraphNode&, const GraphNode&) = default;
};

struct GraphEdge {
  NodeId source = 0;
  NodeId target = 0;
  EdgeLabel label = EdgeLabel::kAst;

  friend auto operator<=>(const GraphEdge& a, const GraphEdge& b) {
    return std::tie(a.source, a.target, a.label) <=>
           std::tie(b.source, b.target, b.label);
  }
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Directed labeled multigraph. Edges are kept sorted by (source, target,
// label); adding an existing triple is a no-op.
class CodeGraph {
 public:
  std::string unit;
  std::set<BaseGraphKind> bases;
  std::map<NodeId, GraphNode> nodes;
  std::set<GraphEdge> edges;

  bool has_node(NodeId id) const { return nodes.count(id) > 0; }
  void AddNode(GraphNode node);
  // Returns false for duplicates. Throws std::invalid_argument when an
  // endpoint is not a node of the graph.
  bool AddEdge(NodeId source, NodeId target, EdgeLabel label);
  size_t CountLabel(EdgeLabel label) const;
  std::vector<GraphEdge> EdgesWithLabel(EdgeLabel label) const;

  friend bool operator==(const CodeGraph&, const CodeGraph&) = default;
};

// Statement-level control flow graph of one method. `entry` is the
// METHOD_DECL node, `exit` its body BLOCK (entry == exit for bodyless
// declarations).
struct Cfg {
  NodeId unit = -1;
  NodeId entry = -1;
  NodeId exit = -1;
  std::vector<NodeId> statement_nodes;  // sorted, excludes entry and exit
  std::map<NodeId, std::vector<NodeId>> successors;
  // Innermost statement node owning each node of the method's subtree;
  // nodes outside every statement (signature, parameters) map to entry.
  std::map<NodeId, NodeId> statement_of;
  std::vector<std::string> diagnostics;

  std::vector<NodeId> all_nodes() const;  // entry, statements, exit
  std::map<NodeId, std::vector<NodeId>> predecessors() const;
};

// Throws std::out_of_range unless `unit` is a METHOD_DECL of `ast`.
CodeGraph BuildAstGraph(const subject::SubjectAst& ast, NodeId unit);
Cfg BuildCfg(const subject::SubjectAst& ast, NodeId unit);

// Variable occurrences of a method.
enum class Access { kRead, kWrite };

struct Occurrence {
  NodeId node = -1;  // IDENTIFIER leaf
  std::string name;
  Access access = Access::kRead;
  NodeId statement = -1;  // owning CFG node

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct OccurrenceTable {
  // Per variable, ordered by source position (reads before writes on the
  // same token, e.g. `x++`).
  std::map<std::string, std::vector<Occurrence>> by_variable;

  std::vector<Occurrence> OfStatement(NodeId statement) const;
};

// Identifiers that name variables: assignment targets, `++`/`--` operands,
// parameters and bare declarators are writes (compound assignments and
// increments are also reads); everything else is a read. Method names,
// callee names, member names after `.` and jump labels are not variables.
OccurrenceTable BuildOccurrences(const subject::SubjectAst& ast,
                                 const Cfg& cfg);

// Identifier written through an assignment target or increment operand
// (`x`, `(x)`, `x[i]`), or -1 (e.g. for member targets `a.b`).
NodeId WrittenIdentifier(const subject::SubjectAst& ast, NodeId target);

// PDG_DATA (reaching definitions) and PDG_CTRL (innermost syntactic governing
// predicate) edges.
std::vector<GraphEdge> BuildPdg(const subject::SubjectAst& ast,
                                const Cfg& cfg);

// Reaching definitions: for each CFG node, the set of (defining node,
// variable) pairs live on entry.
std::map<NodeId, std::set<std::pair<NodeId, std::string>>> ReachingDefinitions(
    const Cfg& cfg, const OccurrenceTable& occurrences);

// Throws std::invalid_argument for an empty selection or when a selected
// base was not supplied.
CodeGraph MergeBases(const subject::SubjectAst& ast,
                     const std::optional<CodeGraph>& ast_graph,
                     const std::optional<Cfg>& cfg,
                     const std::optional<std::vector<GraphEdge>>& pdg_edges,
                     const std::set<BaseGraphKind>& selection);

// Builds every selected base for `unit` and merges them.
CodeGraph BuildBaseGraph(const subject::SubjectAst& ast, NodeId unit,
                         const std::set<BaseGraphKind>& selection);

// Disjoint union with ids renumbered from 1 in input order, plus a synthetic
// TYPE_DECL node 0 with an AST edge to each method's root. Throws
// std::invalid_argument for an empty list.
CodeGraph MergeClass(const std::vector<CodeGraph>& method_graphs,
                     const std::string& class_name);

}  // namespace concord::graph

#endif  // CONCORD_GRAPHS_H_
