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

#include "concord/augment.h"

#include <algorithm>
#include <deque>
#include <utility>

namespace concord::augment {

using graph::Access;
using graph::EdgeLabel;
using graph::Occurrence;
using graph::OccurrenceTable;
using subject::AstNode;
using subject::AstNodeKind;
using subject::SubjectAst;

namespace {

void AddIfPresent(CodeGraph& g, NodeId source, NodeId target,
                  EdgeLabel label) {
  if (g.has_node(source) && g.has_node(target)) {
    g.AddEdge(source, target, label);
  }
}

void RequireAst(const CodeGraph& g, std::string_view op) {
  if (!g.bases.count(BaseGraphKind::kAst)) {
    throw MissingBase(std::string(op) + " requires an AST base");
  }
}

std::vector<NodeId> NodesOfKind(const SubjectAst& ast, NodeId unit,
                                AstNodeKind kind) {
  std::vector<NodeId> out;
  for (NodeId id : ast.subtree(unit)) {
    if (ast.nodes[id].kind == kind) out.push_back(id);
  }
  return out;
}

// Final name of a call's callee: `f` in `f(x)` and `g` in `a.g(x)`.
bool IsCalleeName(const SubjectAst& ast, NodeId id) {
  NodeId parent = ast.nodes[id].parent;
  if (parent < 0) return false;
  const AstNode& p = ast.nodes[parent];
  if (p.kind == AstNodeKind::kCall) return ast.operands(parent).front() == id;
  if (p.kind == AstNodeKind::kFieldAccess) {
    std::vector<NodeId> ops = ast.operands(parent);
    NodeId grand = p.parent;
    return ops.size() > 1 && ops.back() == id && grand >= 0 &&
           ast.nodes[grand].kind == AstNodeKind::kCall &&
           ast.operands(grand).front() == parent;
  }
  return false;
}

}  // namespace

FlowFacts ComputeFlowFacts(const graph::Cfg& cfg,
                           const OccurrenceTable& occurrences) {
  // Per node: the reads and writes it performs, per variable.
  std::map<NodeId, FlowState> local;
  for (const auto& [name, list] : occurrences.by_variable) {
    for (const Occurrence& o : list) {
      auto& bucket = o.access == Access::kRead ? local[o.statement].last_reads
                                               : local[o.statement].last_writes;
      bucket[name].insert(o.node);
    }
  }
  auto transfer = [&](NodeId s, const FlowState& in) {
    FlowState out = in;
    auto it = local.find(s);
    if (it == local.end()) return out;
    for (const auto& [name, reads] : it->second.last_reads) {
      out.last_reads[name] = reads;
    }
    for (const auto& [name, writes] : it->second.last_writes) {
      out.last_writes[name] = writes;
    }
    return out;
  };
  std::vector<NodeId> order = cfg.all_nodes();
  auto preds = cfg.predecessors();
  FlowFacts in, out;
  for (NodeId s : order) {
    in[s];
    out[s];
  }
  std::deque<NodeId> work(order.begin(), order.end());
  std::set<NodeId> queued(order.begin(), order.end());
  while (!work.empty()) {
    NodeId s = work.front();
    work.pop_front();
    queued.erase(s);
    FlowState merged;
    for (NodeId p : preds[s]) {
      for (const auto& [name, ids] : out[p].last_reads) {
        merged.last_reads[name].insert(ids.begin(), ids.end());
      }
      for (const auto& [name, ids] : out[p].last_writes) {
        merged.last_writes[name].insert(ids.begin(), ids.end());
      }
    }
    in[s] = std::move(merged);
    FlowState next = transfer(s, in[s]);
    if (next == out[s]) continue;
    out[s] = std::move(next);
    auto succ = cfg.successors.find(s);
    if (succ == cfg.successors.end()) continue;
    for (NodeId t : succ->second) {
      if (queued.insert(t).second) work.push_back(t);
    }
  }
  return in;
}

UnitContext MakeContext(const SubjectAst& ast, NodeId unit) {
  UnitContext ctx;
  ctx.ast = &ast;
  ctx.unit = unit;
  ctx.cfg = graph::BuildCfg(ast, unit);
  ctx.occurrences = graph::BuildOccurrences(ast, ctx.cfg);
  ctx.facts = ComputeFlowFacts(ctx.cfg, ctx.occurrences);
  return ctx;
}

void AddNextToken(CodeGraph& g, const std::vector<NodeId>& leaves) {
  RequireAst(g, "next_token");
  for (size_t i = 1; i < leaves.size(); ++i) {
    g.AddEdge(leaves[i - 1], leaves[i], EdgeLabel::kNextToken);
  }
}

void AddNextSibling(CodeGraph& g) {
  RequireAst(g, "next_sibling");
  std::map<NodeId, std::vector<NodeId>> children;
  for (const graph::GraphEdge& e : g.edges) {
    if (e.label == EdgeLabel::kAst) children[e.source].push_back(e.target);
  }
  for (auto& [parent, kids] : children) {
    std::sort(kids.begin(), kids.end());
    for (size_t i = 1; i < kids.size(); ++i) {
      g.AddEdge(kids[i - 1], kids[i], EdgeLabel::kNextSibling);
    }
  }
}

void AddLastReadWrite(CodeGraph& g, const FlowFacts& facts,
                      const OccurrenceTable& occurrences) {
  for (const auto& [name, list] : occurrences.by_variable) {
    for (const Occurrence& o : list) {
      auto it = facts.find(o.statement);
      if (it == facts.end()) continue;
      const FlowState& state = it->second;
      if (auto r = state.last_reads.find(name); r != state.last_reads.end()) {
        for (NodeId target : r->second) {
          AddIfPresent(g, o.node, target, EdgeLabel::kLastRead);
        }
      }
      if (auto w = state.last_writes.find(name); w != state.last_writes.end()) {
        for (NodeId target : w->second) {
          AddIfPresent(g, o.node, target, EdgeLabel::kLastWrite);
        }
      }
    }
  }
}

void AddLastLexicalUse(CodeGraph& g, const OccurrenceTable& occurrences) {
  for (const auto& [name, list] : occurrences.by_variable) {
    std::vector<NodeId> chain;
    for (const Occurrence& o : list) {
      if (chain.empty() || chain.back() != o.node) chain.push_back(o.node);
    }
    for (size_t i = 1; i < chain.size(); ++i) {
      AddIfPresent(g, chain[i], chain[i - 1], EdgeLabel::kLastLexicalUse);
    }
  }
}

void AddComputedFrom(CodeGraph& g, const SubjectAst& ast, NodeId unit) {
  for (NodeId assign : NodesOfKind(ast, unit, AstNodeKind::kAssignment)) {
    std::vector<NodeId> ops = ast.operands(assign);
    if (ops.size() != 2) continue;
    NodeId target = graph::WrittenIdentifier(ast, ops[0]);
    if (target < 0) continue;
    for (NodeId id : ast.subtree(ops[1])) {
      const AstNode& n = ast.nodes[id];
      if (!n.is_leaf() || n.recovered) continue;
      if (n.kind != AstNodeKind::kIdentifier && n.kind != AstNodeKind::kLiteral) {
        continue;
      }
      if (n.kind == AstNodeKind::kIdentifier && IsCalleeName(ast, id)) continue;
      AddIfPresent(g, id, target, EdgeLabel::kComputedFrom);
    }
  }
}

void AddReturnsTo(CodeGraph& g, const SubjectAst& ast, NodeId unit) {
  for (NodeId ret : NodesOfKind(ast, unit, AstNodeKind::kReturnStmt)) {
    AddIfPresent(g, ret, unit, EdgeLabel::kReturnsTo);
  }
}

void AddGuardedBy(CodeGraph& g, const SubjectAst& ast, NodeId unit,
                  const OccurrenceTable& occurrences) {
  for (NodeId if_stmt : NodesOfKind(ast, unit, AstNodeKind::kIfStmt)) {
    subject::IfParts parts = subject::GetIfParts(ast, if_stmt);
    if (parts.condition < 0) continue;
    auto inside = [&](NodeId root, NodeId id) {
      return root >= 0 && (root == id || ast.is_ancestor(root, id));
    };
    for (const auto& [name, list] : occurrences.by_variable) {
      bool in_condition = std::any_of(
          list.begin(), list.end(),
          [&](const Occurrence& o) { return inside(parts.condition, o.node); });
      if (!in_condition) continue;
      for (const Occurrence& o : list) {
        if (inside(parts.then_branch, o.node)) {
          AddIfPresent(g, o.node, parts.condition, EdgeLabel::kGuardedBy);
        } else if (inside(parts.else_branch, o.node)) {
          AddIfPresent(g, o.node, parts.condition,
                       EdgeLabel::kGuardedByNegation);
        }
      }
    }
  }
}

void AddLoopCfg(CodeGraph& g, const SubjectAst& ast, NodeId unit,
                LoopKind kind) {
  if (kind == LoopKind::kWhile) {
    for (NodeId loop : NodesOfKind(ast, unit, AstNodeKind::kWhileStmt)) {
      subject::WhileParts parts = subject::GetWhileParts(ast, loop);
      NodeId head = parts.condition >= 0 ? parts.condition : loop;
      if (parts.body < 0) continue;
      AddIfPresent(g, head, parts.body, EdgeLabel::kWhileExec);
      AddIfPresent(g, parts.body, head, EdgeLabel::kWhileNext);
    }
    return;
  }
  for (NodeId loop : NodesOfKind(ast, unit, AstNodeKind::kForStmt)) {
    subject::ForParts parts = subject::GetForParts(ast, loop);
    if (parts.body < 0) continue;
    NodeId head = loop;
    if (parts.for_each && !parts.init.empty()) {
      head = parts.init.front();
    } else if (parts.condition >= 0) {
      head = parts.condition;
    }
    AddIfPresent(g, head, parts.body, EdgeLabel::kForExec);
    AddIfPresent(g, parts.body, head, EdgeLabel::kForNext);
  }
}

bool RequiresAstBase(EdgeKind kind) {
  return kind == EdgeKind::kNextToken || kind == EdgeKind::kNextSibling;
}

void ApplyEdgeOperation(CodeGraph& g, EdgeKind kind, const UnitContext& ctx) {
  const SubjectAst& ast = *ctx.ast;
  switch (kind) {
    case EdgeKind::kNextToken:
      AddNextToken(g, subject::LeavesInOrder(ast, ctx.unit));
      break;
    case EdgeKind::kNextSibling:
      AddNextSibling(g);
      break;
    case EdgeKind::kForCfg:
      AddLoopCfg(g, ast, ctx.unit, LoopKind::kFor);
      break;
    case EdgeKind::kWhileCfg:
      AddLoopCfg(g, ast, ctx.unit, LoopKind::kWhile);
      break;
    case EdgeKind::kLastReadWrite:
      AddLastReadWrite(g, ctx.facts, ctx.occurrences);
      break;
    case EdgeKind::kGuardedBy:
      AddGuardedBy(g, ast, ctx.unit, ctx.occurrences);
      break;
    case EdgeKind::kReturnsTo:
      AddReturnsTo(g, ast, ctx.unit);
      break;
    case EdgeKind::kComputedFrom:
      AddComputedFrom(g, ast, ctx.unit);
      break;
    case EdgeKind::kLastLexicalUse:
      AddLastLexicalUse(g, ctx.occurrences);
      break;
  }
}

CodeGraph ApplyTask(CodeGraph g, const dsl::Task& task,
                    const UnitContext& ctx) {
  for (const dsl::Operation& op : task.operations) {
    if (op.op_type != dsl::OpType::kAdd || !op.targets_edge()) continue;
    ApplyEdgeOperation(g, std::get<EdgeKind>(op.target), ctx);
  }
  return g;
}

}  // namespace concord::augment
