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

#include "concord/graphs.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <utility>

namespace concord::graph {

using subject::AstNode;
using subject::AstNodeKind;
using subject::SubjectAst;

namespace {

constexpr std::array<std::pair<EdgeLabel, std::string_view>, 17> kLabelNames =
    {{
        {EdgeLabel::kAst, "AST"},
        {EdgeLabel::kCfg, "CFG"},
        {EdgeLabel::kPdgData, "PDG_DATA"},
        {EdgeLabel::kPdgCtrl, "PDG_CTRL"},
        {EdgeLabel::kNextToken, "NEXT_TOKEN"},
        {EdgeLabel::kNextSibling, "NEXT_SIBLING"},
        {EdgeLabel::kLastRead, "LAST_READ"},
        {EdgeLabel::kLastWrite, "LAST_WRITE"},
        {EdgeLabel::kLastLexicalUse, "LAST_LEXICAL_USE"},
        {EdgeLabel::kComputedFrom, "COMPUTED_FROM"},
        {EdgeLabel::kReturnsTo, "RETURNS_TO"},
        {EdgeLabel::kGuardedBy, "GUARDED_BY"},
        {EdgeLabel::kGuardedByNegation, "GUARDED_BY_NEGATION"},
        {EdgeLabel::kWhileExec, "WHILE_EXEC"},
        {EdgeLabel::kWhileNext, "WHILE_NEXT"},
        {EdgeLabel::kForExec, "FOR_EXEC"},
        {EdgeLabel::kForNext, "FOR_NEXT"},
    }};

void CheckMethod(const SubjectAst& ast, NodeId unit) {
  if (!ast.contains(unit) ||
      ast.nodes[unit].kind != AstNodeKind::kMethodDecl) {
    throw std::out_of_range("not a METHOD_DECL: " + std::to_string(unit));
  }
}

GraphNode ToGraphNode(const AstNode& n) {
  return GraphNode{n.id, n.kind, n.code, n.line};
}

// "break", "continue", "throw" or "" for an EXPR_STMT.
std::string_view JumpKeyword(const SubjectAst& ast, NodeId stmt) {
  const AstNode& n = ast.nodes[stmt];
  if (n.kind != AstNodeKind::kExprStmt || n.children.empty()) return "";
  const AstNode& first = ast.nodes[n.children.front()];
  if (!first.symbol) return "";
  if (first.code == "break" || first.code == "continue" ||
      first.code == "throw") {
    return first.code;
  }
  return "";
}

class CfgBuilder {
 public:
  CfgBuilder(const SubjectAst& ast, NodeId unit) : ast_(ast) {
    cfg_.unit = unit;
    cfg_.entry = unit;
    NodeId body = subject::BodyOf(ast, unit);
    cfg_.exit = body >= 0 ? body : unit;
  }

  Cfg Build() {
    if (cfg_.exit != cfg_.entry) {
      std::vector<NodeId> out = Sequence(ast_.operands(cfg_.exit), {cfg_.entry});
      Link(out, cfg_.exit);
    }
    cfg_.statement_nodes.assign(statements_.begin(), statements_.end());
    for (NodeId id : cfg_.all_nodes()) cfg_.successors[id];
    AttachUnreachable();
    AttachDeadEnds();
    FillOwners();
    return std::move(cfg_);
  }

 private:
  struct Loop {
    NodeId continue_target = -1;
    std::vector<NodeId> breaks;
  };

  void Link(const std::vector<NodeId>& preds, NodeId head) {
    for (NodeId p : preds) {
      std::vector<NodeId>& succ = cfg_.successors[p];
      if (std::find(succ.begin(), succ.end(), head) == succ.end()) {
        succ.push_back(head);
      }
    }
  }

  NodeId Statement(NodeId id, const std::vector<NodeId>& preds) {
    statements_.insert(id);
    Link(preds, id);
    return id;
  }

  std::vector<NodeId> Sequence(const std::vector<NodeId>& stmts,
                               std::vector<NodeId> preds) {
    for (NodeId s : stmts) preds = Flow(s, std::move(preds));
    return preds;
  }

  std::vector<NodeId> Flow(NodeId s, std::vector<NodeId> preds) {
    switch (ast_.nodes[s].kind) {
      case AstNodeKind::kBlock: {
        std::vector<NodeId> inner = ast_.operands(s);
        if (inner.empty()) return {Statement(s, preds)};
        return Sequence(inner, std::move(preds));
      }
      case AstNodeKind::kIfStmt:
        return FlowIf(s, preds);
      case AstNodeKind::kWhileStmt:
        return FlowWhile(s, preds);
      case AstNodeKind::kForStmt:
        return FlowFor(s, preds);
      case AstNodeKind::kTryStmt:
        return FlowTry(s, preds);
      case AstNodeKind::kReturnStmt:
        Statement(s, preds);
        Link({s}, cfg_.exit);
        return {};
      default:
        break;
    }
    std::string_view jump = JumpKeyword(ast_, s);
    Statement(s, preds);
    if (jump == "break") {
      if (loops_.empty()) {
        Link({s}, cfg_.exit);
      } else {
        loops_.back()->breaks.push_back(s);
      }
      return {};
    }
    if (jump == "continue") {
      Link({s}, loops_.empty() ? cfg_.exit : loops_.back()->continue_target);
      return {};
    }
    if (jump == "throw") {
      Link({s}, cfg_.exit);
      return {};
    }
    return {s};
  }

  std::vector<NodeId> FlowIf(NodeId s, const std::vector<NodeId>& preds) {
    subject::IfParts parts = subject::GetIfParts(ast_, s);
    NodeId cond = Statement(parts.condition >= 0 ? parts.condition : s, preds);
    std::vector<NodeId> out =
        parts.then_branch >= 0 ? Flow(parts.then_branch, {cond})
                               : std::vector<NodeId>{cond};
    if (parts.else_branch >= 0) {
      std::vector<NodeId> other = Flow(parts.else_branch, {cond});
      out.insert(out.end(), other.begin(), other.end());
    } else {
      out.push_back(cond);
    }
    return out;
  }

  std::vector<NodeId> FlowWhile(NodeId s, const std::vector<NodeId>& preds) {
    subject::WhileParts parts = subject::GetWhileParts(ast_, s);
    NodeId cond = Statement(parts.condition >= 0 ? parts.condition : s, preds);
    Loop loop{cond, {}};
    std::vector<NodeId> body_out = LoopBody(parts.body, cond, loop);
    Link(body_out, cond);
    std::vector<NodeId> out{cond};
    out.insert(out.end(), loop.breaks.begin(), loop.breaks.end());
    return out;
  }

  std::vector<NodeId> FlowFor(NodeId s, std::vector<NodeId> preds) {
    subject::ForParts parts = subject::GetForParts(ast_, s);
    NodeId head;
    std::vector<NodeId> update;
    if (parts.for_each) {
      // The header declaration is re-assigned before every iteration.
      head = Statement(parts.init.empty() ? s : parts.init.front(), preds);
    } else {
      for (NodeId init : parts.init) preds = {Statement(init, preds)};
      head = Statement(parts.condition >= 0 ? parts.condition : s, preds);
      update = parts.update;
    }
    Loop loop{update.empty() ? head : update.front(), {}};
    std::vector<NodeId> tail = LoopBody(parts.body, head, loop);
    for (NodeId u : update) tail = {Statement(u, tail)};
    Link(tail, head);
    std::vector<NodeId> out{head};
    out.insert(out.end(), loop.breaks.begin(), loop.breaks.end());
    return out;
  }

  std::vector<NodeId> LoopBody(NodeId body, NodeId head, Loop& loop) {
    if (body < 0) return {head};
    loops_.push_back(&loop);
    std::vector<NodeId> out = Flow(body, {head});
    loops_.pop_back();
    return out;
  }

  std::vector<NodeId> FlowTry(NodeId s, const std::vector<NodeId>& preds) {
    subject::TryParts parts = subject::GetTryParts(ast_, s);
    std::vector<NodeId> out =
        parts.body >= 0 ? Flow(parts.body, preds) : preds;
    std::vector<NodeId> guarded;
    if (parts.body >= 0) {
      for (NodeId st : statements_) {
        if (ast_.is_ancestor(parts.body, st) || st == parts.body) {
          guarded.push_back(st);
        }
      }
    }
    if (guarded.empty()) guarded = preds;
    for (NodeId c : parts.catches) {
      Statement(c, guarded);
      NodeId body = subject::BodyOf(ast_, c);
      std::vector<NodeId> handler =
          body >= 0 ? Flow(body, {c}) : std::vector<NodeId>{c};
      out.insert(out.end(), handler.begin(), handler.end());
    }
    if (parts.finally_block >= 0) return Flow(parts.finally_block, out);
    return out;
  }

  // Statements without a path from entry get an entry edge.
  void AttachUnreachable() {
    while (true) {
      std::set<NodeId> seen = Reach(cfg_.entry, cfg_.successors);
      NodeId orphan = -1;
      for (NodeId s : cfg_.statement_nodes) {
        if (!seen.count(s)) {
          orphan = s;
          break;
        }
      }
      if (orphan < 0) return;
      Link({cfg_.entry}, orphan);
      cfg_.diagnostics.push_back("unreachable statement at line " +
                                 std::to_string(ast_.nodes[orphan].line));
    }
  }

  // Statements without a path to exit get an exit edge.
  void AttachDeadEnds() {
    if (cfg_.entry == cfg_.exit) return;
    std::set<NodeId> alive = Reach(cfg_.exit, cfg_.predecessors());
    for (NodeId s : cfg_.statement_nodes) {
      if (alive.count(s)) continue;
      Link({s}, cfg_.exit);
      cfg_.diagnostics.push_back("statement at line " +
                                 std::to_string(ast_.nodes[s].line) +
                                 " cannot reach the method exit");
      alive = Reach(cfg_.exit, cfg_.predecessors());
    }
  }

  static std::set<NodeId> Reach(NodeId from,
                                const std::map<NodeId, std::vector<NodeId>>& g) {
    std::set<NodeId> seen{from};
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
      NodeId cur = stack.back();
      stack.pop_back();
      auto it = g.find(cur);
      if (it == g.end()) continue;
      for (NodeId next : it->second) {
        if (seen.insert(next).second) stack.push_back(next);
      }
    }
    return seen;
  }

  void FillOwners() {
    for (NodeId n : ast_.subtree(cfg_.unit)) cfg_.statement_of[n] = cfg_.entry;
    // Ascending ids visit outer statements first, so inner ones win.
    for (NodeId s : cfg_.statement_nodes) {
      for (NodeId n : ast_.subtree(s)) cfg_.statement_of[n] = s;
    }
    for (NodeId n : ast_.subtree(cfg_.unit)) {
      if (ast_.nodes[n].kind != AstNodeKind::kForStmt) continue;
      subject::ForParts parts = subject::GetForParts(ast_, n);
      if (!parts.for_each || parts.init.empty()) continue;
      for (NodeId u : parts.update) {
        for (NodeId m : ast_.subtree(u)) {
          cfg_.statement_of[m] = parts.init.front();
        }
      }
    }
  }

  const SubjectAst& ast_;
  Cfg cfg_;
  std::set<NodeId> statements_;
  std::vector<Loop*> loops_;
};

bool IsIncrement(const AstNode& n) {
  return n.kind == AstNodeKind::kOperator &&
         (n.op_name == "preIncrement" || n.op_name == "preDecrement" ||
          n.op_name == "postIncrement" || n.op_name == "postDecrement");
}

// Identifiers that are names rather than variables.
bool IsNonVariable(const SubjectAst& ast, NodeId id) {
  NodeId parent_id = ast.nodes[id].parent;
  if (parent_id < 0) return true;
  const AstNode& parent = ast.nodes[parent_id];
  switch (parent.kind) {
    case AstNodeKind::kMethodDecl:
    case AstNodeKind::kTypeDecl:
      return true;
    case AstNodeKind::kCall:
      return ast.operands(parent_id).front() == id;
    case AstNodeKind::kFieldAccess: {
      std::vector<NodeId> ops = ast.operands(parent_id);
      return ops.size() > 1 && ops.front() != id;
    }
    case AstNodeKind::kExprStmt: {
      std::string_view jump = JumpKeyword(ast, parent_id);
      return jump == "break" || jump == "continue";
    }
    default:
      return false;
  }
}

}  // namespace

std::string_view ToString(EdgeLabel label) {
  for (const auto& [l, name] : kLabelNames) {
    if (l == label) return name;
  }
  return "?";
}

std::optional<EdgeLabel> ParseEdgeLabel(std::string_view text) {
  for (const auto& [l, name] : kLabelNames) {
    if (name == text) return l;
  }
  return std::nullopt;
}

bool IsBaseLabel(EdgeLabel label) {
  return label == EdgeLabel::kAst || label == EdgeLabel::kCfg ||
         label == EdgeLabel::kPdgData || label == EdgeLabel::kPdgCtrl;
}

void CodeGraph::AddNode(GraphNode node) {
  NodeId id = node.id;
  nodes.insert_or_assign(id, std::move(node));
}

bool CodeGraph::AddEdge(NodeId source, NodeId target, EdgeLabel label) {
  if (!has_node(source) || !has_node(target)) {
    throw std::invalid_argument("edge " + std::to_string(source) + " -> " +
                                std::to_string(target) + " (" +
                                std::string(ToString(label)) +
                                ") has an endpoint outside the graph");
  }
  return edges.insert(GraphEdge{source, target, label}).second;
}

size_t CodeGraph::CountLabel(EdgeLabel label) const {
  return static_cast<size_t>(
      std::count_if(edges.begin(), edges.end(),
                    [&](const GraphEdge& e) { return e.label == label; }));
}

std::vector<GraphEdge> CodeGraph::EdgesWithLabel(EdgeLabel label) const {
  std::vector<GraphEdge> out;
  for (const GraphEdge& e : edges) {
    if (e.label == label) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> Cfg::all_nodes() const {
  std::vector<NodeId> out{entry};
  out.insert(out.end(), statement_nodes.begin(), statement_nodes.end());
  if (exit != entry) out.push_back(exit);
  return out;
}

std::map<NodeId, std::vector<NodeId>> Cfg::predecessors() const {
  std::map<NodeId, std::vector<NodeId>> preds;
  for (NodeId id : all_nodes()) preds[id];
  for (const auto& [from, succ] : successors) {
    for (NodeId to : succ) preds[to].push_back(from);
  }
  return preds;
}

std::vector<Occurrence> OccurrenceTable::OfStatement(NodeId statement) const {
  std::vector<Occurrence> out;
  for (const auto& [name, list] : by_variable) {
    for (const Occurrence& o : list) {
      if (o.statement == statement) out.push_back(o);
    }
  }
  return out;
}

NodeId WrittenIdentifier(const SubjectAst& ast, NodeId expr) {
  const AstNode& n = ast.nodes[expr];
  if (n.kind == AstNodeKind::kIdentifier) return expr;
  if (n.kind == AstNodeKind::kOperator &&
      (n.op_name == "paren" || n.op_name == "index")) {
    std::vector<NodeId> ops = ast.operands(expr);
    if (!ops.empty()) return WrittenIdentifier(ast, ops.front());
  }
  return -1;
}

CodeGraph BuildAstGraph(const SubjectAst& ast, NodeId unit) {
  CheckMethod(ast, unit);
  CodeGraph g;
  g.unit = ast.declared_name(unit);
  g.bases = {BaseGraphKind::kAst};
  std::vector<NodeId> ids = ast.subtree(unit);
  for (NodeId id : ids) g.AddNode(ToGraphNode(ast.nodes[id]));
  for (NodeId id : ids) {
    for (NodeId child : ast.nodes[id].children) {
      g.AddEdge(id, child, EdgeLabel::kAst);
    }
  }
  return g;
}

Cfg BuildCfg(const SubjectAst& ast, NodeId unit) {
  CheckMethod(ast, unit);
  return CfgBuilder(ast, unit).Build();
}

OccurrenceTable BuildOccurrences(const SubjectAst& ast, const Cfg& cfg) {
  CheckMethod(ast, cfg.unit);
  std::set<NodeId> writes;
  std::set<NodeId> read_writes;
  std::vector<NodeId> ids = ast.subtree(cfg.unit);
  for (NodeId id : ids) {
    const AstNode& n = ast.nodes[id];
    if (n.kind == AstNodeKind::kAssignment) {
      std::vector<NodeId> ops = ast.operands(id);
      if (ops.empty()) continue;
      NodeId target = WrittenIdentifier(ast, ops.front());
      if (target < 0) continue;
      bool also_read = n.op_name != "assign" ||
                       ast.nodes[ops.front()].kind != AstNodeKind::kIdentifier;
      (also_read ? read_writes : writes).insert(target);
    } else if (IsIncrement(n)) {
      std::vector<NodeId> ops = ast.operands(id);
      if (ops.empty()) continue;
      NodeId target = WrittenIdentifier(ast, ops.front());
      if (target >= 0) read_writes.insert(target);
    } else if (n.kind == AstNodeKind::kParam ||
               n.kind == AstNodeKind::kLocalDecl) {
      for (NodeId child : ast.operands(id)) {
        if (ast.nodes[child].kind == AstNodeKind::kIdentifier) {
          writes.insert(child);
        }
      }
    }
  }
  OccurrenceTable table;
  for (NodeId id : ids) {
    const AstNode& n = ast.nodes[id];
    if (n.kind != AstNodeKind::kIdentifier || n.recovered) continue;
    bool written = writes.count(id) > 0;
    bool both = read_writes.count(id) > 0;
    if (!written && !both && IsNonVariable(ast, id)) continue;
    auto owner = cfg.statement_of.find(id);
    NodeId stmt = owner == cfg.statement_of.end() ? cfg.entry : owner->second;
    auto& list = table.by_variable[n.code];
    if (!written) list.push_back({id, n.code, Access::kRead, stmt});
    if (written || both) list.push_back({id, n.code, Access::kWrite, stmt});
  }
  for (auto& [name, list] : table.by_variable) {
    std::stable_sort(list.begin(), list.end(),
                     [&](const Occurrence& a, const Occurrence& b) {
                       return ast.nodes[a.node].span.begin <
                              ast.nodes[b.node].span.begin;
                     });
  }
  return table;
}

std::map<NodeId, std::set<std::pair<NodeId, std::string>>> ReachingDefinitions(
    const Cfg& cfg, const OccurrenceTable& occurrences) {
  using Def = std::pair<NodeId, std::string>;
  std::map<NodeId, std::set<std::string>> defined;
  for (const auto& [name, list] : occurrences.by_variable) {
    for (const Occurrence& o : list) {
      if (o.access == Access::kWrite) defined[o.statement].insert(name);
    }
  }
  std::vector<NodeId> order = cfg.all_nodes();
  auto preds = cfg.predecessors();
  std::map<NodeId, std::set<Def>> in, out;
  auto transfer = [&](NodeId s) {
    std::set<Def> result;
    const std::set<std::string>& kills = defined[s];
    for (const Def& d : in[s]) {
      if (!kills.count(d.second)) result.insert(d);
    }
    for (const std::string& x : kills) result.insert({s, x});
    return result;
  };
  std::deque<NodeId> work(order.begin(), order.end());
  std::set<NodeId> queued(order.begin(), order.end());
  while (!work.empty()) {
    NodeId s = work.front();
    work.pop_front();
    queued.erase(s);
    std::set<Def> merged;
    for (NodeId p : preds[s]) merged.insert(out[p].begin(), out[p].end());
    in[s] = std::move(merged);
    std::set<Def> next = transfer(s);
    if (next == out[s]) continue;
    out[s] = std::move(next);
    for (NodeId succ : cfg.successors.at(s)) {
      if (queued.insert(succ).second) work.push_back(succ);
    }
  }
  for (NodeId s : order) in[s];
  return in;
}

std::vector<GraphEdge> BuildPdg(const SubjectAst& ast, const Cfg& cfg) {
  std::set<GraphEdge> edges;
  OccurrenceTable occ = BuildOccurrences(ast, cfg);
  auto reaching = ReachingDefinitions(cfg, occ);
  for (const auto& [name, list] : occ.by_variable) {
    for (const Occurrence& o : list) {
      if (o.access != Access::kRead) continue;
      for (const auto& [def, var] : reaching[o.statement]) {
        if (var == name) edges.insert({def, o.statement, EdgeLabel::kPdgData});
      }
    }
  }
  for (NodeId s : cfg.statement_nodes) {
    NodeId child = s;
    for (NodeId p = ast.nodes[s].parent; p >= 0 && p != cfg.unit;
         child = p, p = ast.nodes[p].parent) {
      NodeId predicate = -1;
      switch (ast.nodes[p].kind) {
        case AstNodeKind::kIfStmt: {
          subject::IfParts parts = subject::GetIfParts(ast, p);
          if (child == parts.then_branch || child == parts.else_clause) {
            predicate = parts.condition >= 0 ? parts.condition : p;
          }
          break;
        }
        case AstNodeKind::kWhileStmt: {
          subject::WhileParts parts = subject::GetWhileParts(ast, p);
          if (child == parts.body) {
            predicate = parts.condition >= 0 ? parts.condition : p;
          }
          break;
        }
        case AstNodeKind::kForStmt: {
          subject::ForParts parts = subject::GetForParts(ast, p);
          bool governed =
              child == parts.body ||
              (!parts.for_each && std::find(parts.update.begin(),
                                            parts.update.end(),
                                            child) != parts.update.end());
          if (!governed) break;
          if (parts.for_each) {
            predicate = parts.init.empty() ? p : parts.init.front();
          } else {
            predicate = parts.condition >= 0 ? parts.condition : p;
          }
          break;
        }
        case AstNodeKind::kCatchClause:
          if (child == subject::BodyOf(ast, p)) predicate = p;
          break;
        default:
          break;
      }
      if (predicate >= 0) {
        if (predicate != s) edges.insert({predicate, s, EdgeLabel::kPdgCtrl});
        break;
      }
    }
  }
  return {edges.begin(), edges.end()};
}

CodeGraph MergeBases(const SubjectAst& ast,
                     const std::optional<CodeGraph>& ast_graph,
                     const std::optional<Cfg>& cfg,
                     const std::optional<std::vector<GraphEdge>>& pdg_edges,
                     const std::set<BaseGraphKind>& selection) {
  if (selection.empty()) {
    throw std::invalid_argument("empty base graph selection");
  }
  bool want_ast = selection.count(BaseGraphKind::kAst) > 0;
  bool want_cfg = selection.count(BaseGraphKind::kCfg) > 0;
  bool want_pdg = selection.count(BaseGraphKind::kPdg) > 0;
  if ((want_ast && !ast_graph) || ((want_cfg || want_pdg) && !cfg) ||
      (want_pdg && !pdg_edges)) {
    throw std::invalid_argument("selected base graph was not built");
  }
  CodeGraph g;
  if (want_ast) {
    g = *ast_graph;
  } else {
    g.unit = ast.declared_name(cfg->unit);
    auto add = [&](NodeId id) {
      if (!g.has_node(id)) g.AddNode(ToGraphNode(ast.node(id)));
    };
    add(cfg->entry);
    add(cfg->exit);
    if (want_cfg) {
      for (NodeId s : cfg->statement_nodes) add(s);
    }
    if (want_pdg) {
      for (const GraphEdge& e : *pdg_edges) {
        add(e.source);
        add(e.target);
      }
    }
  }
  g.bases = selection;
  if (want_cfg) {
    for (const auto& [from, succ] : cfg->successors) {
      for (NodeId to : succ) g.AddEdge(from, to, EdgeLabel::kCfg);
    }
  }
  if (want_pdg) {
    for (const GraphEdge& e : *pdg_edges) g.AddEdge(e.source, e.target, e.label);
  }
  return g;
}

CodeGraph BuildBaseGraph(const SubjectAst& ast, NodeId unit,
                         const std::set<BaseGraphKind>& selection) {
  CheckMethod(ast, unit);
  std::optional<CodeGraph> ast_graph;
  std::optional<Cfg> cfg;
  std::optional<std::vector<GraphEdge>> pdg;
  if (selection.count(BaseGraphKind::kAst)) ast_graph = BuildAstGraph(ast, unit);
  if (selection.count(BaseGraphKind::kCfg) ||
      selection.count(BaseGraphKind::kPdg)) {
    cfg = BuildCfg(ast, unit);
  }
  if (selection.count(BaseGraphKind::kPdg)) pdg = BuildPdg(ast, *cfg);
  return MergeBases(ast, ast_graph, cfg, pdg, selection);
}

CodeGraph MergeClass(const std::vector<CodeGraph>& method_graphs,
                     const std::string& class_name) {
  if (method_graphs.empty()) {
    throw std::invalid_argument("class '" + class_name + "' has no methods");
  }
  CodeGraph merged;
  merged.unit = class_name;
  GraphNode type_node{0, AstNodeKind::kTypeDecl, class_name, 0};
  std::vector<NodeId> roots;
  NodeId next_id = 1;
  for (const CodeGraph& g : method_graphs) {
    merged.bases.insert(g.bases.begin(), g.bases.end());
    std::map<NodeId, NodeId> renumber;
    for (const auto& [id, node] : g.nodes) renumber[id] = next_id++;
    NodeId root = -1;
    for (const auto& [id, node] : g.nodes) {
      if (node.kind == AstNodeKind::kMethodDecl) {
        root = id;
        break;
      }
    }
    if (root < 0 && !g.nodes.empty()) root = g.nodes.begin()->first;
    for (const auto& [id, node] : g.nodes) {
      GraphNode copy = node;
      copy.id = renumber[id];
      merged.AddNode(std::move(copy));
    }
    for (const GraphEdge& e : g.edges) {
      merged.AddEdge(renumber[e.source], renumber[e.target], e.label);
    }
    if (root >= 0) {
      roots.push_back(renumber[root]);
      int line = g.nodes.at(root).line;
      if (type_node.line == 0 || line < type_node.line) type_node.line = line;
    }
  }
  merged.AddNode(type_node);
  for (NodeId root : roots) merged.AddEdge(0, root, EdgeLabel::kAst);
  return merged;
}

}  // namespace concord::graph
