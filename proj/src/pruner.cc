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

#include "concord/pruner.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

#include "concord/subject_parser.h"

namespace concord::prune {

using subject::AstNode;
using subject::AstNodeKind;
using subject::NodeId;
using subject::OperatorClass;
using subject::SubjectAst;

namespace {

const std::set<std::string, std::less<>> kPrintCallees = {
    "System.out.println", "System.out.print", "System.err.println",
    "System.err.print",   "printf",           "print",
    "println",            "puts"};

const std::set<std::string, std::less<>> kExitCallees = {
    "System.exit", "exit", "abort", "Runtime.getRuntime().halt"};

const std::set<std::string, std::less<>> kLoggingMethods = {
    "trace", "debug", "info", "warn", "error", "fatal", "log"};

bool IsAllowedOperator(const AstNode& n) {
  return n.kind == AstNodeKind::kOperator && !n.symbol &&
         n.operator_class.has_value() &&
         *n.operator_class != OperatorClass::kOther;
}

// Operand nodes (symbols excluded) of the subtree rooted at `id`.
std::vector<NodeId> OperandSubtree(const SubjectAst& ast, NodeId id) {
  std::vector<NodeId> out;
  for (NodeId n : ast.subtree(id)) {
    if (!ast.nodes[n].symbol) out.push_back(n);
  }
  return out;
}

// The call of a plain call statement, or -1.
NodeId StatementCall(const SubjectAst& ast, NodeId expr_stmt) {
  if (ast.node(expr_stmt).kind != AstNodeKind::kExprStmt) return -1;
  std::vector<NodeId> ops = ast.operands(expr_stmt);
  if (ops.size() != 1) return -1;
  const AstNode& call = ast.nodes[ops.front()];
  if (call.kind != AstNodeKind::kCall || call.op_name == "new") return -1;
  return call.id;
}

std::string Lower(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(c));
  return text;
}

std::optional<NodeKind> MatchCallStatement(const SubjectAst& ast,
                                           NodeId expr_stmt,
                                           const std::set<NodeKind>& targets) {
  NodeId call = StatementCall(ast, expr_stmt);
  if (call < 0) return std::nullopt;
  std::string callee = CalleeName(ast, expr_stmt);
  if (targets.count(NodeKind::kPrint) && kPrintCallees.count(callee)) {
    return NodeKind::kPrint;
  }
  if (targets.count(NodeKind::kSysExit) && kExitCallees.count(callee)) {
    return NodeKind::kSysExit;
  }
  if (targets.count(NodeKind::kLogging)) {
    NodeId callee_node = ast.operands(call).front();
    if (ast.nodes[callee_node].kind == AstNodeKind::kFieldAccess) {
      std::vector<NodeId> parts = ast.operands(callee_node);
      if (parts.size() == 2 &&
          kLoggingMethods.count(ast.nodes[parts[1]].code) &&
          Lower(ast.compact_code(parts[0])).find("log") != std::string::npos) {
        return NodeKind::kLogging;
      }
    }
  }
  return std::nullopt;
}

// A declaration is removable only when every declarator is initialized by a
// simple assignment.
bool IsSimpleDeclaration(const SubjectAst& ast, NodeId decl) {
  bool any = false;
  for (NodeId child : ast.operands(decl)) {
    AstNodeKind kind = ast.nodes[child].kind;
    if (kind == AstNodeKind::kIdentifier) return false;  // bare declarator
    if (kind == AstNodeKind::kAssignment) {
      if (!IsSimpleAssignment(ast, child)) return false;
      any = true;
    }
  }
  return any;
}

StatementSpan MakeSpan(const SubjectAst& ast, NodeId node, NodeKind kind,
                       bool in_for_init) {
  const AstNode& n = ast.node(node);
  StatementSpan span;
  span.kind = kind;
  span.file = ast.file_path;
  span.span = n.span;
  span.line = n.line;
  span.enclosing = subject::EnclosingBlocks(ast, node);
  span.in_for_init = in_for_init;
  span.node = node;
  return span;
}

}  // namespace

bool IsSimpleAssignment(const SubjectAst& ast, NodeId node) {
  const AstNode& n = ast.node(node);
  if (n.kind != AstNodeKind::kAssignment || n.op_name != "assign") {
    return false;
  }
  std::vector<NodeId> ops = ast.operands(node);
  if (ops.size() != 2) return false;

  std::vector<NodeId> left = OperandSubtree(ast, ops[0]);
  if (left.size() != 1 ||
      ast.nodes[left.front()].kind != AstNodeKind::kIdentifier) {
    return false;
  }
  for (NodeId id : OperandSubtree(ast, ops[1])) {
    const AstNode& r = ast.nodes[id];
    if (r.is_leaf()) {
      if (r.kind != AstNodeKind::kLiteral || r.recovered) return false;
    } else if (!IsAllowedOperator(r)) {
      return false;
    }
  }
  return true;
}

std::string CalleeName(const SubjectAst& ast, NodeId expr_stmt) {
  NodeId call = StatementCall(ast, expr_stmt);
  if (call < 0) return "";
  std::vector<NodeId> ops = ast.operands(call);
  if (ops.empty()) return "";
  AstNodeKind kind = ast.nodes[ops.front()].kind;
  if (kind != AstNodeKind::kIdentifier && kind != AstNodeKind::kFieldAccess) {
    return "";
  }
  return ast.compact_code(ops.front());
}

std::vector<StatementSpan> CollectStatements(
    const SubjectAst& ast, const std::set<NodeKind>& targets) {
  std::vector<StatementSpan> out;
  if (targets.empty()) return out;
  bool assignments = targets.count(NodeKind::kSimpleAssignment) > 0;
  for (const AstNode& n : ast.nodes) {
    switch (n.kind) {
      case AstNodeKind::kLocalDecl: {
        if (!assignments || !IsSimpleDeclaration(ast, n.id)) break;
        bool for_init = n.parent >= 0 &&
                        ast.nodes[n.parent].kind == AstNodeKind::kForStmt;
        out.push_back(
            MakeSpan(ast, n.id, NodeKind::kSimpleAssignment, for_init));
        break;
      }
      case AstNodeKind::kExprStmt: {
        std::vector<NodeId> ops = ast.operands(n.id);
        if (assignments && ops.size() == 1 &&
            IsSimpleAssignment(ast, ops.front())) {
          out.push_back(
              MakeSpan(ast, n.id, NodeKind::kSimpleAssignment, false));
        } else if (auto kind = MatchCallStatement(ast, n.id, targets)) {
          out.push_back(MakeSpan(ast, n.id, *kind, false));
        }
        break;
      }
      case AstNodeKind::kForStmt: {
        if (!assignments) break;
        for (NodeId init : subject::GetForParts(ast, n.id).init) {
          if (IsSimpleAssignment(ast, init)) {
            out.push_back(
                MakeSpan(ast, init, NodeKind::kSimpleAssignment, true));
          }
        }
        break;
      }
      default:
        break;
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const StatementSpan& a, const StatementSpan& b) {
                     return a.span.begin < b.span.begin;
                   });
  return out;
}

ConditionSplit ApplyConditions(
    const std::vector<StatementSpan>& spans,
    const std::vector<dsl::CodeCondition>& conditions) {
  std::vector<BlockKind> excluded;
  std::vector<BlockKind> included;
  for (const dsl::CodeCondition& cond : conditions) {
    (cond.action == dsl::ConditionAction::kExclude ? excluded : included)
        .push_back(cond.block);
  }
  ConditionSplit split;
  for (const StatementSpan& span : spans) {
    auto hit = std::find_if(excluded.begin(), excluded.end(), [&](BlockKind k) {
      return span.enclosing.count(k) > 0;
    });
    if (hit != excluded.end()) {
      split.exempted.push_back({span, *hit});
      continue;
    }
    bool inside_included =
        included.empty() ||
        std::any_of(included.begin(), included.end(),
                    [&](BlockKind k) { return span.enclosing.count(k) > 0; });
    if (!inside_included) {
      split.exempted.push_back({span, std::nullopt});
      continue;
    }
    split.keep_removing.push_back(span);
  }
  return split;
}

RewriteResult RewriteFile(std::string_view text,
                          std::vector<StatementSpan> spans) {
  for (const StatementSpan& s : spans) {
    if (s.span.begin >= s.span.end || s.span.end > text.size()) {
      throw std::out_of_range("statement span [" +
                              std::to_string(s.span.begin) + ", " +
                              std::to_string(s.span.end) +
                              ") outside file of " +
                              std::to_string(text.size()) + " bytes");
    }
  }
  // Outermost first: by start, then longest.
  std::sort(spans.begin(), spans.end(),
            [](const StatementSpan& a, const StatementSpan& b) {
              if (a.span.begin != b.span.begin) {
                return a.span.begin < b.span.begin;
              }
              return a.span.end > b.span.end;
            });
  RewriteResult result;
  size_t cursor = 0;
  for (StatementSpan& s : spans) {
    if (!result.report.removed.empty()) {
      const subject::Span& last = result.report.removed.back().span;
      if (last.Contains(s.span)) continue;
      if (s.span.begin < last.end) {
        throw std::invalid_argument("partially overlapping statement spans");
      }
    }
    result.text.append(text.substr(cursor, s.span.begin - cursor));
    cursor = s.span.end;
    result.report.rewritten_bytes += s.span.end - s.span.begin;
    result.report.removed.push_back(std::move(s));
  }
  result.text.append(text.substr(cursor));
  return result;
}

RewriteResult PruneSource(std::string_view text, const std::string& path,
                          const std::vector<PruneRule>& rules) {
  SubjectAst ast = subject::ParseSubject(text, path);
  std::vector<StatementSpan> removed;
  std::vector<ExemptedSpan> exempted;
  auto same_span = [](const StatementSpan& a, const StatementSpan& b) {
    return a.span == b.span;
  };
  for (const PruneRule& rule : rules) {
    ConditionSplit split = ApplyConditions(
        CollectStatements(ast, rule.targets), rule.conditions);
    for (StatementSpan& s : split.keep_removing) {
      if (std::none_of(removed.begin(), removed.end(),
                       [&](const StatementSpan& r) { return same_span(r, s); })) {
        removed.push_back(std::move(s));
      }
    }
    for (ExemptedSpan& e : split.exempted) exempted.push_back(std::move(e));
  }
  RewriteResult result = RewriteFile(text, std::move(removed));
  // A statement removed by one rule is not reported as exempted by another.
  std::vector<ExemptedSpan> kept_exempt;
  for (ExemptedSpan& e : exempted) {
    bool is_removed = std::any_of(
        result.report.removed.begin(), result.report.removed.end(),
        [&](const StatementSpan& r) {
          return r.span.Contains(e.statement.span);
        });
    bool duplicate = std::any_of(
        kept_exempt.begin(), kept_exempt.end(), [&](const ExemptedSpan& k) {
          return same_span(k.statement, e.statement);
        });
    if (!is_removed && !duplicate) kept_exempt.push_back(std::move(e));
  }
  std::stable_sort(kept_exempt.begin(), kept_exempt.end(),
                   [](const ExemptedSpan& a, const ExemptedSpan& b) {
                     return a.statement.span.begin < b.statement.span.begin;
                   });
  result.report.exempted = std::move(kept_exempt);
  return result;
}

nlohmann::json ToJson(const PruneReport& report) {
  auto span_json = [](const StatementSpan& s) {
    nlohmann::json enclosing = nlohmann::json::array();
    for (BlockKind k : s.enclosing) enclosing.push_back(ToString(k));
    return nlohmann::json{{"kind", ToString(s.kind)},
                          {"file", s.file},
                          {"begin", s.span.begin},
                          {"end", s.span.end},
                          {"line", s.line},
                          {"enclosing", enclosing},
                          {"in_for_init", s.in_for_init}};
  };
  nlohmann::json removed = nlohmann::json::array();
  for (const StatementSpan& s : report.removed) removed.push_back(span_json(s));
  nlohmann::json exempted = nlohmann::json::array();
  for (const ExemptedSpan& e : report.exempted) {
    nlohmann::json entry = span_json(e.statement);
    entry["reason"] = e.reason ? std::string(ToString(*e.reason))
                               : std::string("outside_include");
    exempted.push_back(std::move(entry));
  }
  return nlohmann::json{{"removed", removed},
                        {"exempted", exempted},
                        {"rewritten_bytes", report.rewritten_bytes}};
}

}  // namespace concord::prune
