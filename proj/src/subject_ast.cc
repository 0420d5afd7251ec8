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

#include "concord/subject_ast.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace concord::subject {
namespace {

constexpr std::array<std::pair<AstNodeKind, std::string_view>, 22> kKindNames =
    {{
        {AstNodeKind::kFile, "FILE"},
        {AstNodeKind::kTypeDecl, "TYPE_DECL"},
        {AstNodeKind::kMethodDecl, "METHOD_DECL"},
        {AstNodeKind::kParam, "PARAM"},
        {AstNodeKind::kBlock, "BLOCK"},
        {AstNodeKind::kIfStmt, "IF_STMT"},
        {AstNodeKind::kElseClause, "ELSE_CLAUSE"},
        {AstNodeKind::kWhileStmt, "WHILE_STMT"},
        {AstNodeKind::kForStmt, "FOR_STMT"},
        {AstNodeKind::kTryStmt, "TRY_STMT"},
        {AstNodeKind::kCatchClause, "CATCH_CLAUSE"},
        {AstNodeKind::kReturnStmt, "RETURN_STMT"},
        {AstNodeKind::kLocalDecl, "LOCAL_DECL"},
        {AstNodeKind::kAssignment, "ASSIGNMENT"},
        {AstNodeKind::kExprStmt, "EXPR_STMT"},
        {AstNodeKind::kCall, "CALL"},
        {AstNodeKind::kFieldAccess, "FIELD_ACCESS"},
        {AstNodeKind::kIdentifier, "IDENTIFIER"},
        {AstNodeKind::kLiteral, "LITERAL"},
        {AstNodeKind::kOperator, "OPERATOR"},
        {AstNodeKind::kTypeName, "TYPE_NAME"},
        {AstNodeKind::kCondition, "CONDITION"},
    }};

bool IsSymbolText(const SubjectAst& ast, NodeId id, std::string_view text) {
  const AstNode& n = ast.node(id);
  return n.symbol && n.code == text;
}

}  // namespace

std::string_view ToString(AstNodeKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<AstNodeKind> ParseAstNodeKind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string_view ToString(OperatorClass cls) {
  switch (cls) {
    case OperatorClass::kArithmetic:
      return "arithmetic";
    case OperatorClass::kBitwise:
      return "bitwise";
    case OperatorClass::kLogical:
      return "logical";
    case OperatorClass::kRelational:
      return "relational";
    case OperatorClass::kOther:
      return "other";
  }
  return "?";
}

const AstNode& SubjectAst::node(NodeId id) const {
  if (!contains(id)) {
    throw std::out_of_range("unknown AST node id " + std::to_string(id));
  }
  return nodes[static_cast<size_t>(id)];
}

std::vector<NodeId> SubjectAst::operands(NodeId id) const {
  std::vector<NodeId> out;
  for (NodeId child : node(id).children) {
    if (!nodes[child].symbol) out.push_back(child);
  }
  return out;
}

std::vector<NodeId> SubjectAst::subtree(NodeId id) const {
  node(id);
  std::vector<NodeId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    NodeId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    const auto& children = nodes[cur].children;
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back(*it);
    }
  }
  return out;
}

bool SubjectAst::is_ancestor(NodeId ancestor, NodeId id) const {
  for (NodeId cur = node(id).parent; cur >= 0; cur = nodes[cur].parent) {
    if (cur == ancestor) return true;
  }
  return false;
}

NodeId SubjectAst::enclosing(NodeId id, AstNodeKind kind) const {
  for (NodeId cur = node(id).parent; cur >= 0; cur = nodes[cur].parent) {
    if (nodes[cur].kind == kind) return cur;
  }
  return -1;
}

std::string SubjectAst::declared_name(NodeId decl) const {
  for (NodeId child : node(decl).children) {
    if (nodes[child].kind == AstNodeKind::kIdentifier) return nodes[child].code;
  }
  return "";
}

std::string SubjectAst::compact_code(NodeId id) const {
  std::string out;
  for (char c : node(id).code) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

IfParts GetIfParts(const SubjectAst& ast, NodeId if_stmt) {
  IfParts parts;
  for (NodeId child : ast.operands(if_stmt)) {
    const AstNode& n = ast.node(child);
    if (n.kind == AstNodeKind::kCondition && parts.condition < 0) {
      parts.condition = child;
    } else if (n.kind == AstNodeKind::kElseClause) {
      parts.else_clause = child;
      std::vector<NodeId> inner = ast.operands(child);
      if (!inner.empty()) parts.else_branch = inner.front();
    } else if (parts.then_branch < 0) {
      parts.then_branch = child;
    }
  }
  return parts;
}

WhileParts GetWhileParts(const SubjectAst& ast, NodeId while_stmt) {
  WhileParts parts;
  for (NodeId child : ast.operands(while_stmt)) {
    if (ast.node(child).kind == AstNodeKind::kCondition &&
        parts.condition < 0) {
      parts.condition = child;
    } else {
      parts.body = child;
    }
  }
  return parts;
}

ForParts GetForParts(const SubjectAst& ast, NodeId for_stmt) {
  ForParts parts;
  // Header sections are delimited by the `;` (or `:`) and `)` symbols.
  int section = 0;
  bool header_closed = false;
  for (NodeId child : ast.node(for_stmt).children) {
    const AstNode& n = ast.node(child);
    if (n.symbol) {
      if (header_closed) continue;
      if (n.code == ";") {
        ++section;
      } else if (n.code == ":") {
        parts.for_each = true;
        ++section;
      } else if (n.code == ")") {
        header_closed = true;
      }
      continue;
    }
    if (header_closed) {
      parts.body = child;
    } else if (section == 0) {
      parts.init.push_back(child);
    } else if (n.kind == AstNodeKind::kCondition) {
      parts.condition = child;
    } else {
      parts.update.push_back(child);
    }
  }
  return parts;
}

TryParts GetTryParts(const SubjectAst& ast, NodeId try_stmt) {
  TryParts parts;
  bool after_finally = false;
  for (NodeId child : ast.node(try_stmt).children) {
    const AstNode& n = ast.node(child);
    if (IsSymbolText(ast, child, "finally")) {
      after_finally = true;
    } else if (n.kind == AstNodeKind::kCatchClause) {
      parts.catches.push_back(child);
    } else if (n.kind == AstNodeKind::kBlock) {
      (after_finally ? parts.finally_block : parts.body) = child;
    }
  }
  return parts;
}

NodeId BodyOf(const SubjectAst& ast, NodeId decl) {
  for (NodeId child : ast.node(decl).children) {
    if (ast.node(child).kind == AstNodeKind::kBlock) return child;
  }
  return -1;
}

std::vector<NodeId> LeavesInOrder(const SubjectAst& ast, NodeId method) {
  if (!ast.contains(method) ||
      ast.node(method).kind != AstNodeKind::kMethodDecl) {
    throw std::out_of_range("not a METHOD_DECL: " + std::to_string(method));
  }
  std::vector<NodeId> leaves;
  for (NodeId id : ast.subtree(method)) {
    if (ast.nodes[id].is_leaf()) leaves.push_back(id);
  }
  std::stable_sort(leaves.begin(), leaves.end(), [&](NodeId a, NodeId b) {
    return ast.nodes[a].span.begin < ast.nodes[b].span.begin;
  });
  return leaves;
}

std::set<BlockKind> EnclosingBlocks(const SubjectAst& ast, NodeId id) {
  std::set<BlockKind> kinds;
  NodeId child = id;
  for (NodeId cur = ast.node(id).parent; cur >= 0;
       child = cur, cur = ast.nodes[cur].parent) {
    switch (ast.nodes[cur].kind) {
      case AstNodeKind::kIfStmt: {
        IfParts parts = GetIfParts(ast, cur);
        if (child != parts.else_clause) kinds.insert(BlockKind::kIf);
        break;
      }
      case AstNodeKind::kElseClause:
        kinds.insert(BlockKind::kElse);
        break;
      case AstNodeKind::kWhileStmt:
        kinds.insert(BlockKind::kWhile);
        break;
      case AstNodeKind::kForStmt:
        kinds.insert(BlockKind::kFor);
        break;
      case AstNodeKind::kCatchClause:
        kinds.insert(BlockKind::kCatch);
        break;
      default:
        break;
    }
  }
  return kinds;
}

}  // namespace concord::subject
