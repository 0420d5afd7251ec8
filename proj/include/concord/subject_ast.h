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

// Syntax trees for subject-language (C/Java-like) source files.
//
// Every lexical token of the input is a leaf of the tree, so the tree is
// full-fidelity: concatenating the leaves in order, with the skipped trivia
// (whitespace, comments, preprocessor lines) between them, reproduces the
// file. Punctuation, keywords and operator symbols are OPERATOR leaves with
// `symbol == true`; they sit next to the operands they delimit and are
// ignored by the structural queries (`operands()`).

#ifndef CONCORD_SUBJECT_AST_H_
#define CONCORD_SUBJECT_AST_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "concord/vocabulary.h"

namespace concord::subject {

enum class AstNodeKind {
  kFile,
  kTypeDecl,
  kMethodDecl,
  kParam,
  kBlock,
  kIfStmt,
  kElseClause,
  kWhileStmt,
  kForStmt,
  kTryStmt,
  kCatchClause,
  kReturnStmt,
  kLocalDecl,
  kAssignment,
  kExprStmt,
  kCall,
  kFieldAccess,
  kIdentifier,
  kLiteral,
  kOperator,
  kTypeName,
  kCondition,
};

std::string_view ToString(AstNodeKind kind);  // "METHOD_DECL"
std::optional<AstNodeKind> ParseAstNodeKind(std::string_view text);

enum class OperatorClass { kArithmetic, kBitwise, kLogical, kRelational, kOther };

std::string_view ToString(OperatorClass cls);

using NodeId = int;

struct Span {
  size_t begin = 0;  // byte offset, inclusive
  size_t end = 0;    // byte offset, exclusive

  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const Span&, const Span&) = default;
};

struct AstNode {
  NodeId id = 0;
  AstNodeKind kind = AstNodeKind::kLiteral;
  std::string code;  // verbatim source slice
  Span span;
  int line = 1;  // 1-based start line
  std::vector<NodeId> children;
  NodeId parent = -1;
  // OPERATOR nodes only. Operator symbol leaves carry their operator's class;
  // punctuation and keywords are kOther.
  std::optional<OperatorClass> operator_class;
  // Operator name on OPERATOR nodes ("add", "lessThan", "paren", ...) and
  // assignment operator on ASSIGNMENT nodes ("assign", "assignAdd", ...).
  std::string op_name;
  // Punctuation, keyword or operator-symbol token.
  bool symbol = false;
  // Region skipped by error recovery.
  bool recovered = false;

  bool is_leaf() const { return children.empty(); }

  friend bool operator==(const AstNode&, const AstNode&) = default;
};

struct ParseWarning {
  std::string message;
  int line = 0;
  // Recovery at file level from a stray or missing brace.
  bool unbalanced_brace = false;

  friend bool operator==(const ParseWarning&, const ParseWarning&) = default;
};

class SubjectAst {
 public:
  std::string file_path;
  std::string source;
  NodeId root = 0;
  // Indexed by id; ids are assigned in pre-order, so a node's descendants
  // have larger ids than the node and children are sorted by id.
  std::vector<AstNode> nodes;
  std::vector<NodeId> methods;
  std::vector<ParseWarning> warnings;

  const AstNode& node(NodeId id) const;
  bool contains(NodeId id) const {
    return id >= 0 && static_cast<size_t>(id) < nodes.size();
  }
  // Children that are not symbol tokens.
  std::vector<NodeId> operands(NodeId id) const;
  // All nodes of the subtree rooted at `id` in pre-order (id order).
  std::vector<NodeId> subtree(NodeId id) const;
  bool is_ancestor(NodeId ancestor, NodeId node) const;
  // Nearest ancestor (excluding `id`) of the given kind, or -1.
  NodeId enclosing(NodeId id, AstNodeKind kind) const;
  // Method or type name (the declared IDENTIFIER), or "" for synthetic units.
  std::string declared_name(NodeId decl) const;
  // Source text with whitespace removed, e.g. "System.out.println".
  std::string compact_code(NodeId id) const;

  friend bool operator==(const SubjectAst&, const SubjectAst&) = default;
};

// Structural views over control statements. Absent parts are -1 / empty.
struct IfParts {
  NodeId condition = -1;    // CONDITION
  NodeId then_branch = -1;  // statement
  NodeId else_clause = -1;  // ELSE_CLAUSE
  NodeId else_branch = -1;  // statement inside the ELSE_CLAUSE
};
IfParts GetIfParts(const SubjectAst& ast, NodeId if_stmt);

struct WhileParts {
  NodeId condition = -1;
  NodeId body = -1;
};
WhileParts GetWhileParts(const SubjectAst& ast, NodeId while_stmt);

struct ForParts {
  std::vector<NodeId> init;    // LOCAL_DECL or expressions
  NodeId condition = -1;       // CONDITION; absent in `for (;;)`
  std::vector<NodeId> update;  // expressions
  NodeId body = -1;
  bool for_each = false;       // `for (T x : xs)`; init is the LOCAL_DECL
};
ForParts GetForParts(const SubjectAst& ast, NodeId for_stmt);

struct TryParts {
  NodeId body = -1;                  // BLOCK
  std::vector<NodeId> catches;       // CATCH_CLAUSE
  NodeId finally_block = -1;         // BLOCK
};
TryParts GetTryParts(const SubjectAst& ast, NodeId try_stmt);

// Body BLOCK of a METHOD_DECL or CATCH_CLAUSE, or -1.
NodeId BodyOf(const SubjectAst& ast, NodeId decl);

// Leaves of a method's subtree ordered by span start. Throws
// std::out_of_range for ids that are not METHOD_DECL nodes.
std::vector<NodeId> LeavesInOrder(const SubjectAst& ast, NodeId method);

// Block kinds of all ancestors of `node`: the then-branch (and condition) of
// an IF_STMT counts as `if`, an ELSE_CLAUSE as `else`, WHILE_STMT as `while`,
// FOR_STMT as `for` and CATCH_CLAUSE as `catch`. Throws std::out_of_range for
// unknown ids.
std::set<BlockKind> EnclosingBlocks(const SubjectAst& ast, NodeId node);

}  // namespace concord::subject

#endif  // CONCORD_SUBJECT_AST_H_
