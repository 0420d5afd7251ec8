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

#include "concord/dsl.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace concord::dsl {
namespace {

enum class TokenType { kIdent, kString, kLBrace, kRBrace, kEnd };

struct Token {
  TokenType type = TokenType::kEnd;
  std::string text;  // identifier spelling or unescaped string contents
  int line = 1;
  int column = 1;
};

std::string Describe(const Token& tok) {
  switch (tok.type) {
    case TokenType::kIdent:
      return "'" + tok.text + "'";
    case TokenType::kString:
      return "string \"" + tok.text + "\"";
    case TokenType::kLBrace:
      return "'{'";
    case TokenType::kRBrace:
      return "'}'";
    case TokenType::kEnd:
      return "end of input";
  }
  return "?";
}

const std::set<std::string, std::less<>> kKeywords = {
    "Tasks", "Representations", "Edge",    "Node", "add", "remove",
    "Conditions", "exclude",    "include", "AST",  "CFG", "PDG"};

std::string JoinAlternatives(auto&& range) {
  std::string out;
  for (auto kind : range) {
    if (!out.empty()) out += "|";
    out += ToString(kind);
  }
  return out;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> tokens;
    while (true) {
      SkipTrivia();
      Token tok;
      tok.line = line_;
      tok.column = column_;
      if (pos_ >= text_.size()) {
        tokens.push_back(tok);
        return tokens;
      }
      char c = text_[pos_];
      if (c == '{' || c == '}') {
        tok.type = c == '{' ? TokenType::kLBrace : TokenType::kRBrace;
        tok.text = std::string(1, c);
        Advance();
      } else if (c == '"') {
        tok.type = TokenType::kString;
        tok.text = LexString(tok);
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        tok.type = TokenType::kIdent;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          tok.text += text_[pos_];
          Advance();
        }
      } else {
        Fail(tok.line, tok.column,
             std::string("unexpected character '") + c + "'");
      }
      tokens.push_back(std::move(tok));
    }
  }

 private:
  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void Fail(int line, int column, std::string message) {
    throw SyntaxError({Diagnostic{Severity::kError, std::move(message),
                                  SourceLocation{file_, line, column}}});
  }

  void SkipTrivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        Advance();
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else if (text_.substr(pos_, 2) == "/*") {
        int line = line_, column = column_;
        Advance();
        Advance();
        while (pos_ < text_.size() && text_.substr(pos_, 2) != "*/") Advance();
        if (pos_ >= text_.size()) {
          Fail(line, column, "unterminated block comment");
        }
        Advance();
        Advance();
      } else {
        return;
      }
    }
  }

  std::string LexString(const Token& tok) {
    std::string out;
    Advance();  // opening quote
    while (pos_ < text_.size() && text_[pos_] != '"') {
      char c = text_[pos_];
      if (c == '\n') break;
      if (c == '\\' && pos_ + 1 < text_.size()) {
        Advance();
        c = text_[pos_];
      }
      out += c;
      Advance();
    }
    if (pos_ >= text_.size() || text_[pos_] != '"') {
      Fail(tok.line, tok.column, "unterminated string literal");
    }
    Advance();
    return out;
  }

  std::string_view text_;
  std::string file_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Recursive descent with ordered alternatives; the first mismatch is fatal.
class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string file)
      : tokens_(std::move(tokens)), file_(std::move(file)) {}

  ConcordModel ParseModel() {
    ConcordModel model;
    if (!IsIdent("Tasks") && !IsIdent("Representations")) {
      FailExpected("Tasks or Representations");
    }
    if (IsIdent("Tasks")) ParseTasks(model);
    if (IsIdent("Representations")) ParseRepresentations(model);
    if (Peek().type != TokenType::kEnd) {
      FailExpected(model.representations.empty() && !seen_representations_
                       ? "Representations or end of input"
                       : "end of input");
    }
    return model;
  }

 private:
  const Token& Peek() const { return tokens_[index_]; }
  Token Next() {
    Token tok = tokens_[index_];
    if (tok.type != TokenType::kEnd) ++index_;
    return tok;
  }
  bool IsIdent(std::string_view text) const {
    return Peek().type == TokenType::kIdent && Peek().text == text;
  }
  SourceLocation Here() const {
    return SourceLocation{file_, Peek().line, Peek().column};
  }

  [[noreturn]] void FailExpected(const std::string& what) {
    throw SyntaxError({Diagnostic{
        Severity::kError, "expected " + what + ", found " + Describe(Peek()),
        Here()}});
  }

  void ExpectIdent(std::string_view keyword) {
    if (!IsIdent(keyword)) FailExpected("'" + std::string(keyword) + "'");
    Next();
  }

  void ExpectLBrace() {
    if (Peek().type != TokenType::kLBrace) FailExpected("'{'");
    Next();
  }

  // `opener` names the construct whose brace is being closed.
  void ExpectRBrace(const std::string& opener, const Token& open_tok) {
    if (Peek().type != TokenType::kRBrace) {
      std::ostringstream what;
      what << "'}' to close " << opener << " opened at " << open_tok.line
           << ":" << open_tok.column;
      FailExpected(what.str());
    }
    Next();
  }

  std::string ExpectName(const std::string& what) {
    if (Peek().type != TokenType::kIdent || kKeywords.count(Peek().text)) {
      FailExpected(what);
    }
    return Next().text;
  }

  void ParseTasks(ConcordModel& model) {
    Token open = Next();  // Tasks
    ExpectLBrace();
    while (Peek().type == TokenType::kIdent) {
      model.tasks.push_back(ParseTask());
    }
    if (Peek().type != TokenType::kRBrace) {
      if (Peek().type == TokenType::kEnd) {
        ExpectRBrace("'Tasks'", open);
      }
      FailExpected("task name or '}'");
    }
    Next();
  }

  Task ParseTask() {
    Task task;
    task.location = Here();
    Token name_tok = Peek();
    task.name = ExpectName("task name");
    ExpectLBrace();
    while (IsIdent("Edge") || IsIdent("Node")) {
      task.operations.push_back(ParseOperation());
    }
    if (IsIdent("Conditions")) ParseConditions(task);
    if (Peek().type != TokenType::kRBrace) {
      if (Peek().type == TokenType::kEnd) {
        ExpectRBrace("task '" + task.name + "'", name_tok);
      }
      FailExpected(task.conditions.empty()
                       ? "Edge, Node, Conditions or '}'"
                       : "'}' after Conditions block");
    }
    Next();
    return task;
  }

  Operation ParseOperation() {
    Operation op;
    op.location = Here();
    op.element = Next().text == "Edge" ? GraphElement::kEdge
                                       : GraphElement::kNode;
    if (IsIdent("add")) {
      op.op_type = OpType::kAdd;
    } else if (IsIdent("remove")) {
      op.op_type = OpType::kRemove;
    } else {
      FailExpected("operation type add|remove");
    }
    Next();
    if (Peek().type == TokenType::kIdent) {
      if (auto edge = ParseEdgeKind(Peek().text)) {
        op.target = *edge;
        Next();
        return op;
      }
      if (auto node = ParseNodeKind(Peek().text)) {
        op.target = *node;
        Next();
        return op;
      }
    }
    FailExpected("edge type (" + JoinAlternatives(kAllEdgeKinds) +
                 ") or node type (" + JoinAlternatives(kAllNodeKinds) + ")");
  }

  void ParseConditions(Task& task) {
    Token open = Next();  // Conditions
    ExpectLBrace();
    while (IsIdent("exclude") || IsIdent("include")) {
      CodeCondition cond;
      cond.action = Next().text == "exclude" ? ConditionAction::kExclude
                                             : ConditionAction::kInclude;
      std::optional<BlockKind> block;
      if (Peek().type == TokenType::kIdent) block = ParseBlockToken(Peek().text);
      if (!block) {
        FailExpected(
            "code block (catch_block|for_block|while_block|if_block|"
            "else_block)");
      }
      Next();
      cond.block = *block;
      task.conditions.push_back(cond);
    }
    if (Peek().type != TokenType::kRBrace) {
      if (Peek().type == TokenType::kEnd) ExpectRBrace("'Conditions'", open);
      FailExpected("exclude, include or '}'");
    }
    Next();
  }

  void ParseRepresentations(ConcordModel& model) {
    seen_representations_ = true;
    Token open = Next();  // Representations
    ExpectLBrace();
    while (Peek().type == TokenType::kIdent) {
      model.representations.push_back(ParseRepresentation());
    }
    if (Peek().type != TokenType::kRBrace) {
      if (Peek().type == TokenType::kEnd) {
        ExpectRBrace("'Representations'", open);
      }
      FailExpected("representation name or '}'");
    }
    Next();
  }

  RepresentationSpec ParseRepresentation() {
    RepresentationSpec rep;
    rep.location = Here();
    Token name_tok = Peek();
    rep.name = ExpectName("representation name");
    ExpectLBrace();
    if (Peek().type != TokenType::kString) {
      FailExpected("string literal for the repository list path");
    }
    rep.repo_list_path = Next().text;
    if (Peek().type != TokenType::kString) {
      FailExpected("string literal for the output directory");
    }
    rep.output_dir = Next().text;
    while (Peek().type == TokenType::kIdent) {
      auto base = ParseBaseGraphKind(Peek().text);
      if (!base) break;
      rep.base.insert(*base);
      Next();
    }
    if (rep.base.empty()) FailExpected("base graph type AST|CFG|PDG");
    while (Peek().type == TokenType::kIdent && !kKeywords.count(Peek().text)) {
      rep.tasks.push_back(Next().text);
    }
    if (rep.tasks.empty()) FailExpected("task reference");
    if (Peek().type != TokenType::kRBrace) {
      if (Peek().type == TokenType::kEnd) {
        ExpectRBrace("representation '" + rep.name + "'", name_tok);
      }
      FailExpected("task reference or '}'");
    }
    Next();
    return rep;
  }

  std::vector<Token> tokens_;
  std::string file_;
  size_t index_ = 0;
  bool seen_representations_ = false;
};

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string FormatDiagnostic(const Diagnostic& diagnostic) {
  std::ostringstream out;
  out << (diagnostic.severity == Severity::kError ? "error" : "warning")
      << ": " << diagnostic.location.file << ":" << diagnostic.location.line
      << ":" << diagnostic.location.column << ": " << diagnostic.message;
  return out.str();
}

std::string ToString(const Operation& op) {
  std::string out = op.element == GraphElement::kEdge ? "Edge" : "Node";
  out += op.op_type == OpType::kAdd ? " add " : " remove ";
  std::visit([&](auto kind) { out += concord::ToString(kind); }, op.target);
  return out;
}

SyntaxError::SyntaxError(std::vector<Diagnostic> errors)
    : std::runtime_error(errors.empty() ? std::string("syntax error")
                                        : FormatDiagnostic(errors.front())),
      errors_(std::move(errors)) {}

const Task* ConcordModel::FindTask(std::string_view name) const {
  for (const Task& task : tasks) {
    if (task.name == name) return &task;
  }
  return nullptr;
}

bool ConcordModel::HasErrors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

ConcordModel ParseConfig(std::string_view text, std::string_view file_name) {
  std::string file(file_name);
  Lexer lexer(text, file);
  Parser parser(lexer.Tokenize(), file);
  return parser.ParseModel();
}

ConcordModel ValidateSemantics(ConcordModel model) {
  auto report = [&](Severity severity, std::string message,
                    const SourceLocation& where) {
    model.diagnostics.push_back(
        Diagnostic{severity, std::move(message), where});
  };

  std::set<std::string> task_names;
  for (const Task& task : model.tasks) {
    if (!task_names.insert(task.name).second) {
      report(Severity::kError, "duplicate task name '" + task.name + "'",
             task.location);
    }
    std::vector<const Operation*> seen;
    for (const Operation& op : task.operations) {
      bool edge_target = op.targets_edge();
      bool add = op.op_type == OpType::kAdd;
      if (add != edge_target) {
        std::string target = std::visit(
            [](auto kind) { return std::string(concord::ToString(kind)); },
            op.target);
        report(Severity::kError,
               "operation '" + ToString(op) + "' is invalid: " + target +
                   (edge_target ? " is an edge addition operation"
                                : " is a node removal operation"),
               op.location);
      } else if ((op.element == GraphElement::kEdge) != edge_target) {
        report(Severity::kWarning,
               "operation '" + ToString(op) + "' should be written with '" +
                   (edge_target ? "Edge" : "Node") + "'",
               op.location);
      }
      bool duplicate = std::any_of(seen.begin(), seen.end(),
                                   [&](const Operation* prior) {
                                     return prior->op_type == op.op_type &&
                                            prior->target == op.target;
                                   });
      if (duplicate) {
        report(Severity::kWarning,
               "duplicate operation '" + ToString(op) + "' in task '" +
                   task.name + "'",
               op.location);
      }
      seen.push_back(&op);
    }
  }

  std::set<std::string> rep_names;
  for (const RepresentationSpec& rep : model.representations) {
    if (!rep_names.insert(rep.name).second) {
      report(Severity::kError,
             "duplicate representation name '" + rep.name + "'",
             rep.location);
    }
    bool has_ast = rep.base.count(BaseGraphKind::kAst) > 0;
    std::set<EdgeKind> warned;
    for (const std::string& ref : rep.tasks) {
      const Task* task = model.FindTask(ref);
      if (task == nullptr) {
        report(Severity::kError,
               "representation '" + rep.name +
                   "' references undeclared task '" + ref + "'",
               rep.location);
        continue;
      }
      if (has_ast) continue;
      for (const Operation& op : task->operations) {
        const EdgeKind* edge = std::get_if<EdgeKind>(&op.target);
        if (edge == nullptr || op.op_type != OpType::kAdd) continue;
        if ((*edge == EdgeKind::kNextToken ||
             *edge == EdgeKind::kNextSibling) &&
            warned.insert(*edge).second) {
          report(Severity::kWarning,
                 std::string(concord::ToString(*edge)) +
                     " requires AST base (representation '" + rep.name + "')",
                 rep.location);
        }
      }
    }
  }
  return model;
}

ConcordModel LoadConfig(std::string_view text, std::string_view file_name) {
  return ValidateSemantics(ParseConfig(text, file_name));
}

std::string RenderConfig(const ConcordModel& model) {
  if (model.HasErrors()) {
    throw std::invalid_argument("cannot render a model with error diagnostics");
  }
  std::ostringstream out;
  if (!model.tasks.empty()) {
    out << "Tasks {\n";
    for (const Task& task : model.tasks) {
      out << "    " << task.name << " {\n";
      for (const Operation& op : task.operations) {
        out << "        " << ToString(op) << "\n";
      }
      if (!task.conditions.empty()) {
        out << "        Conditions {\n";
        for (const CodeCondition& cond : task.conditions) {
          out << "            "
              << (cond.action == ConditionAction::kExclude ? "exclude"
                                                           : "include")
              << " " << concord::ToString(cond.block) << "_block\n";
        }
        out << "        }\n";
      }
      out << "    }\n";
    }
    out << "}\n";
  }
  if (!model.representations.empty()) {
    out << "Representations {\n";
    for (const RepresentationSpec& rep : model.representations) {
      out << "    " << rep.name << " {\n";
      out << "        " << Quote(rep.repo_list_path) << "\n";
      out << "        " << Quote(rep.output_dir) << "\n";
      for (BaseGraphKind base : rep.base) {
        out << "        " << concord::ToString(base) << "\n";
      }
      for (const std::string& ref : rep.tasks) {
        out << "        " << ref << "\n";
      }
      out << "    }\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace concord::dsl
