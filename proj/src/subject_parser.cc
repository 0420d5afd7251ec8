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

#include "concord/subject_parser.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace concord::subject {
namespace {

enum class TokKind { kIdent, kNumber, kString, kChar, kPunct, kEnd };

struct Tok {
  TokKind kind = TokKind::kEnd;
  std::string_view text;
  size_t begin = 0;
  size_t end = 0;
};

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         (static_cast<unsigned char>(c) >= 0x80);
}
bool IsIdentChar(char c) {
  return IsIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Longest match first. `>>`, `>>>`, `>>=` and `>>>=` are deliberately absent:
// a `>` followed by `>` is always emitted alone so generic closers lex
// cleanly; the expression parser re-joins adjacent `>` tokens into shifts.
constexpr std::array<std::string_view, 37> kPunctuators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  ">=",  "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=",
    "<<",  "{",   "}",  "(",  ")",  "[",  "]",  ";",  ",",  ".",
    "=",   "<",   ">",  "+",  "-",  "*",  "/"};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Tok> Run() {
    std::vector<Tok> out;
    bool line_start = true;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        line_start = true;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        continue;
      }
      if (c == '#' && line_start) {
        SkipPreprocessorLine();
        continue;
      }
      line_start = false;
      if (src_.compare(pos_, 2, "//") == 0) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      if (src_.compare(pos_, 2, "/*") == 0) {
        size_t close = src_.find("*/", pos_ + 2);
        pos_ = close == std::string_view::npos ? src_.size() : close + 2;
        continue;
      }
      out.push_back(Next());
    }
    Tok end;
    end.begin = end.end = src_.size();
    out.push_back(end);
    return out;
  }

 private:
  void SkipPreprocessorLine() {
    while (pos_ < src_.size() && src_[pos_] != '\n') {
      if (src_[pos_] == '\\' && pos_ + 1 < src_.size() &&
          src_[pos_ + 1] == '\n') {
        ++pos_;
      }
      ++pos_;
    }
  }

  Tok Make(TokKind kind, size_t begin) {
    return Tok{kind, src_.substr(begin, pos_ - begin), begin, pos_};
  }

  Tok Next() {
    size_t begin = pos_;
    char c = src_[pos_];
    if (IsIdentStart(c)) {
      while (pos_ < src_.size() && IsIdentChar(src_[pos_])) ++pos_;
      return Make(TokKind::kIdent, begin);
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && pos_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      LexNumber();
      return Make(TokKind::kNumber, begin);
    }
    if (c == '"' || c == '\'') {
      ++pos_;
      while (pos_ < src_.size() && src_[pos_] != c && src_[pos_] != '\n') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
        ++pos_;
      }
      if (pos_ < src_.size() && src_[pos_] == c) ++pos_;
      return Make(c == '"' ? TokKind::kString : TokKind::kChar, begin);
    }
    if (c == '>' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      ++pos_;
      return Make(TokKind::kPunct, begin);
    }
    for (std::string_view p : kPunctuators) {
      if (src_.compare(pos_, p.size(), p) == 0) {
        pos_ += p.size();
        return Make(TokKind::kPunct, begin);
      }
    }
    // Any other byte is a one-character token; unknown ones make the parser
    // fail and recover, so fidelity still holds.
    ++pos_;
    return Make(TokKind::kPunct, begin);
  }

  void LexNumber() {
    if (src_.compare(pos_, 2, "0x") == 0 || src_.compare(pos_, 2, "0X") == 0 ||
        src_.compare(pos_, 2, "0b") == 0 || src_.compare(pos_, 2, "0B") == 0) {
      pos_ += 2;
      while (pos_ < src_.size() &&
             (std::isxdigit(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_')) {
        ++pos_;
      }
    } else {
      while (pos_ < src_.size()) {
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
            c == '.') {
          ++pos_;
        } else if ((c == 'e' || c == 'E') && pos_ + 1 < src_.size()) {
          ++pos_;
          if (src_[pos_] == '+' || src_[pos_] == '-') ++pos_;
        } else {
          break;
        }
      }
    }
    while (pos_ < src_.size() &&
           std::isalpha(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;  // suffixes: L, f, d, u, ...
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
};

// Thrown while parsing speculatively or when a construct does not match.
struct Mismatch {};

const std::set<std::string_view> kModifiers = {
    "public",   "private",  "protected", "static",    "final",
    "abstract", "native",   "transient", "volatile",  "strictfp",
    "default",  "const",    "extern",    "inline",    "register",
    "synchronized"};

const std::set<std::string_view> kReserved = {
    "if",     "else",       "while",   "for",      "do",      "switch",
    "case",   "default",    "try",     "catch",    "finally", "return",
    "break",  "continue",   "throw",   "new",      "class",   "interface",
    "enum",   "struct",     "union",   "package",  "import",  "extends",
    "implements", "throws", "instanceof", "goto",  "public",  "private",
    "protected", "static",  "abstract", "final",   "synchronized"};

const std::set<std::string_view> kTypeDeclKeywords = {"class", "interface",
                                                      "enum", "struct",
                                                      "record", "union"};

const std::set<std::string_view> kCPrimitiveWords = {
    "unsigned", "signed", "long", "short", "int", "char", "double", "float"};

struct BinaryOp {
  std::string_view spelling;
  int precedence;
  const char* name;
  OperatorClass cls;
};

constexpr std::array<BinaryOp, 19> kBinaryOps = {{
    {"||", 1, "or", OperatorClass::kLogical},
    {"&&", 2, "and", OperatorClass::kLogical},
    {"|", 3, "or", OperatorClass::kBitwise},
    {"^", 4, "xor", OperatorClass::kBitwise},
    {"&", 5, "and", OperatorClass::kBitwise},
    {"==", 6, "equals", OperatorClass::kRelational},
    {"!=", 6, "notEquals", OperatorClass::kRelational},
    {"<", 7, "lessThan", OperatorClass::kRelational},
    {">", 7, "greaterThan", OperatorClass::kRelational},
    {"<=", 7, "lessEqualsThan", OperatorClass::kRelational},
    {">=", 7, "greaterEqualsThan", OperatorClass::kRelational},
    {"<<", 8, "shiftLeft", OperatorClass::kBitwise},
    {">>", 8, "shiftRight", OperatorClass::kBitwise},
    {">>>", 8, "shiftRight", OperatorClass::kBitwise},
    {"+", 9, "add", OperatorClass::kArithmetic},
    {"-", 9, "sub", OperatorClass::kArithmetic},
    {"*", 10, "mult", OperatorClass::kArithmetic},
    {"/", 10, "div", OperatorClass::kArithmetic},
    {"%", 10, "mod", OperatorClass::kArithmetic},
}};
constexpr int kInstanceOfPrecedence = 7;

struct AssignOp {
  std::string_view spelling;
  const char* name;
};
constexpr std::array<AssignOp, 12> kAssignOps = {{
    {"=", "assign"},
    {"+=", "assignAdd"},
    {"-=", "assignSub"},
    {"*=", "assignMult"},
    {"/=", "assignDiv"},
    {"%=", "assignMod"},
    {"&=", "assignAnd"},
    {"|=", "assignOr"},
    {"^=", "assignXor"},
    {"<<=", "assignShiftLeft"},
    {">>=", "assignShiftRight"},
    {">>>=", "assignShiftRight"},
}};

// An expression plus the parenthesis symbols around it; the parentheses
// become children of whichever node consumes the expression.
struct Expr {
  std::vector<NodeId> pre;
  NodeId core = -1;
  std::vector<NodeId> post;
};

class Parser {
 public:
  Parser(std::string_view src, std::vector<Tok> toks)
      : src_(src), toks_(std::move(toks)) {}

  SubjectAst Run(std::string path) {
    std::vector<NodeId> children;
    std::vector<NodeId> pending_statements;
    auto flush_statements = [&] {
      if (pending_statements.empty()) return;
      NodeId block = Compose(AstNodeKind::kBlock, pending_statements);
      children.push_back(Compose(AstNodeKind::kMethodDecl, {block}));
      pending_statements.clear();
    };
    while (!AtEnd()) {
      if (IsPunct("}")) {
        flush_statements();
        warnings_.push_back(
            {"stray '}' at file level", LineOf(Cur().begin), true});
        children.push_back(Region(pos_, pos_ + 1));
        ++pos_;
        continue;
      }
      if (IsIdent("package") || IsIdent("import")) {
        flush_statements();
        children.push_back(RecoverFrom(pos_));
        continue;
      }
      if (NodeId decl = TryMember(/*in_type=*/false); decl >= 0) {
        flush_statements();
        children.push_back(decl);
        continue;
      }
      pending_statements.push_back(ParseStatementRecovering());
    }
    flush_statements();
    NodeId root = children.empty() ? MakeEmptyFile()
                                   : Compose(AstNodeKind::kFile, children);
    return Finish(root, std::move(path));
  }

 private:
  // ---- token helpers -------------------------------------------------------

  const Tok& Cur() const { return toks_[pos_]; }
  const Tok& At(size_t i) const { return toks_[std::min(i, toks_.size() - 1)]; }
  bool AtEnd() const { return Cur().kind == TokKind::kEnd; }
  bool IsPunct(std::string_view p, size_t i) const {
    return At(i).kind == TokKind::kPunct && At(i).text == p;
  }
  bool IsPunct(std::string_view p) const { return IsPunct(p, pos_); }
  bool IsIdent(std::string_view word, size_t i) const {
    return At(i).kind == TokKind::kIdent && At(i).text == word;
  }
  bool IsIdent(std::string_view word) const { return IsIdent(word, pos_); }
  bool IsName(size_t i) const {
    return At(i).kind == TokKind::kIdent && !kReserved.count(At(i).text);
  }
  bool IsName() const { return IsName(pos_); }
  // Tokens i and i+1 touch (no trivia between them).
  bool Adjacent(size_t i) const { return At(i).end == At(i + 1).begin; }

  void Expect(std::string_view p) {
    if (!IsPunct(p)) throw Mismatch{};
  }

  int LineOf(size_t offset) {
    if (line_starts_.empty()) {
      line_starts_.push_back(0);
      for (size_t i = 0; i < src_.size(); ++i) {
        if (src_[i] == '\n') line_starts_.push_back(i + 1);
      }
    }
    auto it =
        std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    return static_cast<int>(it - line_starts_.begin());
  }

  // ---- node construction ---------------------------------------------------

  NodeId NewNode(AstNodeKind kind, Span span) {
    AstNode node;
    node.id = static_cast<NodeId>(nodes_.size());
    node.kind = kind;
    node.span = span;
    nodes_.push_back(std::move(node));
    return nodes_.back().id;
  }

  NodeId Leaf(AstNodeKind kind) {
    NodeId id = NewNode(kind, Span{Cur().begin, Cur().end});
    ++pos_;
    return id;
  }

  // Consumes `count` adjacent tokens as one symbol leaf.
  NodeId Symbol(OperatorClass cls = OperatorClass::kOther,
                std::string op_name = "", size_t count = 1) {
    size_t begin = Cur().begin;
    size_t end = At(pos_ + count - 1).end;
    NodeId id = NewNode(AstNodeKind::kOperator, Span{begin, end});
    nodes_[id].symbol = true;
    nodes_[id].operator_class = cls;
    nodes_[id].op_name = std::move(op_name);
    pos_ += count;
    return id;
  }

  NodeId ExpectSymbol(std::string_view p) {
    Expect(p);
    return Symbol();
  }

  NodeId Compose(AstNodeKind kind, std::vector<NodeId> children) {
    Span span{nodes_[children.front()].span.begin,
              nodes_[children.back()].span.end};
    NodeId id = NewNode(kind, span);
    nodes_[id].children = std::move(children);
    return id;
  }

  NodeId MakeEmptyFile() { return NewNode(AstNodeKind::kFile, Span{0, 0}); }

  // Tokens [from, to) as one recovered LITERAL leaf.
  NodeId Region(size_t from, size_t to) {
    NodeId id = NewNode(AstNodeKind::kLiteral,
                        Span{At(from).begin, At(to - 1).end});
    nodes_[id].recovered = true;
    nodes_[id].operator_class = OperatorClass::kOther;
    return id;
  }

  static void Append(std::vector<NodeId>& out, const Expr& e) {
    out.insert(out.end(), e.pre.begin(), e.pre.end());
    out.push_back(e.core);
    out.insert(out.end(), e.post.begin(), e.post.end());
  }

  // Resets to `start` and skips to just after the next `;` or balanced `}`
  // at nesting depth zero, stopping before a `}` that closes an outer block.
  NodeId RecoverFrom(size_t start) {
    pos_ = start;
    int depth = 0;
    size_t i = start;
    while (At(i).kind != TokKind::kEnd) {
      const Tok& t = At(i);
      if (t.kind == TokKind::kPunct) {
        if (t.text == "(" || t.text == "[" || t.text == "{") {
          ++depth;
        } else if (t.text == ")" || t.text == "]") {
          if (depth > 0) --depth;
        } else if (t.text == "}") {
          if (depth == 0) break;
          if (--depth == 0) {
            ++i;
            if (IsPunct(";", i)) ++i;
            break;
          }
        } else if (t.text == ";" && depth == 0) {
          ++i;
          break;
        }
      }
      ++i;
    }
    if (i == start) ++i;  // always make progress
    NodeId id = Region(start, i);
    pos_ = i;
    return id;
  }

  // ---- declarations --------------------------------------------------------

  void ParseModifiers(std::vector<NodeId>& out) {
    while (true) {
      if (IsPunct("@") && !IsIdent("interface", pos_ + 1)) {
        out.push_back(Symbol());
        if (!IsName()) throw Mismatch{};
        out.push_back(Leaf(AstNodeKind::kTypeName));
        while (IsPunct(".") && IsName(pos_ + 1)) {
          out.push_back(Symbol());
          out.push_back(Leaf(AstNodeKind::kTypeName));
        }
        if (IsPunct("(")) {
          size_t start = pos_;
          int depth = 0;
          do {
            if (IsPunct("(")) ++depth;
            if (IsPunct(")")) --depth;
            ++pos_;
          } while (depth > 0 && !AtEnd());
          if (depth != 0) throw Mismatch{};
          NodeId args = NewNode(AstNodeKind::kLiteral,
                                Span{At(start).begin, At(pos_ - 1).end});
          out.push_back(args);
        }
        continue;
      }
      if (Cur().kind == TokKind::kIdent && kModifiers.count(Cur().text) &&
          !IsPunct("(", pos_ + 1)) {
        out.push_back(Symbol());
        continue;
      }
      return;
    }
  }

  void ParseTypeArgs(std::vector<NodeId>& out) {
    out.push_back(ExpectSymbol("<"));
    if (IsPunct(">")) {  // diamond
      out.push_back(Symbol());
      return;
    }
    while (true) {
      if (IsPunct("?")) {
        out.push_back(Symbol());
        if (IsIdent("extends") || IsIdent("super")) {
          out.push_back(Symbol());
          ParseType(out);
        }
      } else {
        ParseType(out);
      }
      if (IsPunct(",")) {
        out.push_back(Symbol());
        continue;
      }
      break;
    }
    out.push_back(ExpectSymbol(">"));
  }

  // Type tokens become TYPE_NAME leaves and symbols appended to `out`.
  void ParseType(std::vector<NodeId>& out) {
    if (IsIdent("struct") || IsIdent("union") || IsIdent("enum")) {
      out.push_back(Symbol());
      if (!IsName()) throw Mismatch{};
      out.push_back(Leaf(AstNodeKind::kTypeName));
    } else if (Cur().kind == TokKind::kIdent &&
               kCPrimitiveWords.count(Cur().text)) {
      while (Cur().kind == TokKind::kIdent &&
             kCPrimitiveWords.count(Cur().text)) {
        out.push_back(Leaf(AstNodeKind::kTypeName));
      }
    } else {
      if (!IsName()) throw Mismatch{};
      out.push_back(Leaf(AstNodeKind::kTypeName));
      if (IsPunct("<")) ParseTypeArgs(out);
      while (IsPunct(".") && IsName(pos_ + 1)) {
        out.push_back(Symbol());
        out.push_back(Leaf(AstNodeKind::kTypeName));
        if (IsPunct("<")) ParseTypeArgs(out);
      }
    }
    while (IsPunct("[") && IsPunct("]", pos_ + 1)) {
      out.push_back(Symbol());
      out.push_back(Symbol());
    }
    while (IsPunct("*") || IsPunct("&")) out.push_back(Symbol());
  }

  // Tries to parse a type declaration or a method at the current position.
  // Returns -1 (with the position restored) when neither matches.
  NodeId TryMember(bool in_type) {
    size_t start = pos_;
    try {
      std::vector<NodeId> children;
      ParseModifiers(children);
      if (Cur().kind == TokKind::kIdent && kTypeDeclKeywords.count(Cur().text) &&
          IsName(pos_ + 1)) {
        size_t brace = pos_ + 2;
        while (!IsPunct("{", brace) && !IsPunct(";", brace) &&
               At(brace).kind != TokKind::kEnd) {
          ++brace;
        }
        if (IsPunct("{", brace)) return ParseTypeDecl(std::move(children));
        throw Mismatch{};
      }
      if (IsPunct("@") && IsIdent("interface", pos_ + 1)) throw Mismatch{};
      if (IsPunct("<")) ParseTypeArgs(children);
      // Constructor: Name '('. At file scope a modifier must precede it so
      // that calls are not mistaken for declarations.
      if ((in_type || !children.empty()) && IsName() &&
          IsPunct("(", pos_ + 1)) {
        return ParseMethodRest(std::move(children));
      }
      ParseType(children);
      if (!IsName() || !IsPunct("(", pos_ + 1)) throw Mismatch{};
      return ParseMethodRest(std::move(children));
    } catch (const Mismatch&) {
      pos_ = start;
      return -1;
    }
  }

  NodeId ParseTypeDecl(std::vector<NodeId> children) {
    children.push_back(Symbol());  // class/interface/...
    children.push_back(Leaf(AstNodeKind::kIdentifier));
    if (!IsPunct("{")) {
      size_t from = pos_;
      while (!IsPunct("{")) ++pos_;
      children.push_back(Region(from, pos_));
    }
    NodeId open = Symbol();
    children.push_back(open);
    while (!IsPunct("}") && !AtEnd()) {
      if (IsPunct(";")) {
        children.push_back(Symbol());
        continue;
      }
      NodeId member = TryMember(/*in_type=*/true);
      children.push_back(member >= 0 ? member : RecoverFrom(pos_));
    }
    if (IsPunct("}")) {
      children.push_back(Symbol());
    } else {
      warnings_.push_back({"missing '}' closing type declaration",
                           LineOf(nodes_[open].span.begin), true});
    }
    return Compose(AstNodeKind::kTypeDecl, std::move(children));
  }

  // Parameters up to (excluding) the closing `)`.
  void ParseParams(std::vector<NodeId>& children) {
    while (!IsPunct(")")) {
      std::vector<NodeId> param;
      ParseModifiers(param);
      ParseType(param);
      if (IsPunct("...")) param.push_back(Symbol());
      if (!IsName()) throw Mismatch{};
      param.push_back(Leaf(AstNodeKind::kIdentifier));
      while (IsPunct("[") && IsPunct("]", pos_ + 1)) {
        param.push_back(Symbol());
        param.push_back(Symbol());
      }
      children.push_back(Compose(AstNodeKind::kParam, std::move(param)));
      if (IsPunct(",")) {
        children.push_back(Symbol());
        if (IsPunct(")")) throw Mismatch{};
        continue;
      }
      Expect(")");
    }
  }

  // Recovered region from the current position up to the `)` that closes the
  // enclosing parenthesis. Throws Mismatch when there is none.
  NodeId SkipToCloseParen() {
    size_t start = pos_;
    int depth = 0;
    while (!AtEnd()) {
      if (IsPunct("(")) ++depth;
      if (IsPunct(")")) {
        if (depth == 0) break;
        --depth;
      }
      if (IsPunct("{") || IsPunct("}") || IsPunct(";")) throw Mismatch{};
      ++pos_;
    }
    if (AtEnd() || pos_ == start) throw Mismatch{};
    return Region(start, pos_);
  }

  // At the method name.
  NodeId ParseMethodRest(std::vector<NodeId> children) {
    children.push_back(Leaf(AstNodeKind::kIdentifier));
    children.push_back(ExpectSymbol("("));
    if (IsIdent("void") && IsPunct(")", pos_ + 1)) {
      children.push_back(Leaf(AstNodeKind::kTypeName));
    }
    size_t params_start = pos_;
    size_t kept = children.size();
    try {
      ParseParams(children);
    } catch (const Mismatch&) {
      pos_ = params_start;
      children.resize(kept);
      children.push_back(SkipToCloseParen());
    }
    children.push_back(Symbol());
    while (IsPunct("[") && IsPunct("]", pos_ + 1)) {
      children.push_back(Symbol());
      children.push_back(Symbol());
    }
    if (IsIdent("throws")) {
      children.push_back(Symbol());
      while (true) {
        ParseType(children);
        if (!IsPunct(",")) break;
        children.push_back(Symbol());
      }
    }
    if (IsIdent("const")) children.push_back(Symbol());
    if (IsPunct(";")) {
      children.push_back(Symbol());
    } else if (IsPunct("{")) {
      children.push_back(ParseBlock());
    } else {
      throw Mismatch{};
    }
    return Compose(AstNodeKind::kMethodDecl, std::move(children));
  }

  // ---- statements ----------------------------------------------------------

  NodeId ParseBlock() {
    std::vector<NodeId> children;
    NodeId open = ExpectSymbol("{");
    children.push_back(open);
    while (!IsPunct("}") && !AtEnd()) {
      children.push_back(ParseStatementRecovering());
    }
    if (IsPunct("}")) {
      children.push_back(Symbol());
    } else {
      warnings_.push_back({"missing '}' at end of file",
                           LineOf(nodes_[open].span.begin), true});
    }
    return Compose(AstNodeKind::kBlock, std::move(children));
  }

  NodeId ParseStatementRecovering() {
    size_t start = pos_;
    try {
      return ParseStatement();
    } catch (const Mismatch&) {
      NodeId region = RecoverFrom(start);
      warnings_.push_back({"recovered unparseable region",
                           LineOf(nodes_[region].span.begin), false});
      return region;
    }
  }

  NodeId ParseStatement() {
    if (IsPunct("{")) return ParseBlock();
    if (IsPunct(";")) return Compose(AstNodeKind::kExprStmt, {Symbol()});
    if (IsIdent("if")) return ParseIf();
    if (IsIdent("while")) return ParseWhile();
    if (IsIdent("for")) return ParseFor();
    if (IsIdent("try")) return ParseTry();
    if (IsIdent("return")) {
      std::vector<NodeId> children{Symbol()};
      if (!IsPunct(";")) Append(children, ParseExpression());
      children.push_back(ExpectSymbol(";"));
      return Compose(AstNodeKind::kReturnStmt, std::move(children));
    }
    if (IsIdent("break") || IsIdent("continue")) {
      std::vector<NodeId> children{Symbol()};
      if (IsName()) children.push_back(Leaf(AstNodeKind::kIdentifier));
      children.push_back(ExpectSymbol(";"));
      return Compose(AstNodeKind::kExprStmt, std::move(children));
    }
    if (IsIdent("throw")) {
      std::vector<NodeId> children{Symbol()};
      Append(children, ParseExpression());
      children.push_back(ExpectSymbol(";"));
      return Compose(AstNodeKind::kExprStmt, std::move(children));
    }
    if (LooksLikeLocalDecl()) {
      NodeId decl = ParseLocalDecl(/*terminated=*/true);
      return decl;
    }
    std::vector<NodeId> children;
    Append(children, ParseExpression());
    if (IsPunct(";")) {
      children.push_back(Symbol());
    } else if (!AtEnd()) {
      throw Mismatch{};  // a missing `;` is tolerated only at end of file
    }
    return Compose(AstNodeKind::kExprStmt, std::move(children));
  }

  bool LooksLikeLocalDecl() {
    size_t start = pos_;
    size_t mark = nodes_.size();
    bool result = false;
    try {
      std::vector<NodeId> scratch;
      ParseModifiers(scratch);
      ParseType(scratch);
      result = IsName() &&
               (IsPunct("=", pos_ + 1) || IsPunct(";", pos_ + 1) ||
                IsPunct(",", pos_ + 1) || IsPunct("[", pos_ + 1) ||
                IsPunct(":", pos_ + 1) || At(pos_ + 1).kind == TokKind::kEnd);
    } catch (const Mismatch&) {
      result = false;
    }
    pos_ = start;
    nodes_.resize(mark);
    return result;
  }

  // LOCAL_DECL; a declarator with an initializer is an ASSIGNMENT whose
  // first operand is the declared IDENTIFIER.
  NodeId ParseLocalDecl(bool terminated) {
    std::vector<NodeId> children;
    ParseModifiers(children);
    ParseType(children);
    while (true) {
      if (!IsName()) throw Mismatch{};
      std::vector<NodeId> declarator{Leaf(AstNodeKind::kIdentifier)};
      while (IsPunct("[") && IsPunct("]", pos_ + 1)) {
        declarator.push_back(Symbol());
        declarator.push_back(Symbol());
      }
      if (IsPunct("=")) {
        declarator.push_back(Symbol(OperatorClass::kOther, "assign"));
        Append(declarator, ParseAssignmentOrInit());
        NodeId assignment =
            Compose(AstNodeKind::kAssignment, std::move(declarator));
        nodes_[assignment].op_name = "assign";
        children.push_back(assignment);
      } else {
        children.insert(children.end(), declarator.begin(), declarator.end());
      }
      if (IsPunct(",")) {
        children.push_back(Symbol());
        continue;
      }
      break;
    }
    if (terminated) {
      if (IsPunct(";")) {
        children.push_back(Symbol());
      } else if (!AtEnd()) {
        throw Mismatch{};
      }
    }
    return Compose(AstNodeKind::kLocalDecl, std::move(children));
  }

  Expr ParseAssignmentOrInit() {
    if (IsPunct("{")) return Expr{{}, ParseArrayInit(), {}};
    return ParseAssignment();
  }

  NodeId ParseArrayInit() {
    std::vector<NodeId> children{ExpectSymbol("{")};
    while (!IsPunct("}")) {
      Append(children, ParseAssignmentOrInit());
      if (IsPunct(",")) {
        children.push_back(Symbol());
        continue;
      }
      Expect("}");
    }
    children.push_back(Symbol());
    NodeId id = Compose(AstNodeKind::kOperator, std::move(children));
    nodes_[id].operator_class = OperatorClass::kOther;
    nodes_[id].op_name = "arrayInit";
    return id;
  }

  NodeId ParseCondition() {
    std::vector<NodeId> children{ExpectSymbol("(")};
    Append(children, ParseExpression());
    children.push_back(ExpectSymbol(")"));
    return Compose(AstNodeKind::kCondition, std::move(children));
  }

  NodeId ParseIf() {
    std::vector<NodeId> children{Symbol()};
    children.push_back(ParseCondition());
    children.push_back(ParseStatementRecovering());
    if (IsIdent("else")) {
      std::vector<NodeId> clause{Symbol()};
      clause.push_back(ParseStatementRecovering());
      children.push_back(Compose(AstNodeKind::kElseClause, std::move(clause)));
    }
    return Compose(AstNodeKind::kIfStmt, std::move(children));
  }

  NodeId ParseWhile() {
    std::vector<NodeId> children{Symbol()};
    children.push_back(ParseCondition());
    children.push_back(ParseStatementRecovering());
    return Compose(AstNodeKind::kWhileStmt, std::move(children));
  }

  NodeId ParseFor() {
    std::vector<NodeId> children{Symbol()};
    children.push_back(ExpectSymbol("("));
    if (IsForEachHeader()) {
      std::vector<NodeId> decl;
      ParseModifiers(decl);
      ParseType(decl);
      decl.push_back(Leaf(AstNodeKind::kIdentifier));
      children.push_back(Compose(AstNodeKind::kLocalDecl, std::move(decl)));
      children.push_back(ExpectSymbol(":"));
      std::vector<NodeId> cond;
      Append(cond, ParseExpression());
      children.push_back(Compose(AstNodeKind::kCondition, std::move(cond)));
    } else {
      if (!IsPunct(";")) {
        if (LooksLikeLocalDecl()) {
          children.push_back(ParseLocalDecl(/*terminated=*/false));
        } else {
          ParseExpressionList(children);
        }
      }
      children.push_back(ExpectSymbol(";"));
      if (!IsPunct(";")) {
        std::vector<NodeId> cond;
        Append(cond, ParseExpression());
        children.push_back(Compose(AstNodeKind::kCondition, std::move(cond)));
      }
      children.push_back(ExpectSymbol(";"));
      if (!IsPunct(")")) ParseExpressionList(children);
    }
    children.push_back(ExpectSymbol(")"));
    children.push_back(ParseStatementRecovering());
    return Compose(AstNodeKind::kForStmt, std::move(children));
  }

  bool IsForEachHeader() {
    size_t start = pos_;
    size_t mark = nodes_.size();
    bool result = false;
    try {
      std::vector<NodeId> scratch;
      ParseModifiers(scratch);
      ParseType(scratch);
      result = IsName() && IsPunct(":", pos_ + 1);
    } catch (const Mismatch&) {
    }
    pos_ = start;
    nodes_.resize(mark);
    return result;
  }

  void ParseExpressionList(std::vector<NodeId>& out) {
    while (true) {
      Append(out, ParseExpression());
      if (!IsPunct(",")) return;
      out.push_back(Symbol());
    }
  }

  NodeId ParseTry() {
    std::vector<NodeId> children{Symbol()};
    if (!IsPunct("{")) throw Mismatch{};  // try-with-resources
    children.push_back(ParseBlock());
    while (IsIdent("catch")) {
      std::vector<NodeId> clause{Symbol()};
      clause.push_back(ExpectSymbol("("));
      std::vector<NodeId> param;
      ParseModifiers(param);
      ParseType(param);
      while (IsPunct("|")) {
        param.push_back(Symbol());
        ParseType(param);
      }
      if (!IsName()) throw Mismatch{};
      param.push_back(Leaf(AstNodeKind::kIdentifier));
      clause.push_back(Compose(AstNodeKind::kParam, std::move(param)));
      clause.push_back(ExpectSymbol(")"));
      clause.push_back(ParseBlock());
      children.push_back(Compose(AstNodeKind::kCatchClause, std::move(clause)));
    }
    if (IsIdent("finally")) {
      children.push_back(Symbol());
      children.push_back(ParseBlock());
    }
    if (children.size() == 2) throw Mismatch{};
    return Compose(AstNodeKind::kTryStmt, std::move(children));
  }

  // ---- expressions ---------------------------------------------------------

  Expr ParseExpression() { return ParseAssignment(); }

  // Matches an assignment operator at the current position, including the
  // split forms `> >=` and `> > >=`. Returns the token count.
  size_t MatchAssignOp(const AssignOp** op) {
    if (Cur().kind != TokKind::kPunct) return 0;
    if (IsPunct(">") && Adjacent(pos_)) {
      if (IsPunct(">=", pos_ + 1)) {
        *op = &kAssignOps[10];
        return 2;
      }
      if (IsPunct(">", pos_ + 1) && Adjacent(pos_ + 1) &&
          IsPunct(">=", pos_ + 2)) {
        *op = &kAssignOps[11];
        return 3;
      }
      return 0;
    }
    for (const AssignOp& candidate : kAssignOps) {
      if (Cur().text == candidate.spelling) {
        *op = &candidate;
        return 1;
      }
    }
    return 0;
  }

  Expr ParseAssignment() {
    Expr lhs = ParseTernary();
    const AssignOp* op = nullptr;
    size_t count = MatchAssignOp(&op);
    if (count == 0) return lhs;
    std::vector<NodeId> children;
    Append(children, lhs);
    children.push_back(Symbol(OperatorClass::kOther, op->name, count));
    Append(children, ParseAssignmentOrInit());
    NodeId id = Compose(AstNodeKind::kAssignment, std::move(children));
    nodes_[id].op_name = op->name;
    return Expr{{}, id, {}};
  }

  Expr ParseTernary() {
    Expr cond = ParseBinary(1);
    if (!IsPunct("?")) return cond;
    std::vector<NodeId> children;
    Append(children, cond);
    children.push_back(Symbol(OperatorClass::kOther, "conditional"));
    Append(children, ParseTernary());
    children.push_back(ExpectSymbol(":"));
    Append(children, ParseTernary());
    return Expr{{}, MakeOperator(std::move(children), "conditional",
                                 OperatorClass::kOther),
                {}};
  }

  NodeId MakeOperator(std::vector<NodeId> children, std::string name,
                      OperatorClass cls) {
    NodeId id = Compose(AstNodeKind::kOperator, std::move(children));
    nodes_[id].op_name = std::move(name);
    nodes_[id].operator_class = cls;
    return id;
  }

  // Binary operator at the current position; joins adjacent `>` tokens.
  const BinaryOp* MatchBinary(size_t* count) {
    if (Cur().kind != TokKind::kPunct) return nullptr;
    std::string_view spelling = Cur().text;
    *count = 1;
    if (IsPunct(">") && Adjacent(pos_) && IsPunct(">", pos_ + 1)) {
      if (Adjacent(pos_ + 1) && IsPunct(">", pos_ + 2)) {
        spelling = ">>>";
        *count = 3;
      } else {
        spelling = ">>";
        *count = 2;
      }
      // `> >=` and `> > >=` are compound assignments, not shifts.
      if (IsPunct(">=", pos_ + *count) && Adjacent(pos_ + *count - 1)) {
        return nullptr;
      }
    }
    for (const BinaryOp& op : kBinaryOps) {
      if (op.spelling == spelling) return &op;
    }
    return nullptr;
  }

  Expr ParseBinary(int min_precedence) {
    Expr lhs = ParseUnary();
    while (true) {
      if (IsIdent("instanceof") && kInstanceOfPrecedence >= min_precedence) {
        std::vector<NodeId> children;
        Append(children, lhs);
        children.push_back(Symbol(OperatorClass::kOther, "instanceOf"));
        ParseType(children);
        lhs = Expr{{}, MakeOperator(std::move(children), "instanceOf",
                                    OperatorClass::kOther),
                   {}};
        continue;
      }
      size_t count = 0;
      const BinaryOp* op = MatchBinary(&count);
      if (op == nullptr || op->precedence < min_precedence) return lhs;
      std::vector<NodeId> children;
      Append(children, lhs);
      children.push_back(Symbol(op->cls, op->name, count));
      Append(children, ParseBinary(op->precedence + 1));
      lhs = Expr{{}, MakeOperator(std::move(children), op->name, op->cls), {}};
    }
  }

  Expr ParseUnary() {
    struct Prefix {
      std::string_view spelling;
      const char* name;
      OperatorClass cls;
    };
    static constexpr std::array<Prefix, 6> kPrefixes = {{
        {"!", "not", OperatorClass::kLogical},
        {"~", "not", OperatorClass::kBitwise},
        {"-", "minus", OperatorClass::kArithmetic},
        {"+", "plus", OperatorClass::kArithmetic},
        {"++", "preIncrement", OperatorClass::kOther},
        {"--", "preDecrement", OperatorClass::kOther},
    }};
    for (const Prefix& prefix : kPrefixes) {
      if (IsPunct(prefix.spelling)) {
        std::vector<NodeId> children{
            Symbol(prefix.cls, prefix.name)};
        Append(children, ParseUnary());
        return Expr{{}, MakeOperator(std::move(children), prefix.name,
                                     prefix.cls),
                    {}};
      }
    }
    if (IsPunct("(")) {
      if (NodeId cast = TryCast(); cast >= 0) return Expr{{}, cast, {}};
    }
    return ParsePostfix();
  }

  NodeId TryCast() {
    size_t start = pos_;
    size_t mark = nodes_.size();
    try {
      std::vector<NodeId> children{Symbol()};
      bool primitive = Cur().kind == TokKind::kIdent &&
                       (kCPrimitiveWords.count(Cur().text) ||
                        Cur().text == "boolean" || Cur().text == "byte");
      ParseType(children);
      Expect(")");
      children.push_back(Symbol());
      const Tok& next = Cur();
      bool operand_follows =
          next.kind == TokKind::kIdent || next.kind == TokKind::kNumber ||
          next.kind == TokKind::kString || next.kind == TokKind::kChar ||
          IsPunct("(") || IsPunct("!") || IsPunct("~");
      bool is_cast = primitive
                         ? operand_follows || IsPunct("-") || IsPunct("+")
                         : operand_follows;
      if (next.kind == TokKind::kIdent && kReserved.count(next.text) &&
          next.text != "new") {
        is_cast = false;
      }
      if (!is_cast) throw Mismatch{};
      Append(children, ParseUnary());
      return MakeOperator(std::move(children), "cast", OperatorClass::kOther);
    } catch (const Mismatch&) {
      pos_ = start;
      nodes_.resize(mark);
      return -1;
    }
  }

  Expr ParsePostfix() {
    Expr e = ParsePrimary();
    while (true) {
      if (IsPunct(".")) {
        std::vector<NodeId> children;
        Append(children, e);
        children.push_back(Symbol());
        if (IsPunct("<")) ParseTypeArgs(children);  // obj.<T>m()
        if (Cur().kind != TokKind::kIdent) throw Mismatch{};
        children.push_back(Leaf(AstNodeKind::kIdentifier));
        e = Expr{{}, Compose(AstNodeKind::kFieldAccess, std::move(children)),
                 {}};
      } else if (IsPunct("(")) {
        std::vector<NodeId> children;
        Append(children, e);
        ParseArguments(children);
        e = Expr{{}, Compose(AstNodeKind::kCall, std::move(children)), {}};
      } else if (IsPunct("[")) {
        std::vector<NodeId> children;
        Append(children, e);
        children.push_back(Symbol());
        Append(children, ParseExpression());
        children.push_back(ExpectSymbol("]"));
        e = Expr{{}, MakeOperator(std::move(children), "index",
                                  OperatorClass::kOther),
                 {}};
      } else if (IsPunct("++") || IsPunct("--")) {
        const char* name = IsPunct("++") ? "postIncrement" : "postDecrement";
        std::vector<NodeId> children;
        Append(children, e);
        children.push_back(Symbol(OperatorClass::kOther, name));
        e = Expr{{}, MakeOperator(std::move(children), name,
                                  OperatorClass::kOther),
                 {}};
      } else if (IsPunct("->") || IsPunct("::")) {
        throw Mismatch{};  // lambdas and method references
      } else {
        return e;
      }
    }
  }

  void ParseArguments(std::vector<NodeId>& out) {
    out.push_back(ExpectSymbol("("));
    while (!IsPunct(")")) {
      Append(out, ParseExpression());
      if (IsPunct(",")) {
        out.push_back(Symbol());
        if (IsPunct(")")) throw Mismatch{};
        continue;
      }
      Expect(")");
    }
    out.push_back(Symbol());
  }

  Expr ParsePrimary() {
    const Tok& t = Cur();
    switch (t.kind) {
      case TokKind::kNumber:
      case TokKind::kString:
      case TokKind::kChar:
        return Expr{{}, Leaf(AstNodeKind::kLiteral), {}};
      case TokKind::kEnd:
        throw Mismatch{};
      case TokKind::kPunct:
        break;
      case TokKind::kIdent:
        if (t.text == "true" || t.text == "false" || t.text == "null" ||
            t.text == "NULL") {
          return Expr{{}, Leaf(AstNodeKind::kLiteral), {}};
        }
        if (t.text == "new") return Expr{{}, ParseNew(), {}};
        if (kReserved.count(t.text)) throw Mismatch{};
        if (IsPunct("->", pos_ + 1)) throw Mismatch{};
        return Expr{{}, Leaf(AstNodeKind::kIdentifier), {}};
    }
    if (IsPunct("(")) {
      NodeId open = Symbol();
      Expr inner = ParseExpression();
      NodeId close = ExpectSymbol(")");
      if (IsPunct("->")) throw Mismatch{};
      inner.pre.insert(inner.pre.begin(), open);
      inner.post.push_back(close);
      return inner;
    }
    throw Mismatch{};
  }

  NodeId ParseNew() {
    std::vector<NodeId> children{Symbol(OperatorClass::kOther, "new")};
    // Type name without array suffixes; dimensions are parsed below.
    if (!IsName()) throw Mismatch{};
    children.push_back(Leaf(AstNodeKind::kTypeName));
    if (IsPunct("<")) ParseTypeArgs(children);
    while (IsPunct(".") && IsName(pos_ + 1)) {
      children.push_back(Symbol());
      children.push_back(Leaf(AstNodeKind::kTypeName));
      if (IsPunct("<")) ParseTypeArgs(children);
    }
    if (IsPunct("(")) {
      ParseArguments(children);
      if (IsPunct("{")) throw Mismatch{};  // anonymous class body
      NodeId id = Compose(AstNodeKind::kCall, std::move(children));
      nodes_[id].op_name = "new";
      return id;
    }
    if (!IsPunct("[")) throw Mismatch{};
    while (IsPunct("[")) {
      children.push_back(Symbol());
      if (!IsPunct("]")) Append(children, ParseExpression());
      children.push_back(ExpectSymbol("]"));
    }
    if (IsPunct("{")) children.push_back(ParseArrayInit());
    NodeId id = Compose(AstNodeKind::kCall, std::move(children));
    nodes_[id].op_name = "new";
    return id;
  }

  // ---- finalisation --------------------------------------------------------

  // Renumbers reachable nodes in pre-order and fills code, line and parent.
  SubjectAst Finish(NodeId root, std::string path) {
    SubjectAst ast;
    ast.file_path = std::move(path);
    ast.source = std::string(src_);
    std::vector<NodeId> order;
    std::vector<NodeId> stack{root};
    while (!stack.empty()) {
      NodeId id = stack.back();
      stack.pop_back();
      order.push_back(id);
      const auto& children = nodes_[id].children;
      for (auto it = children.rbegin(); it != children.rend(); ++it) {
        stack.push_back(*it);
      }
    }
    std::vector<NodeId> renumber(nodes_.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) {
      renumber[order[i]] = static_cast<NodeId>(i);
    }
    ast.nodes.reserve(order.size());
    for (NodeId old_id : order) {
      AstNode node = std::move(nodes_[old_id]);
      node.id = renumber[old_id];
      for (NodeId& child : node.children) child = renumber[child];
      node.code =
          std::string(src_.substr(node.span.begin,
                                  node.span.end - node.span.begin));
      node.line = LineOf(node.span.begin);
      ast.nodes.push_back(std::move(node));
    }
    for (const AstNode& node : ast.nodes) {
      for (NodeId child : node.children) ast.nodes[child].parent = node.id;
      if (node.kind == AstNodeKind::kMethodDecl) ast.methods.push_back(node.id);
    }
    ast.root = 0;
    ast.warnings = std::move(warnings_);
    if (ast.methods.empty()) {
      ast.warnings.push_back({"no methods recovered", 0, false});
    }
    return ast;
  }

  std::string_view src_;
  std::vector<Tok> toks_;
  size_t pos_ = 0;
  std::vector<AstNode> nodes_;
  std::vector<ParseWarning> warnings_;
  std::vector<size_t> line_starts_;
};

}  // namespace

SubjectAst ParseSubject(std::string_view text, std::string path) {
  Parser parser(text, Lexer(text).Run());
  return parser.Run(std::move(path));
}

}  // namespace concord::subject
