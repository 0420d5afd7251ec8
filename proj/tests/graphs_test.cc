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

#include <algorithm>
#include <string>

#include "concord/graphs.h"
#include "concord/subject_parser.h"
#include "doctest.h"
#include "support/fixtures.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace concord::graph {
namespace {

using subject::AstNodeKind;
using subject::ParseSubject;
using subject::SubjectAst;

NodeId FindCode(const SubjectAst& ast, AstNodeKind kind, std::string_view code) {
  for (const subject::AstNode& n : ast.nodes) {
    if (n.kind == kind && n.code == code) return n.id;
  }
  FAIL("no " << subject::ToString(kind) << " '" << code << "'");
  return -1;
}

std::set<NodeId> Successors(const Cfg& cfg, NodeId n) {
  auto it = cfg.successors.find(n);
  if (it == cfg.successors.end()) return {};
  return {it->second.begin(), it->second.end()};
}

std::set<std::pair<NodeId, NodeId>> Pairs(const std::vector<GraphEdge>& edges,
                                          EdgeLabel label) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const GraphEdge& e : edges) {
    if (e.label == label) out.insert({e.source, e.target});
  }
  return out;
}

void CheckTree(const CodeGraph& g) {
  CHECK(g.edges.size() + 1 == g.nodes.size());
  std::map<NodeId, int> indegree;
  for (const GraphEdge& e : g.edges) {
    CHECK(e.label == EdgeLabel::kAst);
    CHECK(e.source < e.target);  // pre-order ids
    ++indegree[e.target];
  }
  int roots = 0;
  for (const auto& [id, n] : g.nodes) {
    int d = indegree[id];
    CHECK(d <= 1);
    roots += d == 0 ? 1 : 0;
  }
  CHECK(roots == 1);
}

TEST_CASE("ast graph of the c-like method") {
  SubjectAst ast = ParseSubject(testing::kCLikeMethod);
  CodeGraph g = BuildAstGraph(ast, ast.methods[0]);
  CheckTree(g);
  CHECK(g.nodes.size() == ast.subtree(ast.methods[0]).size());
  CHECK(g.nodes.at(ast.methods[0]).kind == AstNodeKind::kMethodDecl);
  CHECK(g.bases == std::set<BaseGraphKind>{BaseGraphKind::kAst});
  CHECK_THROWS_AS(BuildAstGraph(ast, ast.root), std::out_of_range);
}

TEST_CASE("control flow of the c-like method") {
  SubjectAst ast = ParseSubject(testing::kCLikeMethod);
  Cfg cfg = BuildCfg(ast, ast.methods[0]);
  NodeId decl_a = FindCode(ast, AstNodeKind::kLocalDecl, "int a = 0;");
  NodeId decl_b = FindCode(ast, AstNodeKind::kLocalDecl, "int b = a*MIN;");
  NodeId cond = FindCode(ast, AstNodeKind::kCondition, "(a < MIN)");
  CHECK(cfg.entry == ast.methods[0]);
  CHECK(ast.node(cfg.exit).kind == AstNodeKind::kBlock);
  CHECK(cfg.statement_nodes == std::vector<NodeId>{decl_a, cond, decl_b});
  CHECK(Successors(cfg, cfg.entry) == std::set<NodeId>{decl_a});
  CHECK(Successors(cfg, decl_a) == std::set<NodeId>{cond});
  CHECK(Successors(cfg, cond) == std::set<NodeId>{decl_b, cfg.exit});
  CHECK(Successors(cfg, decl_b) == std::set<NodeId>{cfg.exit});
  CHECK(cfg.diagnostics.empty());

  std::vector<GraphEdge> pdg = BuildPdg(ast, cfg);
  CHECK(Pairs(pdg, EdgeLabel::kPdgData) ==
        std::set<std::pair<NodeId, NodeId>>{{decl_a, cond}, {decl_a, decl_b}});
  CHECK(Pairs(pdg, EdgeLabel::kPdgCtrl) ==
        std::set<std::pair<NodeId, NodeId>>{{cond, decl_b}});
}

TEST_CASE("definitions from both branches reach the merge point") {
  SubjectAst ast = ParseSubject("void m() { x = 1; if (c) { x = 2; } y = x; }");
  Cfg cfg = BuildCfg(ast, ast.methods[0]);
  NodeId d1 = FindCode(ast, AstNodeKind::kExprStmt, "x = 1;");
  NodeId d2 = FindCode(ast, AstNodeKind::kExprStmt, "x = 2;");
  NodeId use = FindCode(ast, AstNodeKind::kExprStmt, "y = x;");
  std::set<std::pair<NodeId, NodeId>> data =
      Pairs(BuildPdg(ast, cfg), EdgeLabel::kPdgData);
  CHECK(data.count({d1, use}) == 1);
  CHECK(data.count({d2, use}) == 1);

  SubjectAst plain = ParseSubject("void m() { f(); g(1); }");
  CHECK(Pairs(BuildPdg(plain, BuildCfg(plain, plain.methods[0])),
              EdgeLabel::kPdgData)
            .empty());
}

TEST_CASE("jumps, loops and handlers") {
  SubjectAst ast = ParseSubject(
      "int m(int n) {\n"
      "  int s = 0;\n"
      "  for (int i = 0; i < n; i++) {\n"
      "    if (i == 3) continue;\n"
      "    if (i == 7) break;\n"
      "    s += i;\n"
      "  }\n"
      "  try {\n"
      "    s = f(s);\n"
      "  } catch (Exception e) {\n"
      "    s = -1;\n"
      "  } finally {\n"
      "    g();\n"
      "  }\n"
      "  return s;\n"
      "}\n");
  Cfg cfg = BuildCfg(ast, ast.methods[0]);
  CHECK(cfg.diagnostics.empty());
  NodeId init = FindCode(ast, AstNodeKind::kLocalDecl, "int i = 0");
  NodeId cond = FindCode(ast, AstNodeKind::kCondition, "i < n");
  NodeId update = FindCode(ast, AstNodeKind::kOperator, "i++");
  NodeId cont = FindCode(ast, AstNodeKind::kExprStmt, "continue;");
  NodeId brk = FindCode(ast, AstNodeKind::kExprStmt, "break;");
  NodeId call = FindCode(ast, AstNodeKind::kExprStmt, "s = f(s);");
  NodeId handler = FindCode(ast, AstNodeKind::kCatchClause,
                            "catch (Exception e) {\n    s = -1;\n  }");
  NodeId fin = FindCode(ast, AstNodeKind::kExprStmt, "g();");
  NodeId ret = FindCode(ast, AstNodeKind::kReturnStmt, "return s;");
  CHECK(Successors(cfg, init) == std::set<NodeId>{cond});
  CHECK(Successors(cfg, cont) == std::set<NodeId>{update});
  CHECK(Successors(cfg, update) == std::set<NodeId>{cond});
  CHECK(Successors(cfg, cond).size() == 2);
  CHECK(Successors(cfg, brk).size() == 1);
  CHECK(Successors(cfg, call).count(handler) == 1);
  CHECK(Successors(cfg, call).count(fin) == 1);
  CHECK(Successors(cfg, fin) == std::set<NodeId>{ret});
  CHECK(Successors(cfg, ret) == std::set<NodeId>{cfg.exit});
  NodeId after_loop = *Successors(cfg, brk).begin();
  CHECK(ast.node(after_loop).span.begin > ast.node(update).span.end);

  SubjectAst dead = ParseSubject("void m() { return; x = 1; }");
  Cfg dead_cfg = BuildCfg(dead, dead.methods[0]);
  CHECK_FALSE(dead_cfg.diagnostics.empty());
}

TEST_CASE("cfg, data and control dependences match the oracles") {
  testing::Rng rng(31);
  for (int i = 0; i < 500; ++i) {
    testing::Program p = testing::RandomProgram(rng, 8, 3);
    INFO(p.source);
    SubjectAst ast = ParseSubject(p.source);
    REQUIRE(ast.methods.size() == 1);
    Cfg cfg = BuildCfg(ast, ast.methods[0]);
    std::map<NodeId, int> align = testing::AlignCfg(cfg, p);
    REQUIRE(align.size() == p.nodes.size() + 2);

    std::map<int, std::set<int>> got;
    for (const auto& [from, tos] : cfg.successors) {
      for (NodeId to : tos) got[align.at(from)].insert(align.at(to));
    }
    CHECK(got == p.successors);

    std::vector<GraphEdge> pdg = BuildPdg(ast, cfg);
    std::set<std::pair<int, int>> data, ctrl;
    for (const GraphEdge& e : pdg) {
      auto pair = std::make_pair(align.at(e.source), align.at(e.target));
      (e.label == EdgeLabel::kPdgData ? data : ctrl).insert(pair);
    }
    CHECK(data == testing::OracleDataDependences(p));
    CHECK(ctrl == testing::OracleControlDependences(p));
  }
}

TEST_CASE("cfg well-formedness on generated methods") {
  testing::Rng rng(37);
  for (int i = 0; i < 300; ++i) {
    testing::GeneratedMethod m = testing::RandomMethod(rng, 3);
    INFO(m.source);
    SubjectAst ast = ParseSubject(m.source);
    Cfg cfg = BuildCfg(ast, ast.methods[0]);
    CHECK(std::is_sorted(cfg.statement_nodes.begin(), cfg.statement_nodes.end()));
    for (NodeId s : cfg.all_nodes()) {
      if (s == cfg.exit) {
        CHECK(Successors(cfg, s).empty());
        continue;
      }
      CHECK_FALSE(Successors(cfg, s).empty());
      const subject::AstNode& n = ast.node(s);
      if (n.kind == AstNodeKind::kCondition) {
        AstNodeKind parent = ast.node(n.parent).kind;
        if (parent == AstNodeKind::kIfStmt || parent == AstNodeKind::kWhileStmt ||
            parent == AstNodeKind::kForStmt) {
          // Inside a try body the handler edge comes on top.
          size_t normal = 0;
          for (NodeId t : Successors(cfg, s)) {
            if (ast.node(t).kind != AstNodeKind::kCatchClause) ++normal;
          }
          CHECK(normal == 2);
        }
      }
    }
    auto preds = cfg.predecessors();
    for (NodeId s : cfg.statement_nodes) {
      CHECK(preds.count(s) == 1);
      CHECK(cfg.statement_of.at(s) == s);
    }
    // Fixed point is stable under recomputation.
    OccurrenceTable occ = BuildOccurrences(ast, cfg);
    CHECK(ReachingDefinitions(cfg, occ) == ReachingDefinitions(cfg, occ));
  }
}

TEST_CASE("merging base graphs") {
  SubjectAst ast = ParseSubject(testing::kCLikeMethod);
  NodeId unit = ast.methods[0];
  CodeGraph tree = BuildAstGraph(ast, unit);
  Cfg cfg = BuildCfg(ast, unit);
  std::vector<GraphEdge> pdg = BuildPdg(ast, cfg);

  CodeGraph only_ast =
      MergeBases(ast, tree, std::nullopt, std::nullopt, {BaseGraphKind::kAst});
  CHECK(only_ast.nodes == tree.nodes);
  CHECK(only_ast.edges == tree.edges);

  CodeGraph with_cfg = MergeBases(ast, tree, cfg, std::nullopt,
                                  {BaseGraphKind::kAst, BaseGraphKind::kCfg});
  CHECK(with_cfg.nodes == tree.nodes);
  CHECK(with_cfg.CountLabel(EdgeLabel::kCfg) == 5);

  CodeGraph only_cfg =
      MergeBases(ast, std::nullopt, cfg, std::nullopt, {BaseGraphKind::kCfg});
  std::set<NodeId> want(cfg.statement_nodes.begin(), cfg.statement_nodes.end());
  want.insert(cfg.entry);
  want.insert(cfg.exit);
  std::set<NodeId> have;
  for (const auto& [id, n] : only_cfg.nodes) have.insert(id);
  CHECK(have == want);

  CodeGraph all = BuildBaseGraph(
      ast, unit, {BaseGraphKind::kAst, BaseGraphKind::kCfg, BaseGraphKind::kPdg});
  CodeGraph stripped = all;
  stripped.edges.clear();
  for (const GraphEdge& e : all.edges) {
    if (e.label == EdgeLabel::kAst) stripped.edges.insert(e);
  }
  CHECK(stripped.edges == tree.edges);
  CHECK(stripped.nodes == tree.nodes);
  CHECK(all.CountLabel(EdgeLabel::kPdgData) == 2);
  CHECK(all.CountLabel(EdgeLabel::kPdgCtrl) == 1);

  CHECK_THROWS(MergeBases(ast, tree, cfg, pdg, {}));
  CHECK_THROWS(MergeBases(ast, std::nullopt, cfg, pdg, {BaseGraphKind::kAst}));
}

TEST_CASE("class graphs combine method graphs") {
  SubjectAst ast = ParseSubject(
      "class A {\n  void f() { x = 1; }\n  int g(int y) { return y; }\n}\n");
  REQUIRE(ast.methods.size() == 2);
  CodeGraph f = BuildBaseGraph(ast, ast.methods[0], {BaseGraphKind::kAst});
  CodeGraph g = BuildBaseGraph(ast, ast.methods[1], {BaseGraphKind::kAst});

  CodeGraph one = MergeClass({f}, "A");
  CHECK(one.nodes.size() == f.nodes.size() + 1);
  CHECK(one.edges.size() == f.edges.size() + 1);

  CodeGraph both = MergeClass({f, g}, "A");
  CHECK(both.nodes.size() == f.nodes.size() + g.nodes.size() + 1);
  CHECK(both.edges.size() == f.edges.size() + g.edges.size() + 2);
  CHECK(both.nodes.at(0).kind == AstNodeKind::kTypeDecl);
  CHECK(both.nodes.at(0).code == "A");

  CodeGraph twice = MergeClass({f, f}, "A");  // colliding ids
  CHECK(twice.nodes.size() == 2 * f.nodes.size() + 1);
  for (const GraphEdge& e : twice.edges) {
    CHECK(twice.has_node(e.source));
    CHECK(twice.has_node(e.target));
  }
  CHECK_THROWS(MergeClass({}, "A"));
}

TEST_CASE("graph edge bookkeeping") {
  CodeGraph g;
  g.AddNode({1, AstNodeKind::kIdentifier, "a", 1});
  g.AddNode({2, AstNodeKind::kIdentifier, "b", 1});
  CHECK(g.AddEdge(1, 2, EdgeLabel::kNextToken));
  CHECK_FALSE(g.AddEdge(1, 2, EdgeLabel::kNextToken));
  CHECK(g.AddEdge(1, 2, EdgeLabel::kLastRead));
  CHECK_THROWS_AS(g.AddEdge(1, 3, EdgeLabel::kAst), std::invalid_argument);
  CHECK(g.CountLabel(EdgeLabel::kNextToken) == 1);
  for (EdgeLabel l : kAllEdgeLabels) CHECK(ParseEdgeLabel(ToString(l)) == l);
  CHECK_FALSE(ParseEdgeLabel("NOPE").has_value());
}

}  // namespace
}  // namespace concord::graph
