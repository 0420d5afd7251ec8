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

#include "concord/augment.h"
#include "concord/subject_parser.h"
#include "doctest.h"
#include "support/fixtures.h"
#include "support/generators.h"
#include "support/oracles.h"

namespace concord::augment {
namespace {

using graph::EdgeLabel;
using graph::GraphEdge;
using subject::AstNodeKind;
using subject::ParseSubject;
using subject::SubjectAst;

struct Unit {
  SubjectAst ast;
  UnitContext ctx;
  CodeGraph graph;
};

Unit Make(std::string_view source) {
  Unit u;
  u.ast = ParseSubject(source);
  REQUIRE(!u.ast.methods.empty());
  NodeId m = u.ast.methods[0];
  u.ctx = MakeContext(u.ast, m);
  u.graph = graph::BuildBaseGraph(u.ast, m, {BaseGraphKind::kAst});
  return u;
}

// MakeContext keeps a pointer to the tree; refresh it after moves.
Unit& Fix(Unit& u) {
  u.ctx.ast = &u.ast;
  return u;
}

dsl::Task TaskOf(std::vector<EdgeKind> kinds) {
  dsl::Task t;
  t.name = "t";
  for (EdgeKind k : kinds) {
    dsl::Operation op;
    op.target = k;
    t.operations.push_back(op);
  }
  return t;
}

std::vector<const graph::Occurrence*> OccurrencesOf(const Unit& u,
                                                    const std::string& name) {
  std::vector<const graph::Occurrence*> out;
  auto it = u.ctx.occurrences.by_variable.find(name);
  if (it == u.ctx.occurrences.by_variable.end()) return out;
  for (const graph::Occurrence& o : it->second) out.push_back(&o);
  return out;
}

std::set<std::pair<NodeId, NodeId>> Pairs(const CodeGraph& g, EdgeLabel l) {
  std::set<std::pair<NodeId, NodeId>> out;
  for (const GraphEdge& e : g.EdgesWithLabel(l)) out.insert({e.source, e.target});
  return out;
}

TEST_CASE("straight-line facts") {
  Unit u = Make("void m() { x = 1; y = x; z = x; }");
  Fix(u);
  auto xs = OccurrencesOf(u, "x");
  REQUIRE(xs.size() == 3);
  const FlowState& at_z = u.ctx.facts.at(xs[2]->statement);
  CHECK(at_z.last_reads.at("x") == std::set<NodeId>{xs[1]->node});
  CHECK(at_z.last_writes.at("x") == std::set<NodeId>{xs[0]->node});

  Unit v = Make("void m() { x = 1; y = x; }");
  Fix(v);
  AddLastReadWrite(v.graph, v.ctx.facts, v.ctx.occurrences);
  auto vx = OccurrencesOf(v, "x");
  CHECK(Pairs(v.graph, EdgeLabel::kLastWrite).count({vx[1]->node, vx[0]->node}) == 1);
  for (const GraphEdge& e : v.graph.EdgesWithLabel(EdgeLabel::kLastRead)) {
    CHECK(v.graph.nodes.at(e.source).code != "x");
  }
}

TEST_CASE("reads on both branches reach the join") {
  Unit u = Make("void m() { if (c) { use(x); } else { use(x); } use(x); }");
  Fix(u);
  auto xs = OccurrencesOf(u, "x");
  REQUIRE(xs.size() == 3);
  const FlowState& at_join = u.ctx.facts.at(xs[2]->statement);
  CHECK(at_join.last_reads.at("x") ==
        std::set<NodeId>{xs[0]->node, xs[1]->node});
}

TEST_CASE("loop body reads see themselves") {
  Unit u = Make("void m() { while (c) { use(x); } }");
  Fix(u);
  auto xs = OccurrencesOf(u, "x");
  REQUIRE(xs.size() == 1);
  CHECK(u.ctx.facts.at(xs[0]->statement).last_reads.at("x").count(xs[0]->node) ==
        1);
  AddLastReadWrite(u.graph, u.ctx.facts, u.ctx.occurrences);
  CHECK(Pairs(u.graph, EdgeLabel::kLastRead).count({xs[0]->node, xs[0]->node}) ==
        1);
}

TEST_CASE("flow facts equal path enumeration") {
  testing::Rng rng(41);
  int joins = 0, self_loops = 0;
  for (int i = 0; i < 600; ++i) {
    testing::Program p = testing::RandomProgram(rng, 8, 3);
    INFO(p.source);
    SubjectAst ast = ParseSubject(p.source);
    UnitContext ctx = MakeContext(ast, ast.methods[0]);
    std::map<NodeId, int> align = testing::AlignCfg(ctx.cfg, p);
    REQUIRE(align.size() == p.nodes.size() + 2);
    testing::OracleFacts want = testing::EnumeratePathFacts(p);
    testing::OracleFacts got =
        testing::TranslateFacts(ctx.facts, ctx.occurrences, align);
    INFO("want\n" << testing::Describe(want) << "got\n" << testing::Describe(got));
    CHECK(got == want);
    for (const auto& [n, s] : want) {
      for (const auto& [v, ids] : s.last_reads) {
        joins += ids.size() > 1 ? 1 : 0;
        self_loops += ids.count(n);
      }
    }
  }
  CHECK(joins > 50);
  CHECK(self_loops > 50);
}

TEST_CASE("last read and write edges stay within one variable") {
  testing::Rng rng(43);
  for (int i = 0; i < 200; ++i) {
    Unit u = Make(testing::RandomMethod(rng, 3).source);
    Fix(u);
    AddLastReadWrite(u.graph, u.ctx.facts, u.ctx.occurrences);
    std::map<NodeId, const graph::Occurrence*> occ;
    for (const auto& [name, list] : u.ctx.occurrences.by_variable) {
      for (const graph::Occurrence& o : list) {
        if (o.access == graph::Access::kRead || !occ.count(o.node)) occ[o.node] = &o;
      }
    }
    for (const auto& [name, list] : u.ctx.occurrences.by_variable) {
      for (const graph::Occurrence& o : list) {
        if (o.access == graph::Access::kWrite) occ[o.node] = &o;
      }
    }
    for (EdgeLabel l : {EdgeLabel::kLastRead, EdgeLabel::kLastWrite}) {
      for (const GraphEdge& e : u.graph.EdgesWithLabel(l)) {
        REQUIRE(occ.count(e.source));
        REQUIRE(occ.count(e.target));
        CHECK(occ[e.source]->name == occ[e.target]->name);
      }
    }
  }
}

TEST_CASE("next token and next sibling") {
  Unit u = Make(testing::kSumOfLiterals);
  Fix(u);
  ApplyEdgeOperation(u.graph, EdgeKind::kNextToken, u.ctx);
  // Seven leaves, counting the semicolon.
  CHECK(u.graph.CountLabel(EdgeLabel::kNextToken) == 6);

  Unit w = Make(testing::kCLikeMethod);
  Fix(w);
  ApplyEdgeOperation(w.graph, EdgeKind::kNextSibling, w.ctx);
  NodeId body = subject::BodyOf(w.ast, w.ast.methods[0]);
  std::vector<NodeId> stmts = w.ast.operands(body);
  REQUIRE(stmts.size() == 2);
  CHECK(Pairs(w.graph, EdgeLabel::kNextSibling).count({stmts[0], stmts[1]}) == 1);

  CodeGraph no_ast = graph::BuildBaseGraph(w.ast, w.ast.methods[0],
                                           {BaseGraphKind::kCfg});
  CHECK_THROWS_AS(ApplyEdgeOperation(no_ast, EdgeKind::kNextToken, w.ctx),
                  MissingBase);
  CHECK_THROWS_AS(ApplyEdgeOperation(no_ast, EdgeKind::kNextSibling, w.ctx),
                  MissingBase);
  CodeGraph before = no_ast;
  ApplyEdgeOperation(no_ast, EdgeKind::kComputedFrom, w.ctx);
  CHECK(no_ast.nodes == before.nodes);
}

TEST_CASE("computed from") {
  Unit fig = Make(testing::kSumOfLiterals);
  Fix(fig);
  AddComputedFrom(fig.graph, fig.ast, fig.ast.methods[0]);
  auto edges = fig.graph.EdgesWithLabel(EdgeLabel::kComputedFrom);
  REQUIRE(edges.size() == 2);
  for (const GraphEdge& e : edges) {
    CHECK(fig.graph.nodes.at(e.source).kind == AstNodeKind::kLiteral);
    CHECK(fig.graph.nodes.at(e.target).code == "i");
  }
  auto sources = [](std::string_view src) {
    Unit u = Make(src);
    Fix(u);
    AddComputedFrom(u.graph, u.ast, u.ast.methods[0]);
    std::multiset<std::string> out;
    for (const GraphEdge& e : u.graph.EdgesWithLabel(EdgeLabel::kComputedFrom)) {
      out.insert(u.graph.nodes.at(e.source).code + ">" +
                 u.graph.nodes.at(e.target).code);
    }
    return out;
  };
  CHECK(sources("x = y;") == std::multiset<std::string>{"y>x"});
  CHECK(sources("x = f(a, 2);") == std::multiset<std::string>{"a>x", "2>x"});
  CHECK(sources("x = o.g(a);") == std::multiset<std::string>{"o>x", "a>x"});
}

TEST_CASE("returns to") {
  Unit u = Make(
      "int m(int a) { while (a > 0) { if (a == 3) { return 1; } a--; } return 0; }");
  Fix(u);
  AddReturnsTo(u.graph, u.ast, u.ast.methods[0]);
  auto edges = u.graph.EdgesWithLabel(EdgeLabel::kReturnsTo);
  CHECK(edges.size() == 2);
  for (const GraphEdge& e : edges) {
    CHECK(u.graph.nodes.at(e.source).kind == AstNodeKind::kReturnStmt);
    CHECK(e.target == u.ast.methods[0]);
  }
  Unit v = Make("void m() { f(); }");
  Fix(v);
  AddReturnsTo(v.graph, v.ast, v.ast.methods[0]);
  CHECK(v.graph.CountLabel(EdgeLabel::kReturnsTo) == 0);
}

TEST_CASE("guarded by a condition") {
  Unit u = Make(testing::kGuardMethod);
  Fix(u);
  ApplyEdgeOperation(u.graph, EdgeKind::kGuardedBy, u.ctx);
  auto pos = u.graph.EdgesWithLabel(EdgeLabel::kGuardedBy);
  auto neg = u.graph.EdgesWithLabel(EdgeLabel::kGuardedByNegation);
  REQUIRE(pos.size() == 1);
  REQUIRE(neg.size() == 1);
  CHECK(u.graph.nodes.at(pos[0].source).code == "a");
  CHECK(u.graph.nodes.at(pos[0].source).line == 3);
  CHECK(u.graph.nodes.at(pos[0].target).kind == AstNodeKind::kCondition);
  CHECK(u.graph.nodes.at(neg[0].source).code == "b");
  CHECK(u.graph.nodes.at(neg[0].source).line == 5);
  CHECK(neg[0].target == pos[0].target);

  Unit other = Make("void m() { if (a > 0) { b = 1; } }");
  Fix(other);
  ApplyEdgeOperation(other.graph, EdgeKind::kGuardedBy, other.ctx);
  CHECK(other.graph.CountLabel(EdgeLabel::kGuardedBy) == 0);
  CHECK(other.graph.CountLabel(EdgeLabel::kGuardedByNegation) == 0);
}

TEST_CASE("loop edges") {
  Unit u = Make(
      "void m() { while (a) { for (int i = 0; i < n; i++) { f(i); } } }");
  Fix(u);
  ApplyEdgeOperation(u.graph, EdgeKind::kWhileCfg, u.ctx);
  ApplyEdgeOperation(u.graph, EdgeKind::kForCfg, u.ctx);
  auto we = u.graph.EdgesWithLabel(EdgeLabel::kWhileExec);
  auto wn = u.graph.EdgesWithLabel(EdgeLabel::kWhileNext);
  auto fe = u.graph.EdgesWithLabel(EdgeLabel::kForExec);
  auto fn = u.graph.EdgesWithLabel(EdgeLabel::kForNext);
  REQUIRE(we.size() == 1);
  REQUIRE(wn.size() == 1);
  REQUIRE(fe.size() == 1);
  REQUIRE(fn.size() == 1);
  CHECK(u.graph.nodes.at(we[0].source).code == "(a)");
  CHECK(u.graph.nodes.at(we[0].target).kind == AstNodeKind::kBlock);
  CHECK(wn[0].source == we[0].target);
  CHECK(wn[0].target == we[0].source);
  CHECK(u.graph.nodes.at(fe[0].source).code == "i < n");
  CHECK(fn[0].source == fe[0].target);
  CHECK(u.ast.is_ancestor(we[0].target, fe[0].source));

  Unit flat = Make("void m() { f(); }");
  Fix(flat);
  ApplyEdgeOperation(flat.graph, EdgeKind::kWhileCfg, flat.ctx);
  ApplyEdgeOperation(flat.graph, EdgeKind::kForCfg, flat.ctx);
  CHECK(flat.graph.edges.size() == graph::BuildAstGraph(flat.ast, flat.ast.methods[0]).edges.size());
}

TEST_CASE("edge families on generated methods") {
  testing::Rng rng(47);
  dsl::Task all = TaskOf({kAllEdgeKinds.begin(), kAllEdgeKinds.end()});
  for (int i = 0; i < 300; ++i) {
    testing::GeneratedMethod m = testing::RandomMethod(rng, 3);
    INFO(m.source);
    Unit u = Make(m.source);
    Fix(u);
    CodeGraph base = u.graph;
    CodeGraph g = ApplyTask(base, all, u.ctx);

    // Only edges are added.
    CHECK(g.nodes == base.nodes);
    CHECK(std::includes(g.edges.begin(), g.edges.end(), base.edges.begin(),
                        base.edges.end()));

    // One simple path over the leaves in source order.
    std::vector<NodeId> leaves = subject::LeavesInOrder(u.ast, u.ast.methods[0]);
    auto nt = Pairs(g, EdgeLabel::kNextToken);
    CHECK(nt.size() + 1 == leaves.size());
    for (size_t k = 1; k < leaves.size(); ++k) {
      CHECK(nt.count({leaves[k - 1], leaves[k]}) == 1);
    }

    size_t siblings = 0;
    std::map<NodeId, size_t> children;
    for (const GraphEdge& e : base.edges) ++children[e.source];
    for (const auto& [p, c] : children) siblings += c - 1;
    CHECK(g.CountLabel(EdgeLabel::kNextSibling) == siblings);

    auto llu = Pairs(g, EdgeLabel::kLastLexicalUse);
    size_t chain_edges = 0;
    for (const auto& [name, list] : u.ctx.occurrences.by_variable) {
      std::vector<NodeId> nodes;
      for (const graph::Occurrence& o : list) {
        if (nodes.empty() || nodes.back() != o.node) nodes.push_back(o.node);
      }
      for (size_t k = 1; k < nodes.size(); ++k) {
        CHECK(llu.count({nodes[k], nodes[k - 1]}) == 1);
      }
      chain_edges += nodes.size() - 1;
    }
    CHECK(llu.size() == chain_edges);

    CHECK(g.CountLabel(EdgeLabel::kWhileExec) ==
          static_cast<size_t>(m.stats.while_loops));
    CHECK(g.CountLabel(EdgeLabel::kWhileNext) ==
          static_cast<size_t>(m.stats.while_loops));
    CHECK(g.CountLabel(EdgeLabel::kForExec) ==
          static_cast<size_t>(m.stats.for_loops));
    CHECK(g.CountLabel(EdgeLabel::kForNext) ==
          static_cast<size_t>(m.stats.for_loops));
    CHECK(g.CountLabel(EdgeLabel::kReturnsTo) ==
          static_cast<size_t>(m.stats.returns));

    for (EdgeLabel l : {EdgeLabel::kGuardedBy, EdgeLabel::kGuardedByNegation}) {
      for (const GraphEdge& e : g.EdgesWithLabel(l)) {
        const subject::AstNode& cond = u.ast.node(e.target);
        REQUIRE(cond.kind == AstNodeKind::kCondition);
        NodeId if_stmt = cond.parent;
        REQUIRE(u.ast.node(if_stmt).kind == AstNodeKind::kIfStmt);
        subject::IfParts parts = subject::GetIfParts(u.ast, if_stmt);
        NodeId branch =
            l == EdgeLabel::kGuardedBy ? parts.then_branch : parts.else_branch;
        REQUIRE(branch >= 0);
        CHECK(u.ast.is_ancestor(branch, e.source));
        bool in_condition = false;
        for (NodeId id : u.ast.subtree(e.target)) {
          const subject::AstNode& n = u.ast.node(id);
          in_condition = in_condition || (n.kind == AstNodeKind::kIdentifier &&
                                          n.code == u.ast.node(e.source).code);
        }
        CHECK(in_condition);
      }
    }

    // Declaration order of disjoint families does not matter.
    std::vector<EdgeKind> shuffled(kAllEdgeKinds.begin(), kAllEdgeKinds.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(ApplyTask(base, TaskOf(shuffled), u.ctx) == g);
  }
}

TEST_CASE("tasks") {
  Unit u = Make(
      "void m() { int i = 0; while (i < 3) { for (int j = 0; j < i; j++) { "
      "if (i > j) { s = s + j; } } i++; } }");
  Fix(u);
  CodeGraph base = u.graph;
  CHECK(ApplyTask(base, dsl::Task{}, u.ctx) == base);

  dsl::ConcordModel model = dsl::LoadConfig(testing::kTaskTwoConfig);
  CodeGraph g = ApplyTask(base, model.tasks[0], u.ctx);
  std::set<EdgeLabel> labels;
  for (const GraphEdge& e : g.edges) labels.insert(e.label);
  CHECK(labels == std::set<EdgeLabel>{
                      EdgeLabel::kAst, EdgeLabel::kNextToken,
                      EdgeLabel::kForExec, EdgeLabel::kForNext,
                      EdgeLabel::kWhileExec, EdgeLabel::kWhileNext,
                      EdgeLabel::kComputedFrom, EdgeLabel::kGuardedBy});

  dsl::Task twice = TaskOf({EdgeKind::kComputedFrom, EdgeKind::kComputedFrom});
  CHECK(ApplyTask(base, twice, u.ctx) ==
        ApplyTask(base, TaskOf({EdgeKind::kComputedFrom}), u.ctx));
}

}  // namespace
}  // namespace concord::augment
