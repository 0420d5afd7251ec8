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

#include "concord/dsl.h"
#include "doctest.h"
#include "support/fixtures.h"
#include "support/generators.h"

namespace concord::dsl {
namespace {

using testing::Rng;

size_t CountErrors(const ConcordModel& model) {
  return static_cast<size_t>(std::count_if(
      model.diagnostics.begin(), model.diagnostics.end(),
      [](const Diagnostic& d) { return d.severity == Severity::kError; }));
}

ConcordModel LoadOneTask(const std::string& operations,
                         const std::string& base = "AST",
                         const std::string& ref = "t") {
  return LoadConfig("Tasks { t { " + operations +
                    " } } Representations { r { \"l.csv\" \"o\" " + base +
                    " " + ref + " } }");
}

TEST_CASE("task two configuration parses into its parts") {
  ConcordModel model = LoadConfig(testing::kTaskTwoConfig, "task2.concord");
  CHECK(model.diagnostics.empty());
  REQUIRE(model.tasks.size() == 1);
  const Task& task = model.tasks[0];
  CHECK(task.name == "task2");
  size_t edge_adds = 0, node_removes = 0;
  for (const Operation& op : task.operations) {
    if (op.op_type == OpType::kAdd && op.targets_edge()) ++edge_adds;
    if (op.op_type == OpType::kRemove && !op.targets_edge()) ++node_removes;
  }
  CHECK(edge_adds == 5);
  CHECK(node_removes == 1);
  REQUIRE(task.conditions.size() == 2);
  CHECK(task.conditions[0] ==
        CodeCondition{ConditionAction::kExclude, BlockKind::kWhile});
  CHECK(task.conditions[1] ==
        CodeCondition{ConditionAction::kExclude, BlockKind::kIf});
  REQUIRE(model.representations.size() == 1);
  const RepresentationSpec& rep = model.representations[0];
  CHECK(rep.name == "r2");
  CHECK(rep.repo_list_path == "/dir/repos_list.csv");
  CHECK(rep.output_dir == "output_dir");
  CHECK(rep.base == std::set<BaseGraphKind>{BaseGraphKind::kAst});
  CHECK(rep.tasks == std::vector<std::string>{"task2"});
  CHECK(task.operations[0].location.line == 3);
}

TEST_CASE("edge keyword on a node removal is only a warning") {
  std::string text(testing::kTaskTwoConfig);
  text.replace(text.find("Node remove"), 4, "Edge");
  ConcordModel model = LoadConfig(text);
  CHECK_FALSE(model.HasErrors());
  REQUIRE(model.diagnostics.size() == 1);
  CHECK(model.diagnostics[0].severity == Severity::kWarning);
}

TEST_CASE("invalid operation and target pairs are errors") {
  SUBCASE("removing an edge kind") {
    CHECK(CountErrors(LoadOneTask("Edge remove next_token")) == 1);
  }
  SUBCASE("adding a node kind") {
    CHECK(CountErrors(LoadOneTask("Node add print")) == 1);
  }
  SUBCASE("node keyword removing an edge kind") {
    ConcordModel model = LoadOneTask("Node remove next_token");
    REQUIRE(CountErrors(model) == 1);
    CHECK(model.diagnostics[0].message.find("edge addition") !=
          std::string::npos);
  }
  SUBCASE("every combination") {
    for (EdgeKind e : kAllEdgeKinds) {
      std::string name(ToString(e));
      CHECK(CountErrors(LoadOneTask("Edge add " + name)) == 0);
      CHECK(CountErrors(LoadOneTask("Edge remove " + name)) == 1);
    }
    for (NodeKind n : kAllNodeKinds) {
      std::string name(ToString(n));
      CHECK(CountErrors(LoadOneTask("Node remove " + name)) == 0);
      CHECK(CountErrors(LoadOneTask("Node add " + name)) == 1);
    }
  }
}

TEST_CASE("references and names are resolved") {
  CHECK(CountErrors(LoadOneTask("Edge add next_token", "AST", "missing")) == 1);
  ConcordModel dup = LoadConfig(
      "Tasks { t { } t { } } Representations { r { \"a\" \"b\" AST t } }");
  CHECK(CountErrors(dup) == 1);
  ConcordModel dup_rep = LoadConfig(
      "Tasks { t { } } Representations { r { \"a\" \"b\" AST t } "
      "r { \"a\" \"b\" CFG t } }");
  CHECK(CountErrors(dup_rep) == 1);
}

TEST_CASE("token edges without an AST base warn") {
  ConcordModel model = LoadOneTask("Edge add next_token", "CFG PDG");
  CHECK_FALSE(model.HasErrors());
  CHECK(model.diagnostics.size() == 1);
  CHECK(LoadOneTask("Edge add computed_from", "CFG").diagnostics.empty());
}

TEST_CASE("syntax errors carry a location") {
  try {
    ParseConfig("Tasks {\n  t {\n    Edge add nothing\n  }\n}\n", "bad.concord");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    REQUIRE(e.errors().size() == 1);
    const Diagnostic& d = e.errors()[0];
    CHECK(d.location.file == "bad.concord");
    CHECK(d.location.line == 3);
    CHECK(d.location.column == 14);
    CHECK(FormatDiagnostic(d).rfind("error: bad.concord:3:14: ", 0) == 0);
  }
  CHECK_THROWS_AS(ParseConfig("Tasks { t { Edge add next_token }"),
                  SyntaxError);
  CHECK_THROWS_AS(ParseConfig("Representations { r { \"a\" \"b\" t } }"),
                  SyntaxError);
  CHECK_THROWS_AS(ParseConfig("Representations { r { \"a\" \"b\" AST } }"),
                  SyntaxError);
  CHECK_THROWS_AS(ParseConfig("Tasks { t { Conditions { exclude while } } }"),
                  SyntaxError);
  CHECK_THROWS_AS(ParseConfig("Representations { r { \"a AST t } }"),
                  SyntaxError);
  CHECK_THROWS_AS(ParseConfig("/* open"), SyntaxError);
  CHECK_THROWS_AS(ParseConfig(""), SyntaxError);
}

TEST_CASE("generated valid configurations produce no diagnostics") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    ConcordModel model = testing::RandomValidModel(rng);
    std::string text = testing::WriteConfig(model, &rng);
    ConcordModel loaded = LoadConfig(text);
    INFO(text);
    CHECK(loaded.diagnostics.empty());
    CHECK(loaded == model);
  }
}

TEST_CASE("render and parse round trip") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    ConcordModel model = testing::RandomValidModel(rng);
    std::string rendered = RenderConfig(model);
    ConcordModel back = ParseConfig(rendered);
    INFO(rendered);
    CHECK(back == model);
    CHECK(RenderConfig(back) == rendered);
  }
  ConcordModel model = LoadConfig(testing::kTaskTwoConfig);
  CHECK(ParseConfig(RenderConfig(model)) == model);
}

TEST_CASE("comments and layout do not change the model") {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    ConcordModel model = testing::RandomValidModel(rng);
    CHECK(ParseConfig(testing::WriteConfig(model, &rng)) ==
          ParseConfig(testing::WriteConfig(model)));
  }
}

TEST_CASE("mutated configurations either parse or raise a syntax error") {
  Rng rng(19);
  static const std::string kInserts[] = {"{", "}", "\"", "Edge", "add",
                                         "AST", "x", "/*", "Tasks", "//"};
  for (int i = 0; i < 500; ++i) {
    std::string text = testing::WriteConfig(testing::RandomValidModel(rng));
    int cut = testing::Uniform(rng, 0, static_cast<int>(text.size()) - 1);
    if (testing::Coin(rng)) {
      text.erase(static_cast<size_t>(cut),
                 static_cast<size_t>(testing::Uniform(rng, 1, 12)));
    } else {
      text.insert(static_cast<size_t>(cut),
                  " " + kInserts[testing::Uniform(rng, 0, 9)] + " ");
    }
    try {
      ConcordModel model = LoadConfig(text);
      if (!model.HasErrors()) {
        CHECK(ParseConfig(RenderConfig(model)) == model);
      }
    } catch (const SyntaxError& e) {
      CHECK_FALSE(e.errors().empty());
    }
  }
}

}  // namespace
}  // namespace concord::dsl
