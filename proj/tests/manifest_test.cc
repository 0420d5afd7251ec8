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

#include <filesystem>
#include <string>

#include "concord/manifest.h"
#include "concord/serialize.h"
#include "concord/stats.h"
#include "doctest.h"
#include "support/generators.h"

namespace concord::pipeline {
namespace {

namespace fs = std::filesystem;

fs::path TempDir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("concord_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST_CASE("csv quoting") {
  CHECK(CsvField("plain") == "plain");
  CHECK(CsvField("") == "");
  CHECK(CsvField("a,b") == "\"a,b\"");
  CHECK(CsvField("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(CsvField("two\nlines") == "\"two\nlines\"");
  CHECK(CsvField("cr\r") == "\"cr\r\"");
  CHECK(RenderCsv({{"a", "b,c"}, {"", "\""}}) == "a,\"b,c\"\n,\"\"\"\"\n");
}

TEST_CASE("csv parsing") {
  CHECK(ParseCsv("a,b\r\nc,d\r\n") ==
        std::vector<CsvRow>{{"a", "b"}, {"c", "d"}});
  CHECK(ParseCsv("a,\"x\ny\",b\n") ==
        std::vector<CsvRow>{{"a", "x\ny", "b"}});
  CHECK(ParseCsv("last") == std::vector<CsvRow>{{"last"}});
  CHECK(ParseCsv("") .empty());
  CHECK_THROWS_AS(ParseCsv("a,\"open\n"), std::invalid_argument);

  testing::Rng rng(59);
  const std::string kAlphabet = "ab,\"\n\r x";
  for (int i = 0; i < 500; ++i) {
    std::vector<CsvRow> rows(static_cast<size_t>(testing::Uniform(rng, 1, 4)));
    size_t width = static_cast<size_t>(testing::Uniform(rng, 1, 4));
    for (CsvRow& row : rows) {
      for (size_t c = 0; c < width; ++c) {
        std::string field;
        int len = testing::Uniform(rng, 0, 6);
        for (int k = 0; k < len; ++k) {
          field += kAlphabet[static_cast<size_t>(
              testing::Uniform(rng, 0, static_cast<int>(kAlphabet.size()) - 1))];
        }
        row.push_back(field);
      }
    }
    // A lone empty field cannot be told apart from a blank line.
    if (width == 1) {
      for (CsvRow& row : rows) row[0] += "z";
    }
    CHECK(ParseCsv(RenderCsv(rows)) == rows);
  }
}

Manifest Sample() {
  Manifest m;
  m.representations = {"r1", "r2", "r3"};
  ManifestRow row;
  row.concord_id = 1;
  row.project = "proj,ect";
  row.baseline_file = "baseline/proj/m_1.code";
  row.files = {{"r1", "r1/proj/m_1.json"},
               {"r2", "r2/proj/m_1.json"},
               {"r3", ""}};
  row.label = 1;
  row.split = "test";
  m.rows.push_back(row);
  return m;
}

TEST_CASE("manifest layout") {
  Manifest m = Sample();
  CHECK(m.Header() == std::vector<std::string>{"concord_id", "project",
                                               "baseline_file", "r1_file",
                                               "r2_file", "r3_file", "label",
                                               "split"});
  std::string text = RenderManifest(m);
  CHECK(text ==
        "concord_id,project,baseline_file,r1_file,r2_file,r3_file,label,split\n"
        "1,\"proj,ect\",baseline/proj/m_1.code,r1/proj/m_1.json,"
        "r2/proj/m_1.json,,1,test\n");
  Manifest back = ParseManifest(text);
  back.rows[0].unit = m.rows[0].unit;
  CHECK(back == m);
  CHECK_THROWS_AS(ParseManifest("id,project\n"), std::invalid_argument);
  CHECK_THROWS_AS(
      ParseManifest("concord_id,project,baseline_file,r1_file,label,split\n"
                    "1,p,b\n"),
      std::invalid_argument);
}

TEST_CASE("repository lists") {
  fs::path dir = TempDir("repos");
  WriteFile(dir / "with_header.csv", "repo_path\nalpha\n\n/abs/beta\n");
  WriteFile(dir / "plain.csv", "alpha\r\ngamma,ignored\r\n");
  CHECK(ReadRepoList(dir / "with_header.csv") ==
        std::vector<fs::path>{dir / "alpha", "/abs/beta"});
  CHECK(ReadRepoList(dir / "plain.csv") ==
        std::vector<fs::path>{dir / "alpha", dir / "gamma"});
  WriteFile(dir / "empty.csv", "");
  CHECK(ReadRepoList(dir / "empty.csv").empty());
  CHECK_THROWS_AS(ReadRepoList(dir / "missing.csv"), std::runtime_error);

  WriteFile(dir / "labels.csv",
            "project,unit,label,split\np,m,1,val\np,n,0,\n");
  auto labels = ReadLabels(dir / "labels.csv");
  REQUIRE(labels.size() == 2);
  CHECK(labels.at({"p", "m"}).label == 1);
  CHECK(labels.at({"p", "m"}).split == "val");
  CHECK(labels.at({"p", "n"}).split.empty());
  WriteFile(dir / "bad_labels.csv", "project,unit,label\np,m,yes\n");
  CHECK_THROWS_AS(ReadLabels(dir / "bad_labels.csv"), std::invalid_argument);
  fs::remove_all(dir);
}

TEST_CASE("size statistics") {
  fs::path dir = TempDir("stats");
  auto graph_with = [](int nodes, int edges) {
    graph::CodeGraph g;
    for (int i = 0; i < nodes; ++i) {
      g.AddNode({i, subject::AstNodeKind::kIdentifier, "x", 1});
    }
    for (int i = 1; i <= edges; ++i) {
      g.AddEdge(0, i % nodes, graph::EdgeLabel::kNextToken);
      if (i % nodes == 0) g.AddEdge(0, 0, graph::EdgeLabel::kAst);
    }
    return g;
  };
  WriteGraph(graph_with(10, 4), dir / "a1.json");
  WriteGraph(graph_with(6, 2), dir / "a2.json");
  WriteGraph(graph_with(10, 4), dir / "b1.json");
  WriteGraph(graph_with(10, 4), dir / "b2.json");
  Manifest m;
  m.representations = {"base", "small"};
  ManifestRow r1, r2;
  r1.concord_id = 1;
  r1.files = {{"base", "b1.json"}, {"small", "a1.json"}};
  r2.concord_id = 2;
  r2.files = {{"base", "b2.json"}, {"small", "a2.json"}};
  m.rows = {r1, r2};

  RunStats stats = ComputeStats(m, dir, std::string("base"));
  const RepresentationStats* small = stats.Find("small");
  REQUIRE(small != nullptr);
  CHECK(small->samples == 2);
  CHECK(small->avg_nodes == doctest::Approx(8.0));
  CHECK(*small->node_reduction_pct == doctest::Approx(20.0));
  CHECK(*small->edge_reduction_pct == doctest::Approx(25.0));
  CHECK(*small->affected_units == 1);
  CHECK(*stats.Find("base")->node_reduction_pct == doctest::Approx(0.0));

  RunStats plain = ComputeStats(m, dir, std::nullopt);
  CHECK_FALSE(plain.representations[0].node_reduction_pct.has_value());
  CHECK(ToJson(plain)["baseline"].is_null());
  CHECK(FormatStatsTable(stats).find("small") != std::string::npos);

  m.rows[1].files["small"] = "gone.json";
  CHECK(ComputeStats(m, dir, std::nullopt).Find("small")->missing_files == 1);
  CHECK_THROWS_AS(ComputeStats(m, dir, std::string("nope")),
                  std::invalid_argument);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace concord::pipeline
