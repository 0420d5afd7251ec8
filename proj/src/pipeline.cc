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

#include "concord/pipeline.h"

#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "concord/augment.h"
#include "concord/serialize.h"
#include "concord/subject_parser.h"

namespace concord::pipeline {

namespace fs = std::filesystem;
using subject::AstNodeKind;
using subject::NodeId;
using subject::SubjectAst;

namespace {

spdlog::logger& Log() {
  static std::shared_ptr<spdlog::logger> logger = [] {
    auto l = spdlog::stderr_logger_mt("concord");
    l->set_pattern("concord: %l: %v");
    l->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("CONCORD_LOG")) {
      l->set_level(spdlog::level::from_str(env));
    }
    return l;
  }();
  return *logger;
}

// Diagnostics already carry their severity.
void Report(const dsl::Diagnostic& d) {
  auto level = d.severity == dsl::Severity::kError ? spdlog::level::err
                                                   : spdlog::level::warn;
  if (Log().should_log(level)) {
    std::fprintf(stderr, "concord: %s\n", dsl::FormatDiagnostic(d).c_str());
  }
}

// Collects warnings from several threads and logs them.
class WarningSink {
 public:
  void Add(std::string message) {
    Log().warn("{}", message);
    std::lock_guard<std::mutex> lock(mu_);
    messages_.push_back(std::move(message));
  }
  std::vector<std::string> Take() {
    std::lock_guard<std::mutex> lock(mu_);
    return std::move(messages_);
  }

 private:
  std::mutex mu_;
  std::vector<std::string> messages_;
};

std::string SafeFileName(const std::string& name) {
  std::string out;
  for (char c : name) {
    bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
              c == '$' || c == '-' || c == '.';
    out += ok ? c : '_';
  }
  return out.empty() ? "unit" : out;
}

struct UnitGroup {
  std::string name;
  int index = 0;
  std::vector<NodeId> methods;
  std::string code;
};

// Methods grouped into units; names fall back to the file stem for
// file-level code and for methods outside any class.
std::vector<UnitGroup> GroupUnits(const SubjectAst& ast,
                                  const std::string& relpath,
                                  Granularity granularity) {
  std::string stem = fs::path(relpath).stem().string();
  std::vector<UnitGroup> groups;
  std::map<NodeId, size_t> by_type;
  for (NodeId m : ast.methods) {
    if (granularity == Granularity::kMethod) {
      std::string name = ast.declared_name(m);
      groups.push_back({name.empty() ? stem : name, 0, {m}, ast.nodes[m].code});
      continue;
    }
    NodeId type = ast.enclosing(m, AstNodeKind::kTypeDecl);
    auto [it, fresh] = by_type.try_emplace(type, groups.size());
    if (fresh) {
      std::string name = type >= 0 ? ast.declared_name(type) : "";
      groups.push_back({name.empty() ? stem : name, 0, {},
                        type >= 0 ? ast.nodes[type].code : ""});
    }
    UnitGroup& group = groups[it->second];
    group.methods.push_back(m);
    if (type < 0) {
      if (!group.code.empty()) group.code += "\n";
      group.code += ast.nodes[m].code;
    }
  }
  std::map<std::string, int> seen;
  for (UnitGroup& g : groups) g.index = seen[g.name]++;
  return groups;
}

fs::path Resolve(const fs::path& base, const std::string& path) {
  fs::path p(path);
  return (p.is_absolute() ? p : base / p).lexically_normal();
}

std::string RelativeTo(const fs::path& file, const fs::path& dir) {
  fs::path a = fs::absolute(file).lexically_normal();
  fs::path b = fs::absolute(dir).lexically_normal();
  return a.lexically_relative(b).generic_string();
}

struct SourceFile {
  std::string project;
  fs::path root;
  std::string relpath;  // generic form
  std::vector<size_t> representations;
};

struct FileOutcome {
  bool failed = false;
  std::vector<BaselineUnit> baseline;
  std::map<size_t, RepresentationOutput> outputs;
};

using UnitKey = std::tuple<std::string, std::string, std::string, int>;

std::vector<std::string> ListSources(const fs::path& root,
                                     const std::vector<std::string>& exts) {
  std::vector<std::string> files;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, ec), end;
  for (; !ec && it != end; it.increment(ec)) {
    if (!it->is_regular_file(ec)) continue;
    std::string ext = it->path().extension().string();
    if (std::find(exts.begin(), exts.end(), ext) == exts.end()) continue;
    files.push_back(it->path().lexically_relative(root).generic_string());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

void InitLogging() { Log(); }

std::vector<RepresentationPlan> MakePlans(const dsl::ConcordModel& model,
                                          std::vector<std::string>* warnings) {
  std::vector<RepresentationPlan> plans;
  for (const dsl::RepresentationSpec& rep : model.representations) {
    RepresentationPlan plan;
    plan.name = rep.name;
    plan.base = rep.base;
    for (const std::string& task_name : rep.tasks) {
      const dsl::Task* task = model.FindTask(task_name);
      if (task == nullptr) continue;
      prune::PruneRule rule;
      dsl::Task edges = *task;
      edges.operations.clear();
      for (const dsl::Operation& op : task->operations) {
        if (op.op_type == dsl::OpType::kRemove && !op.targets_edge()) {
          rule.targets.insert(std::get<NodeKind>(op.target));
        } else if (op.op_type == dsl::OpType::kAdd && op.targets_edge()) {
          EdgeKind kind = std::get<EdgeKind>(op.target);
          if (augment::RequiresAstBase(kind) &&
              !rep.base.count(BaseGraphKind::kAst)) {
            if (warnings) {
              warnings->push_back("representation '" + rep.name +
                                  "': skipping " + std::string(ToString(kind)) +
                                  " (requires AST base)");
            }
            continue;
          }
          edges.operations.push_back(op);
        }
      }
      if (!rule.targets.empty()) {
        rule.conditions = task->conditions;
        plan.prune_rules.push_back(std::move(rule));
      }
      plan.tasks.push_back(std::move(edges));
    }
    plans.push_back(std::move(plan));
  }
  return plans;
}

std::vector<BaselineUnit> BaselineUnits(const std::string& text,
                                        const std::string& relpath,
                                        Granularity granularity) {
  SubjectAst ast = subject::ParseSubject(text, relpath);
  std::vector<BaselineUnit> units;
  for (UnitGroup& g : GroupUnits(ast, relpath, granularity)) {
    units.push_back({std::move(g.name), g.index, std::move(g.code)});
  }
  return units;
}

RepresentationOutput BuildRepresentation(const std::string& text,
                                         const std::string& relpath,
                                         const RepresentationPlan& plan,
                                         Granularity granularity) {
  RepresentationOutput out;
  std::string source = text;
  if (!plan.prune_rules.empty()) {
    out.pruned = prune::PruneSource(text, relpath, plan.prune_rules);
    source = out.pruned->text;
  }
  SubjectAst ast = subject::ParseSubject(source, relpath);
  for (const subject::ParseWarning& w : ast.warnings) {
    Log().debug("{}:{}: {}", relpath, w.line, w.message);
  }
  for (const UnitGroup& group : GroupUnits(ast, relpath, granularity)) {
    std::vector<graph::CodeGraph> graphs;
    for (NodeId m : group.methods) {
      graph::CodeGraph g = graph::BuildBaseGraph(ast, m, plan.base);
      augment::UnitContext ctx = augment::MakeContext(ast, m);
      for (const std::string& d : ctx.cfg.diagnostics) {
        Log().debug("{}: {}", relpath, d);
      }
      for (const dsl::Task& task : plan.tasks) {
        g = augment::ApplyTask(std::move(g), task, ctx);
      }
      g.unit = group.name;
      graphs.push_back(std::move(g));
    }
    graph::CodeGraph unit = granularity == Granularity::kMethod
                                ? std::move(graphs.front())
                                : graph::MergeClass(graphs, group.name);
    out.units.push_back({group.name, group.index, std::move(unit)});
  }
  return out;
}

RunResult Run(const dsl::ConcordModel& model, const fs::path& base_dir,
              const RunOptions& options) {
  RunResult result;
  result.diagnostics = model.diagnostics;
  if (model.HasErrors()) {
    for (const dsl::Diagnostic& d : model.diagnostics) {
      Report(d);
    }
    result.exit_code = kExitInvalidConfig;
    return result;
  }
  if (model.representations.empty()) {
    Log().error("configuration declares no representations");
    result.exit_code = kExitInvalidConfig;
    return result;
  }
  WarningSink sink;
  std::vector<std::string> plan_warnings;
  std::vector<RepresentationPlan> plans = MakePlans(model, &plan_warnings);
  for (std::string& w : plan_warnings) sink.Add(std::move(w));

  std::vector<fs::path> output_dirs;
  for (const dsl::RepresentationSpec& rep : model.representations) {
    output_dirs.push_back(Resolve(base_dir, rep.output_dir));
  }
  result.manifest_path = options.manifest
                             ? fs::path(*options.manifest)
                             : output_dirs.front() / "manifest.csv";
  fs::path manifest_dir = result.manifest_path.parent_path();
  if (manifest_dir.empty()) manifest_dir = ".";

  // Repositories, in order of first appearance.
  std::vector<std::pair<fs::path, std::string>> repos;
  std::map<fs::path, std::vector<size_t>> repo_reps;
  std::set<std::string> project_names;
  std::set<fs::path> seen_lists;
  for (size_t r = 0; r < model.representations.size(); ++r) {
    fs::path list = Resolve(base_dir, model.representations[r].repo_list_path);
    bool first_read = seen_lists.insert(list).second;
    std::vector<fs::path> entries;
    try {
      entries = ReadRepoList(list);
    } catch (const std::exception& e) {
      Log().error("{}", e.what());
      result.exit_code = kExitUnreadableRepoList;
      return result;
    }
    if (entries.empty() && first_read) {
      sink.Add("repository list " + list.string() + " is empty");
    }
    for (const fs::path& entry : entries) {
      std::error_code ec;
      if (!fs::is_directory(entry, ec)) {
        if (first_read) {
          sink.Add("repository " + entry.string() + " is not a directory");
        }
        continue;
      }
      fs::path key = fs::weakly_canonical(entry, ec);
      if (ec) key = fs::absolute(entry).lexically_normal();
      auto& reps = repo_reps[key];
      if (reps.empty()) {
        std::string name = key.filename().string();
        std::string unique = name;
        for (int n = 2; project_names.count(unique); ++n) {
          unique = name + "_" + std::to_string(n);
        }
        project_names.insert(unique);
        repos.push_back({key, unique});
      }
      if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
        reps.push_back(r);
      }
    }
  }

  std::vector<SourceFile> files;
  for (const auto& [root, project] : repos) {
    for (std::string& rel : ListSources(root, options.extensions)) {
      files.push_back({project, root, std::move(rel), repo_reps[root]});
    }
  }
  std::sort(files.begin(), files.end(),
            [](const SourceFile& a, const SourceFile& b) {
              return std::tie(a.project, a.relpath) <
                     std::tie(b.project, b.relpath);
            });

  std::vector<FileOutcome> outcomes(files.size());
  auto process = [&](size_t i) {
    const SourceFile& file = files[i];
    FileOutcome& outcome = outcomes[i];
    std::string where = file.project + "/" + file.relpath;
    try {
      std::string text = ReadFile(file.root / file.relpath);
      if (!IsValidUtf8(text)) throw std::runtime_error("not valid UTF-8");
      outcome.baseline = BaselineUnits(text, file.relpath, options.granularity);
      for (size_t r : file.representations) {
        outcome.outputs[r] = BuildRepresentation(
            text, file.relpath, plans[r], options.granularity);
      }
    } catch (const std::exception& e) {
      outcome = FileOutcome{};
      outcome.failed = true;
      sink.Add("skipping " + where + ": " + e.what());
    }
  };
  size_t jobs = static_cast<size_t>(std::max(1, options.jobs));
  if (jobs == 1 || files.size() < 2) {
    for (size_t i = 0; i < files.size(); ++i) process(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (size_t w = 0; w < std::min(jobs, files.size()); ++w) {
      workers.emplace_back([&] {
        for (size_t i = next++; i < files.size(); i = next++) process(i);
      });
    }
    for (std::thread& t : workers) t.join();
  }

  // Regenerate the output subtrees from scratch so stale graphs of earlier
  // runs never outlive the manifest.
  for (size_t r = 0; r < plans.size(); ++r) {
    std::error_code ec;
    fs::remove_all(output_dirs[r] / plans[r].name, ec);
    fs::remove_all(output_dirs[r] / (plans[r].name + ".pruned"), ec);
  }
  {
    std::error_code ec;
    fs::remove_all(manifest_dir / "baseline", ec);
  }

  struct Pending {
    std::string baseline_code;
    bool has_baseline = false;
    std::map<size_t, const graph::CodeGraph*> graphs;
  };
  std::map<UnitKey, Pending> units;
  for (size_t i = 0; i < files.size(); ++i) {
    const SourceFile& file = files[i];
    const FileOutcome& outcome = outcomes[i];
    if (outcome.failed) continue;
    for (const BaselineUnit& b : outcome.baseline) {
      Pending& p = units[{file.project, file.relpath, b.name, b.index}];
      p.baseline_code = b.code;
      p.has_baseline = true;
    }
    for (const auto& [r, output] : outcome.outputs) {
      for (const UnitGraph& u : output.units) {
        units[{file.project, file.relpath, u.name, u.index}].graphs[r] =
            &u.graph;
      }
      if (output.pruned) {
        fs::path shadow = output_dirs[r] / (plans[r].name + ".pruned") /
                          file.project / file.relpath;
        WriteFile(shadow, output.pruned->text);
        fs::path report = shadow;
        report += ".prune.json";
        WriteFile(report, prune::ToJson(output.pruned->report).dump(2) + "\n");
      }
    }
  }

  std::map<std::pair<std::string, std::string>, Label> labels;
  if (options.labels) {
    try {
      labels = ReadLabels(*options.labels);
    } catch (const std::exception& e) {
      sink.Add(std::string("ignoring labels: ") + e.what());
    }
  }

  Manifest& manifest = result.manifest;
  for (const RepresentationPlan& plan : plans) {
    manifest.representations.push_back(plan.name);
  }
  long next_id = 1;
  for (const auto& [key, pending] : units) {
    const auto& [project, relpath, name, index] = key;
    ManifestRow row;
    row.concord_id = next_id++;
    row.project = project;
    row.unit = name;
    std::string file_name =
        SafeFileName(name) + "_" + std::to_string(row.concord_id);
    if (pending.has_baseline) {
      fs::path path = manifest_dir / "baseline" / project / (file_name + ".code");
      WriteFile(path, pending.baseline_code);
      row.baseline_file = RelativeTo(path, manifest_dir);
    }
    for (size_t r = 0; r < plans.size(); ++r) {
      auto it = pending.graphs.find(r);
      if (it == pending.graphs.end()) {
        row.files[plans[r].name] = "";
        continue;
      }
      fs::path path = output_dirs[r] / plans[r].name / project /
                      (file_name + ".json");
      WriteGraph(*it->second, path);
      row.files[plans[r].name] = RelativeTo(path, manifest_dir);
    }
    if (auto l = labels.find({project, name}); l != labels.end()) {
      row.label = l->second.label;
      if (!l->second.split.empty()) row.split = l->second.split;
    }
    manifest.rows.push_back(std::move(row));
  }
  WriteManifest(manifest, result.manifest_path);
  Log().info("wrote {} rows to {}", manifest.rows.size(),
             result.manifest_path.string());

  std::optional<std::string> baseline = options.baseline;
  if (baseline && std::find(manifest.representations.begin(),
                            manifest.representations.end(),
                            *baseline) == manifest.representations.end()) {
    sink.Add("unknown baseline representation '" + *baseline + "'");
    baseline.reset();
  }
  result.stats = ComputeStats(manifest, manifest_dir, baseline);
  if (options.stats_out) {
    WriteFile(*options.stats_out, ToJson(result.stats).dump(2) + "\n");
  }
  result.warnings = sink.Take();
  if (options.strict && !result.warnings.empty()) {
    result.exit_code = kExitWarnings;
  }
  return result;
}

RunResult RunConfigFile(const fs::path& config, const RunOptions& options) {
  RunResult result;
  std::string text;
  try {
    text = ReadFile(config);
  } catch (const std::exception& e) {
    Log().error("{}", e.what());
    result.exit_code = kExitInvalidConfig;
    return result;
  }
  dsl::ConcordModel model;
  try {
    model = dsl::LoadConfig(text, config.string());
  } catch (const dsl::SyntaxError& e) {
    for (const dsl::Diagnostic& d : e.errors()) {
      Report(d);
    }
    result.diagnostics = e.errors();
    result.exit_code = kExitInvalidConfig;
    return result;
  }
  for (const dsl::Diagnostic& d : model.diagnostics) {
    if (d.severity == dsl::Severity::kWarning) Report(d);
  }
  fs::path base = config.parent_path();
  if (base.empty()) base = ".";
  return Run(model, base, options);
}

}  // namespace concord::pipeline
