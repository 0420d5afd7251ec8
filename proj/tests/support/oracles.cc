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

#include "support/oracles.h"

#include <functional>
#include <sstream>

namespace concord::testing {

using subject::AstNodeKind;
using subject::NodeId;
using subject::OperatorClass;
using subject::SubjectAst;

namespace {

// Children that are tokens of the construct rather than operands.
std::vector<NodeId> RealChildren(const SubjectAst& ast, NodeId id) {
  std::vector<NodeId> out;
  for (NodeId c : ast.nodes[static_cast<size_t>(id)].children) {
    if (!ast.nodes[static_cast<size_t>(c)].symbol) out.push_back(c);
  }
  return out;
}

void Collect(const SubjectAst& ast, NodeId id, std::vector<NodeId>& out) {
  out.push_back(id);
  for (NodeId c : RealChildren(ast, id)) Collect(ast, c, out);
}

}  // namespace

bool BruteForceSimpleAssignment(const SubjectAst& ast, NodeId node) {
  const subject::AstNode& root = ast.nodes[static_cast<size_t>(node)];
  if (root.kind != AstNodeKind::kAssignment) return false;
  if (root.op_name != "assign") return false;
  std::vector<NodeId> sides = RealChildren(ast, node);
  if (sides.size() != 2) return false;

  std::vector<NodeId> left;
  Collect(ast, sides[0], left);
  int identifiers = 0;
  for (NodeId id : left) {
    if (ast.nodes[static_cast<size_t>(id)].kind == AstNodeKind::kIdentifier) {
      ++identifiers;
    }
  }
  if (identifiers != 1 || left.size() != 1) return false;

  std::vector<NodeId> right;
  Collect(ast, sides[1], right);
  for (NodeId id : right) {
    const subject::AstNode& n = ast.nodes[static_cast<size_t>(id)];
    bool leaf = RealChildren(ast, id).empty();
    if (leaf) {
      if (n.kind != AstNodeKind::kLiteral || n.recovered) return false;
      continue;
    }
    if (n.kind != AstNodeKind::kOperator || !n.operator_class) return false;
    switch (*n.operator_class) {
      case OperatorClass::kArithmetic:
      case OperatorClass::kBitwise:
      case OperatorClass::kLogical:
      case OperatorClass::kRelational:
        break;
      case OperatorClass::kOther:
        return false;
    }
  }
  return true;
}

NodeId FirstAssignment(const SubjectAst& ast) {
  for (const subject::AstNode& n : ast.nodes) {
    if (n.kind == AstNodeKind::kAssignment) return n.id;
  }
  return -1;
}

OracleFacts EnumeratePathFacts(const Program& program) {
  OracleFacts facts;
  std::vector<int> visits(static_cast<size_t>(program.exit()) + 1, 0);
  auto merge = [](OracleState& into, const OracleState& from) {
    for (const auto& [v, ids] : from.last_reads) {
      into.last_reads[v].insert(ids.begin(), ids.end());
    }
    for (const auto& [v, ids] : from.last_writes) {
      into.last_writes[v].insert(ids.begin(), ids.end());
    }
  };
  std::function<void(int, const OracleState&)> walk =
      [&](int n, const OracleState& arriving) {
        merge(facts[n], arriving);
        if (visits[static_cast<size_t>(n)] == 2) return;
        ++visits[static_cast<size_t>(n)];
        OracleState leaving = arriving;
        if (n < static_cast<int>(program.nodes.size())) {
          const ProgramNode& node = program.nodes[static_cast<size_t>(n)];
          for (const std::string& v : node.reads) leaving.last_reads[v] = {n};
          for (const std::string& v : node.writes) leaving.last_writes[v] = {n};
        }
        auto it = program.successors.find(n);
        if (it != program.successors.end()) {
          for (int s : it->second) walk(s, leaving);
        }
        --visits[static_cast<size_t>(n)];
      };
  walk(program.entry(), OracleState{});
  return facts;
}

std::set<std::pair<int, int>> OracleDataDependences(const Program& program) {
  OracleFacts facts = EnumeratePathFacts(program);
  std::set<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(program.nodes.size()); ++u) {
    auto it = facts.find(u);
    if (it == facts.end()) continue;
    for (const std::string& v : program.nodes[static_cast<size_t>(u)].reads) {
      auto w = it->second.last_writes.find(v);
      if (w == it->second.last_writes.end()) continue;
      for (int d : w->second) out.insert({d, u});
    }
  }
  return out;
}

std::set<std::pair<int, int>> OracleControlDependences(const Program& program) {
  std::set<std::pair<int, int>> out;
  for (int k = 0; k < static_cast<int>(program.nodes.size()); ++k) {
    int g = program.nodes[static_cast<size_t>(k)].governor;
    if (g >= 0) out.insert({g, k});
  }
  return out;
}

std::map<NodeId, int> AlignCfg(const graph::Cfg& cfg, const Program& program) {
  std::map<NodeId, int> align;
  if (cfg.statement_nodes.size() != program.nodes.size()) return align;
  for (size_t i = 0; i < cfg.statement_nodes.size(); ++i) {
    align[cfg.statement_nodes[i]] = static_cast<int>(i);
  }
  align[cfg.entry] = program.entry();
  align[cfg.exit] = program.exit();
  return align;
}

OracleFacts TranslateFacts(const augment::FlowFacts& facts,
                           const graph::OccurrenceTable& occurrences,
                           const std::map<NodeId, int>& align) {
  std::map<NodeId, NodeId> statement_of;
  for (const auto& [name, list] : occurrences.by_variable) {
    for (const graph::Occurrence& o : list) statement_of[o.node] = o.statement;
  }
  auto index = [&](NodeId occurrence) {
    return align.at(statement_of.at(occurrence));
  };
  OracleFacts out;
  for (const auto& [node, state] : facts) {
    OracleState& s = out[align.at(node)];
    for (const auto& [v, ids] : state.last_reads) {
      for (NodeId id : ids) s.last_reads[v].insert(index(id));
    }
    for (const auto& [v, ids] : state.last_writes) {
      for (NodeId id : ids) s.last_writes[v].insert(index(id));
    }
  }
  return out;
}

std::string Describe(const OracleFacts& facts) {
  std::ostringstream out;
  auto dump = [&](const std::map<std::string, std::set<int>>& m) {
    for (const auto& [v, ids] : m) {
      out << v << "{";
      for (int id : ids) out << id << ",";
      out << "} ";
    }
  };
  for (const auto& [n, s] : facts) {
    out << n << ": R ";
    dump(s.last_reads);
    out << "W ";
    dump(s.last_writes);
    out << "\n";
  }
  return out.str();
}

}  // namespace concord::testing
