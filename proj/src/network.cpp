// Copyright 2026 The ctk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ctk/network.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "ctk/errors.hpp"

namespace ctk {

Task NetworkNode::to_task(const Tolerances& tol) const {
  std::vector<TaskPair> flat;
  for (const auto& p : pairs) {
    if (lines.size() == 1) {
      flat.push_back({p.inputs[0], p.outputs[0]});
    } else {
      flat.push_back({product_attribute(p.inputs, tol), product_attribute(p.outputs, tol)});
    }
  }
  return Task(std::move(flat), tol);
}

namespace {

void check_node(const NetworkNode& node, const Tolerances& tol) {
  if (node.lines.empty() || node.lines.size() != node.line_substrates.size()) {
    throw Error(ErrorCode::ValidationError, "node lines and substrates must align");
  }
  std::set<std::string> seen(node.lines.begin(), node.lines.end());
  if (seen.size() != node.lines.size()) {
    throw Error(ErrorCode::ValidationError, "node uses a line twice");
  }
  if (node.pairs.empty()) {
    throw Error(ErrorCode::ValidationError, "node without task pairs");
  }
  for (const auto& p : node.pairs) {
    if (p.inputs.size() != node.lines.size() || p.outputs.size() != node.lines.size()) {
      throw Error(ErrorCode::ValidationError, "factored pair width must match the lines");
    }
    for (size_t i = 0; i < node.lines.size(); ++i) {
      if (!same_substrate(p.inputs[i].substrate(), node.line_substrates[i]) ||
          !same_substrate(p.outputs[i].substrate(), node.line_substrates[i])) {
        throw Error(ErrorCode::KindMismatch, "factored attribute on the wrong line substrate");
      }
    }
  }
  (void)tol;
}

std::vector<size_t> topological_order(const Network& net) {
  const size_t n = net.nodes.size();
  std::vector<std::set<size_t>> succ(n);
  std::vector<int> indegree(n, 0);
  for (const auto& e : net.edges) {
    if (e.from >= n || e.to >= n) {
      throw Error(ErrorCode::ValidationError, "edge references a missing node");
    }
    if (e.from == e.to) {
      throw Error(ErrorCode::CycleDetected, "line loops back to its own node");
    }
    if (succ[e.from].insert(e.to).second) ++indegree[e.to];
  }
  std::vector<size_t> order;
  std::vector<size_t> ready;
  for (size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::sort(ready.begin(), ready.end());
  while (!ready.empty()) {
    size_t node = ready.front();
    ready.erase(ready.begin());
    order.push_back(node);
    for (size_t next : succ[node]) {
      if (--indegree[next] == 0) {
        ready.insert(std::lower_bound(ready.begin(), ready.end(), next), next);
      }
    }
  }
  if (order.size() != n) {
    throw Error(ErrorCode::CycleDetected, "network wiring contains a cycle");
  }
  return order;
}

size_t line_index(const NetworkNode& node, const std::string& line) {
  auto it = std::find(node.lines.begin(), node.lines.end(), line);
  if (it == node.lines.end()) {
    throw Error(ErrorCode::ValidationError,
                "edge line '" + line + "' missing from node " + node.name);
  }
  return static_cast<size_t>(it - node.lines.begin());
}

}  // namespace

Task validate_network(const Network& net, const Tolerances& tol) {
  if (net.nodes.empty()) {
    throw Error(ErrorCode::ValidationError, "empty network");
  }
  for (const auto& node : net.nodes) check_node(node, tol);

  // Line substrates must agree wherever a line appears, and a line may leave
  // or enter a given node at most once.
  std::map<std::string, SubstratePtr> line_substrate;
  for (const auto& node : net.nodes) {
    for (size_t i = 0; i < node.lines.size(); ++i) {
      auto it = line_substrate.find(node.lines[i]);
      if (it == line_substrate.end()) {
        line_substrate[node.lines[i]] = node.line_substrates[i];
      } else if (!same_substrate(it->second, node.line_substrates[i])) {
        throw Error(ErrorCode::KindMismatch,
                    "line '" + node.lines[i] + "' changes substrate between nodes");
      }
    }
  }
  std::set<std::pair<size_t, std::string>> outgoing, incoming;
  for (const auto& e : net.edges) {
    if (!outgoing.insert({e.from, e.line}).second) {
      throw Error(ErrorCode::ValidationError, "line fans out from one node");
    }
    if (!incoming.insert({e.to, e.line}).second) {
      throw Error(ErrorCode::ValidationError, "line fans into one node twice");
    }
  }

  auto order = topological_order(net);

  // Interface containment along every edge.
  for (const auto& e : net.edges) {
    const auto& from = net.nodes[e.from];
    const auto& to = net.nodes[e.to];
    size_t fi = line_index(from, e.line);
    size_t ti = line_index(to, e.line);
    for (const auto& fp : from.pairs) {
      bool contained = std::any_of(to.pairs.begin(), to.pairs.end(), [&](const FactoredPair& tp) {
        return attribute_subset(fp.outputs[fi], tp.inputs[ti], tol);
      });
      if (!contained) {
        throw Error(ErrorCode::InterfaceMismatch,
                    "outputs of node " + from.name + " on line '" + e.line +
                        "' escape the inputs of node " + to.name);
      }
    }
  }

  // Canonical line order: first appearance along the topological order.
  std::vector<std::string> line_order;
  for (size_t idx : order) {
    for (const auto& line : net.nodes[idx].lines) {
      if (std::find(line_order.begin(), line_order.end(), line) == line_order.end()) {
        line_order.push_back(line);
      }
    }
  }

  std::map<std::pair<size_t, std::string>, bool> has_incoming;
  for (const auto& e : net.edges) has_incoming[{e.to, e.line}] = true;

  // Enumerate joint executions: walk nodes in topological order, binding each
  // line to its current attribute and recording the attribute each line was
  // sourced with.
  struct Branch {
    std::map<std::string, Attribute> current;
    std::map<std::string, Attribute> source;
  };
  std::vector<Branch> branches(1);
  for (size_t idx : order) {
    const auto& node = net.nodes[idx];
    std::vector<Branch> next;
    for (const auto& branch : branches) {
      for (const auto& fp : node.pairs) {
        bool ok = true;
        for (size_t i = 0; i < node.lines.size() && ok; ++i) {
          const std::string& line = node.lines[i];
          auto bound = branch.current.find(line);
          if (bound != branch.current.end() && has_incoming.count({idx, line})) {
            ok = attribute_subset(bound->second, fp.inputs[i], tol);
          }
        }
        if (!ok) continue;
        Branch grown = branch;
        for (size_t i = 0; i < node.lines.size(); ++i) {
          const std::string& line = node.lines[i];
          if (!grown.source.count(line)) grown.source.insert({line, fp.inputs[i]});
          grown.current.insert_or_assign(line, fp.outputs[i]);
        }
        next.push_back(std::move(grown));
      }
    }
    branches = std::move(next);
    if (branches.empty()) {
      throw Error(ErrorCode::InterfaceMismatch, "no joint execution through the network");
    }
  }

  std::vector<TaskPair> flat;
  for (const auto& branch : branches) {
    std::vector<Attribute> ins, outs;
    for (const auto& line : line_order) {
      ins.push_back(branch.source.at(line));
      outs.push_back(branch.current.at(line));
    }
    if (line_order.size() == 1) {
      flat.push_back({ins[0], outs[0]});
    } else {
      flat.push_back({product_attribute(ins, tol), product_attribute(outs, tol)});
    }
  }
  return Task(std::move(flat), tol);
}

}  // namespace ctk
