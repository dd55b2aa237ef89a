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

#ifndef CTK_NETWORK_HPP
#define CTK_NETWORK_HPP

#include <string>
#include <vector>

#include "ctk/task.hpp"

namespace ctk {

/// Task pair of a network node, factored per substrate line.
struct FactoredPair {
  std::vector<Attribute> inputs;
  std::vector<Attribute> outputs;
};

/// A node acts on an ordered list of named substrate lines.
struct NetworkNode {
  std::string name;
  std::vector<std::string> lines;
  std::vector<SubstratePtr> line_substrates;
  std::vector<FactoredPair> pairs;

  /// Flat task over the node's own composite substrate.
  Task to_task(const Tolerances& tol = {}) const;
};

/// Directed wiring: the named line leaves node `from` and enters node `to`.
struct NetworkEdge {
  size_t from;
  size_t to;
  std::string line;
};

struct Network {
  std::vector<NetworkNode> nodes;
  std::vector<NetworkEdge> edges;
};

/// Checks acyclicity and per-edge interface containment (the legitimate
/// outputs of the upstream node lie inside the legitimate inputs of the
/// downstream node), then flattens the network into one task over every line.
Task validate_network(const Network& net, const Tolerances& tol = {});

}  // namespace ctk

#endif
