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

#ifndef CTK_MODEL_IO_HPP
#define CTK_MODEL_IO_HPP

#include <map>

#include "ctk/oracle.hpp"

namespace ctk::models {

/// A named bundle of substrates, states, attributes and variables, loaded
/// from a .ctm file.  Declaration order is preserved for listings.
struct Model {
  std::string name;
  std::vector<std::string> substrate_ids;
  std::map<std::string, SubstratePtr> substrates;
  std::vector<std::string> state_names;
  std::map<std::string, State> states;
  std::vector<std::string> attribute_names;
  std::map<std::string, Attribute> attributes;
  std::vector<std::string> variable_names;
  std::map<std::string, Variable> variables;
  oracles::OracleConfig oracle;

  const SubstratePtr& substrate(const std::string& id) const;
  const State& state(const std::string& n) const;
  const Attribute& attribute(const std::string& n) const;
  const Variable& variable(const std::string& n) const;
};

/// The preparable attributes a model declares on `sub`, or just the named
/// one when `chosen` is nonempty.  Throws when nothing qualifies.
std::vector<Attribute> preparable_blanks(const Model& model, const SubstratePtr& sub,
                                         const std::string& chosen = "");

/// Parses a model from JSON text.  `origin` names the source in messages.
Model parse_model(const std::string& text, const std::string& origin = "<memory>");

/// Reads and parses a .ctm file.
Model load_model(const std::string& path);

}  // namespace ctk::models

#endif  // CTK_MODEL_IO_HPP
