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

#include "ctk/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ctk/errors.hpp"

namespace ctk::models {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& origin, const std::string& what) {
  throw Error(ErrorCode::ValidationError, origin + ": " + what);
}

cdouble read_complex(const json& j, const std::string& origin) {
  if (j.is_number()) return cdouble(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cdouble(j[0].get<double>(), j[1].get<double>());
  }
  bad(origin, "a complex entry must be a number or an [re, im] pair");
}

cvec read_vector(const json& j, Eigen::Index dim, const std::string& origin) {
  if (!j.is_array()) bad(origin, "a vector must be an array of entries");
  if (static_cast<Eigen::Index>(j.size()) != dim) {
    std::ostringstream msg;
    msg << "a vector has " << j.size() << " entries, the substrate needs " << dim;
    bad(origin, msg.str());
  }
  cvec v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = read_complex(j[static_cast<size_t>(i)], origin);
  }
  return v;
}

const json& require(const json& j, const char* key, const std::string& origin) {
  auto it = j.find(key);
  if (it == j.end()) bad(origin, std::string("missing field \"") + key + "\"");
  return *it;
}

void read_substrates(const json& root, Model& model, const std::string& origin) {
  if (!root.contains("substrates")) return;
  const json& list = root["substrates"];
  if (!list.is_array()) bad(origin, "\"substrates\" must be an array");
  // Composites may refer to earlier entries only, so one pass suffices.
  for (const auto& entry : list) {
    std::string id = require(entry, "id", origin).get<std::string>();
    if (model.substrates.count(id)) bad(origin, "duplicate substrate id \"" + id + "\"");
    std::string kind = require(entry, "kind", origin).get<std::string>();
    SubstratePtr sub;
    if (kind == "classical") {
      if (entry.contains("states")) {
        std::vector<std::string> labels = entry["states"].get<std::vector<std::string>>();
        sub = Substrate::classical(id, labels);
      } else {
        int count = require(entry, "count", origin).get<int>();
        sub = Substrate::classical(id, count);
      }
    } else if (kind == "quantum") {
      int dim = require(entry, "dimension", origin).get<int>();
      sub = Substrate::quantum(id, dim);
    } else if (kind == "composite") {
      std::vector<std::string> parts =
          require(entry, "parts", origin).get<std::vector<std::string>>();
      if (parts.size() < 2) bad(origin, "a composite needs at least two parts");
      std::vector<SubstratePtr> resolved;
      for (const auto& part : parts) resolved.push_back(model.substrate(part));
      sub = Substrate::compose(std::move(resolved));
    } else {
      bad(origin, "unknown substrate kind \"" + kind + "\"");
    }
    model.substrate_ids.push_back(id);
    model.substrates.emplace(id, std::move(sub));
  }
}

void read_states(const json& root, Model& model, const std::string& origin) {
  if (!root.contains("states")) return;
  for (const auto& entry : root["states"]) {
    std::string name = require(entry, "name", origin).get<std::string>();
    if (model.states.count(name)) bad(origin, "duplicate state \"" + name + "\"");
    const SubstratePtr& sub =
        model.substrate(require(entry, "substrate", origin).get<std::string>());
    if (entry.contains("label")) {
      model.states.emplace(
          name, State::classical_state(sub, entry["label"].get<std::string>()));
    } else {
      cvec v = read_vector(require(entry, "vector", origin), sub->size(), origin);
      model.states.emplace(name,
                           State::quantum_state(sub, v, model.oracle.tol.tau_norm));
    }
    model.state_names.push_back(name);
  }
}

void read_attributes(const json& root, Model& model, const std::string& origin) {
  if (!root.contains("attributes")) return;
  const Tolerances& tol = model.oracle.tol;
  for (const auto& entry : root["attributes"]) {
    std::string name = require(entry, "name", origin).get<std::string>();
    if (model.attributes.count(name)) bad(origin, "duplicate attribute \"" + name + "\"");
    const SubstratePtr& sub =
        model.substrate(require(entry, "substrate", origin).get<std::string>());
    Attribute a = Attribute::empty(sub);
    if (entry.contains("states")) {
      a = Attribute::state_set(sub, entry["states"].get<std::vector<std::string>>(), name);
    } else if (entry.contains("rays")) {
      std::vector<cvec> rays;
      for (const auto& r : entry["rays"]) {
        rays.push_back(read_vector(r, sub->size(), origin));
      }
      a = Attribute::ray_set(sub, rays, name, tol.tau_ray);
    } else if (entry.contains("subspace")) {
      const json& cols = entry["subspace"];
      if (!cols.is_array() || cols.empty()) {
        bad(origin, "\"subspace\" must be a nonempty array of columns");
      }
      cmat basis(sub->size(), static_cast<Eigen::Index>(cols.size()));
      for (size_t c = 0; c < cols.size(); ++c) {
        basis.col(static_cast<Eigen::Index>(c)) =
            read_vector(cols[c], sub->size(), origin);
      }
      a = Attribute::subspace(sub, basis, name, tol.tau_rank);
    } else {
      bad(origin, "attribute \"" + name + "\" needs \"states\", \"rays\" or \"subspace\"");
    }
    bool preparable = entry.value("preparable", false);
    bool generic = entry.value("generic", false);
    model.attributes.emplace(name, a.with_flags(preparable, generic));
    model.attribute_names.push_back(name);
  }
}

void read_variables(const json& root, Model& model, const std::string& origin) {
  if (!root.contains("variables")) return;
  for (const auto& entry : root["variables"]) {
    std::string name = require(entry, "name", origin).get<std::string>();
    if (model.variables.count(name)) bad(origin, "duplicate variable \"" + name + "\"");
    std::vector<Attribute> members;
    for (const auto& m :
         require(entry, "members", origin).get<std::vector<std::string>>()) {
      members.push_back(model.attribute(m));
    }
    std::vector<std::string> labels;
    if (entry.contains("labels")) {
      labels = entry["labels"].get<std::vector<std::string>>();
    }
    model.variables.emplace(name,
                            Variable(members, labels, name, model.oracle.tol));
    model.variable_names.push_back(name);
  }
}

void read_oracle(const json& root, Model& model, const std::string& origin) {
  if (!root.contains("oracle")) return;
  const json& o = root["oracle"];
  if (!o.is_object()) bad(origin, "\"oracle\" must be an object");
  oracles::OracleConfig& cfg = model.oracle;
  cfg.seed = o.value("seed", cfg.seed);
  cfg.restarts = o.value("restarts", cfg.restarts);
  cfg.iterations = o.value("iterations", cfg.iterations);
  cfg.n_probe = o.value("n_probe", cfg.n_probe);
  Tolerances& tol = cfg.tol;
  tol.tau_norm = o.value("tau_norm", tol.tau_norm);
  tol.tau_ray = o.value("tau_ray", tol.tau_ray);
  tol.tau_rank = o.value("tau_rank", tol.tau_rank);
  tol.tau_gram = o.value("tau_gram", tol.tau_gram);
  tol.tau_psd = o.value("tau_psd", tol.tau_psd);
  tol.tau_sharp = o.value("tau_sharp", tol.tau_sharp);
}

}  // namespace

const SubstratePtr& Model::substrate(const std::string& id) const {
  auto it = substrates.find(id);
  if (it == substrates.end()) {
    throw Error(ErrorCode::UnresolvedName, "no substrate named \"" + id + "\"");
  }
  return it->second;
}

const State& Model::state(const std::string& n) const {
  auto it = states.find(n);
  if (it == states.end()) {
    throw Error(ErrorCode::UnresolvedName, "no state named \"" + n + "\"");
  }
  return it->second;
}

const Attribute& Model::attribute(const std::string& n) const {
  auto it = attributes.find(n);
  if (it == attributes.end()) {
    throw Error(ErrorCode::UnresolvedName, "no attribute named \"" + n + "\"");
  }
  return it->second;
}

const Variable& Model::variable(const std::string& n) const {
  auto it = variables.find(n);
  if (it == variables.end()) {
    throw Error(ErrorCode::UnresolvedName, "no variable named \"" + n + "\"");
  }
  return it->second;
}

std::vector<Attribute> preparable_blanks(const Model& model, const SubstratePtr& sub,
                                         const std::string& chosen) {
  if (!chosen.empty()) {
    const Attribute& a = model.attribute(chosen);
    if (!a.preparable()) {
      throw Error(ErrorCode::NotPreparable,
                  "attribute \"" + chosen + "\" is not flagged preparable");
    }
    if (!same_substrate(a.substrate(), sub)) {
      throw Error(ErrorCode::KindMismatch,
                  "attribute \"" + chosen + "\" lives on " + a.substrate()->id() +
                      ", not " + sub->id());
    }
    return {a};
  }
  std::vector<Attribute> blanks;
  for (const auto& name : model.attribute_names) {
    const Attribute& a = model.attributes.at(name);
    if (a.preparable() && same_substrate(a.substrate(), sub)) blanks.push_back(a);
  }
  if (blanks.empty()) {
    throw Error(ErrorCode::NotPreparable,
                "the model declares no preparable attribute on " + sub->id());
  }
  return blanks;
}

Model parse_model(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, origin + ": " + e.what());
  }
  if (!root.is_object()) bad(origin, "the top level must be an object");

  Model model;
  model.name = root.value("name", std::string{});
  try {
    read_oracle(root, model, origin);  // tolerances first, the rest uses them
    read_substrates(root, model, origin);
    read_states(root, model, origin);
    read_attributes(root, model, origin);
    read_variables(root, model, origin);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ValidationError, origin + ": " + e.what());
  }
  return model;
}

Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str(), path);
}

}  // namespace ctk::models
