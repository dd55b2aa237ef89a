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

#include "ctk/report.hpp"

#include <cmath>
#include <sstream>

namespace ctk::reports {

double round_significant(double x, int digits) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double magnitude = std::pow(10.0, digits - 1 - std::floor(std::log10(std::abs(x))));
  return std::round(x * magnitude) / magnitude;
}

namespace {

ordered_json rounded(double x) { return round_significant(x); }

ordered_json certificate_json(const oracles::Certificate& c) {
  ordered_json j;
  j["kind"] = oracles::certificate_kind_name(c.kind);
  j["message"] = c.message;
  if (!c.rows.empty()) j["rows"] = c.rows;
  if (!c.values.empty()) {
    ordered_json vals = ordered_json::array();
    for (double v : c.values) vals.push_back(rounded(v));
    j["values"] = vals;
  }
  return j;
}

}  // namespace

ordered_json verdict_json(const oracles::Verdict& v) {
  ordered_json j;
  j["verdict"] = oracles::verdict_kind_name(v.kind);
  if (!v.note.empty()) j["note"] = v.note;
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
  if (v.classical_witness) {
    ordered_json t;
    for (const auto& [from, to] : v.classical_witness->transition) t[from] = to;
    j["transition"] = t;
  }
  if (v.quantum_witness) {
    j["witness"] = {{"rows", v.quantum_witness->input_rays.size()},
                    {"side_effects", v.quantum_witness->side_effects}};
  }
  if (!v.probe_residuals.empty()) {
    ordered_json res = ordered_json::array();
    for (double r : v.probe_residuals) res.push_back(rounded(r));
    j["probe_residuals"] = res;
  }
  return j;
}

ordered_json theorem_json(const superinfo::TheoremCheck& check) {
  ordered_json j;
  j["section"] = check.id;
  j["holds"] = check.holds;
  if (!check.values.empty()) {
    ordered_json vals;
    for (const auto& [key, value] : check.values) vals[key] = rounded(value);
    j["values"] = vals;
  }
  if (!check.facts.empty()) {
    ordered_json facts;
    for (const auto& [key, value] : check.facts) facts[key] = value;
    j["facts"] = facts;
  }
  return j;
}

ordered_json principle_json(const principles::PrincipleResult& result) {
  ordered_json j;
  j["principle"] = result.id;
  j["holds"] = result.holds;
  if (!result.facts.empty()) {
    ordered_json facts;
    for (const auto& [key, value] : result.facts) facts[key] = value;
    j["facts"] = facts;
  }
  return j;
}

ordered_json falsify_json(const principles::FalsifyReport& report) {
  ordered_json j;
  j["max_states"] = report.max_states;
  j["variables_checked"] = report.variables_checked;
  j["union_pairs_checked"] = report.union_pairs_checked;
  j["counterexample_found"] = report.counterexample_found;
  if (report.counterexample_found) j["counterexample"] = report.counterexample;
  return j;
}

ordered_json capacity_json(const info::InfoCapacity& cap) {
  ordered_json j;
  j["capacity"] = cap.size;
  if (cap.witness) {
    ordered_json members = ordered_json::array();
    for (const auto& a : cap.witness->attributes()) members.push_back(a.describe());
    j["witness"] = members;
  }
  j["computation"] = verdict_json(cap.computation);
  j["cloning"] = verdict_json(cap.cloning);
  return j;
}

namespace {

void render_into(const ordered_json& j, std::ostringstream& out, int depth) {
  const std::string pad(static_cast<size_t>(depth) * 2, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_into(value, out, depth + 1);
    } else if (value.is_array()) {
      out << pad << key << ": " << value.dump() << "\n";
    } else if (value.is_string()) {
      out << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << value.dump() << "\n";
    }
  }
}

}  // namespace

std::string render_text(const ordered_json& j) {
  std::ostringstream out;
  render_into(j, out, 0);
  return out.str();
}

}  // namespace ctk::reports
