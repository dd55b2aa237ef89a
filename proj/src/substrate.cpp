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

#include "ctk/substrate.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk {

namespace {

void check_primitive_label(const std::string& label) {
  if (label.empty() || label.find(',') != std::string::npos) {
    throw Error(ErrorCode::LabelMismatch,
                "classical state labels must be nonempty and must not contain ','");
  }
}

}  // namespace

SubstratePtr Substrate::classical(std::string id, int state_count) {
  if (state_count < 1) {
    throw Error(ErrorCode::DimensionMismatch, "classical substrate needs at least one state");
  }
  std::vector<std::string> labels;
  labels.reserve(state_count);
  for (int i = 0; i < state_count; ++i) labels.push_back(std::to_string(i));
  return classical(std::move(id), std::move(labels));
}

SubstratePtr Substrate::classical(std::string id, std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorCode::DimensionMismatch, "classical substrate needs at least one state");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    check_primitive_label(label);
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::LabelMismatch, "duplicate state label '" + label + "'");
    }
  }
  auto s = std::shared_ptr<Substrate>(new Substrate());
  s->id_ = std::move(id);
  s->kind_ = Kind::Classical;
  s->size_ = static_cast<int>(labels.size());
  s->labels_ = std::move(labels);
  return s;
}

SubstratePtr Substrate::quantum(std::string id, int dimension) {
  if (dimension < 2) {
    throw Error(ErrorCode::DimensionMismatch, "quantum substrate needs dimension >= 2");
  }
  auto s = std::shared_ptr<Substrate>(new Substrate());
  s->id_ = std::move(id);
  s->kind_ = Kind::Quantum;
  s->size_ = dimension;
  return s;
}

SubstratePtr Substrate::compose(std::vector<SubstratePtr> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::DimensionMismatch, "composite needs at least two parts");
  }
  Kind kind = parts.front()->kind();
  long long size = 1;
  std::ostringstream id;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i]) throw Error(ErrorCode::ValidationError, "null substrate part");
    if (parts[i]->kind() != kind) {
      throw Error(ErrorCode::KindMismatch, "composite parts must share a kind");
    }
    size *= parts[i]->size();
    if (i) id << "+";
    id << parts[i]->id();
  }
  if (size > (1 << 20)) {
    throw Error(ErrorCode::DimensionMismatch, "composite state space too large");
  }
  auto s = std::shared_ptr<Substrate>(new Substrate());
  s->id_ = "(" + id.str() + ")";
  s->kind_ = kind;
  s->size_ = static_cast<int>(size);
  s->parts_ = std::move(parts);
  return s;
}

std::vector<SubstratePtr> Substrate::leaves() const {
  std::vector<SubstratePtr> out;
  if (parts_.empty()) {
    // Reconstruct a shared_ptr to this primitive via a copy; callers only
    // compare structurally so a fresh node with identical content suffices.
    auto s = std::shared_ptr<Substrate>(new Substrate(*this));
    out.push_back(s);
    return out;
  }
  for (const auto& p : parts_) {
    auto sub = p->leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::string> Substrate::state_space() const {
  if (kind_ != Kind::Classical) {
    throw Error(ErrorCode::KindMismatch, "state_space is a classical notion");
  }
  if (parts_.empty()) return labels_;
  std::vector<std::string> acc = {""};
  bool first = true;
  for (const auto& p : parts_) {
    std::vector<std::string> next;
    for (const auto& prefix : acc) {
      for (const auto& l : p->state_space()) {
        next.push_back(first ? l : prefix + "," + l);
      }
    }
    acc = std::move(next);
    first = false;
  }
  return acc;
}

std::string Substrate::describe() const {
  std::ostringstream os;
  os << id_ << "[" << (classical_kind() ? "classical" : "quantum") << " " << size_ << "]";
  return os.str();
}

bool same_substrate(const SubstratePtr& a, const SubstratePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind() != b->kind() || a->size() != b->size() || a->id() != b->id()) return false;
  if (a->parts().size() != b->parts().size()) return false;
  for (size_t i = 0; i < a->parts().size(); ++i) {
    if (!same_substrate(a->parts()[i], b->parts()[i])) return false;
  }
  return a->labels() == b->labels();
}

bool substrates_share_leaf(const SubstratePtr& a, const SubstratePtr& b) {
  std::set<std::string> ids;
  for (const auto& leaf : a->leaves()) ids.insert(leaf->id());
  for (const auto& leaf : b->leaves()) {
    if (ids.count(leaf->id())) return true;
  }
  return false;
}

std::string join_labels(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  return out;
}

std::vector<std::string> split_labels(const std::string& joined) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : joined) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

State State::classical_state(SubstratePtr substrate, std::string label) {
  if (!substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "label states live on classical substrates");
  }
  auto space = substrate->state_space();
  if (std::find(space.begin(), space.end(), label) == space.end()) {
    throw Error(ErrorCode::LabelMismatch,
                "label '" + label + "' not in the state space of " + substrate->id());
  }
  State s;
  s.substrate_ = std::move(substrate);
  s.label_ = std::move(label);
  return s;
}

State State::quantum_state(SubstratePtr substrate, cvec vector, double tau_norm) {
  if (substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "vector states live on quantum substrates");
  }
  if (vector.size() != substrate->size()) {
    throw Error(ErrorCode::DimensionMismatch, "state vector length does not match dimension");
  }
  if (std::abs(vector.norm() - 1.0) > tau_norm) {
    throw Error(ErrorCode::NormViolation, "state vector is not normalized");
  }
  State s;
  s.substrate_ = std::move(substrate);
  s.vector_ = std::move(vector);
  return s;
}

cvec basis_vector(const SubstratePtr& substrate, int index) {
  if (substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "basis vectors live on quantum substrates");
  }
  if (index < 0 || index >= substrate->size()) {
    throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  }
  cvec v = cvec::Zero(substrate->size());
  v(index) = 1.0;
  return v;
}

}  // namespace ctk
