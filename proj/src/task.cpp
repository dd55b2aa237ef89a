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

#include "ctk/task.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk {

namespace {

void append_unique(std::vector<Attribute>& list, const Attribute& a, const Tolerances& tol) {
  for (const auto& existing : list) {
    if (attribute_equal(existing, a, tol)) return;
  }
  list.push_back(a);
}

}  // namespace

Task::Task(std::vector<TaskPair> pairs, const Tolerances& tol) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw Error(ErrorCode::ValidationError, "a task needs at least one pair");
  }
  const SubstratePtr& sub = pairs_.front().input.substrate();
  for (const auto& p : pairs_) {
    if (!same_substrate(sub, p.input.substrate()) ||
        !same_substrate(sub, p.output.substrate())) {
      throw Error(ErrorCode::KindMismatch,
                  "task inputs and outputs must live on one substrate composition");
    }
  }
  for (size_t i = 0; i < pairs_.size(); ++i) {
    for (size_t j = i + 1; j < pairs_.size(); ++j) {
      if (attribute_equal(pairs_[i].input, pairs_[j].input, tol)) continue;
      if (!attributes_disjoint(pairs_[i].input, pairs_[j].input, tol)) {
        throw Error(ErrorCode::BadPartition,
                    "task inputs must be pairwise disjoint or repeated exactly");
      }
    }
  }
}

std::vector<Attribute> Task::inputs() const {
  std::vector<Attribute> out;
  Tolerances tol;
  for (const auto& p : pairs_) append_unique(out, p.input, tol);
  return out;
}

std::vector<Attribute> Task::outputs() const {
  std::vector<Attribute> out;
  Tolerances tol;
  for (const auto& p : pairs_) append_unique(out, p.output, tol);
  return out;
}

std::string Task::describe() const {
  std::ostringstream os;
  os << pairs_.size() << " pairs on " << substrate()->id();
  return os.str();
}

Task transpose(const Task& t, const Tolerances& tol) {
  const auto& pairs = t.pairs();
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      if (attribute_equal(pairs[i].output, pairs[j].output, tol)) continue;
      if (!attributes_disjoint(pairs[i].output, pairs[j].output, tol)) {
        throw Error(ErrorCode::OverlappingOutputs,
                    "transpose needs pairwise disjoint (or repeated) outputs");
      }
    }
  }
  std::vector<TaskPair> flipped;
  flipped.reserve(pairs.size());
  for (const auto& p : pairs) flipped.push_back({p.output, p.input});
  return Task(std::move(flipped), tol);
}

Task serial_compose(const Task& first, const Task& second, const Tolerances& tol) {
  auto outs = first.outputs();
  auto ins = second.inputs();
  auto covered = [&](const std::vector<Attribute>& list, const Attribute& a) {
    return std::any_of(list.begin(), list.end(),
                       [&](const Attribute& b) { return attribute_equal(a, b, tol); });
  };
  for (const auto& o : outs) {
    if (!covered(ins, o)) {
      throw Error(ErrorCode::InterfaceMismatch,
                  "serial composition needs Out(first) == In(second) as attribute sets");
    }
  }
  for (const auto& i : ins) {
    if (!covered(outs, i)) {
      throw Error(ErrorCode::InterfaceMismatch,
                  "serial composition needs Out(first) == In(second) as attribute sets");
    }
  }
  std::vector<TaskPair> pairs;
  for (const auto& p : first.pairs()) {
    for (const auto& q : second.pairs()) {
      if (attribute_equal(p.output, q.input, tol)) {
        pairs.push_back({p.input, q.output});
      }
    }
  }
  return Task(std::move(pairs), tol);
}

Task parallel_compose(const Task& a, const Task& b, const Tolerances& tol) {
  if (substrates_share_leaf(a.substrate(), b.substrate())) {
    throw Error(ErrorCode::SharedSubstrate,
                "parallel composition needs disjoint substrates");
  }
  std::vector<TaskPair> pairs;
  for (const auto& p : a.pairs()) {
    for (const auto& q : b.pairs()) {
      pairs.push_back({product_attribute({p.input, q.input}, tol),
                       product_attribute({p.output, q.output}, tol)});
    }
  }
  return Task(std::move(pairs), tol);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<int> sorted = images_;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != static_cast<int>(i)) {
      throw Error(ErrorCode::ValidationError, "not a permutation");
    }
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

Permutation Permutation::cyclic_shift(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
  return Permutation(std::move(v));
}

Permutation Permutation::transposition(int n, int i, int j) {
  auto p = identity(n);
  std::vector<int> v = p.images();
  std::swap(v[i], v[j]);
  return Permutation(std::move(v));
}

bool Permutation::fixed_point_free() const {
  for (size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == static_cast<int>(i)) return false;
  }
  return true;
}

Task permutation_task(const Variable& v, const Permutation& pi, const Tolerances& tol) {
  if (pi.size() != static_cast<int>(v.size())) {
    throw Error(ErrorCode::DimensionMismatch, "permutation size does not match the variable");
  }
  std::vector<TaskPair> pairs;
  for (size_t i = 0; i < v.size(); ++i) {
    pairs.push_back({v.attributes()[i], v.attributes()[pi(static_cast<int>(i))]});
  }
  return Task(std::move(pairs), tol);
}

Variable product_variable(const Variable& a, const Variable& b, const Tolerances& tol) {
  if (substrates_share_leaf(a.substrate(), b.substrate())) {
    throw Error(ErrorCode::SharedSubstrate, "product variable needs disjoint substrates");
  }
  std::vector<Attribute> attrs;
  std::vector<std::string> labels;
  bool labeled = !a.labels().empty() && !b.labels().empty();
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      attrs.push_back(product_attribute({a.attributes()[i], b.attributes()[j]}, tol));
      if (labeled) labels.push_back(a.labels()[i] + "," + b.labels()[j]);
    }
  }
  return Variable(std::move(attrs), std::move(labels), "", tol);
}

Variable coarsen(const Variable& v, const std::vector<std::vector<size_t>>& groups,
                 std::vector<std::string> labels, const Tolerances& tol) {
  std::vector<bool> used(v.size(), false);
  std::vector<Attribute> attrs;
  for (const auto& group : groups) {
    if (group.empty()) throw Error(ErrorCode::BadPartition, "empty group in coarsening");
    std::vector<Attribute> members;
    for (size_t idx : group) {
      if (idx >= v.size() || used[idx]) {
        throw Error(ErrorCode::BadPartition, "groups must partition the attribute indices");
      }
      used[idx] = true;
      members.push_back(v.attributes()[idx]);
    }
    attrs.push_back(attribute_union(members, tol));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(ErrorCode::BadPartition, "groups must cover every attribute");
  }
  return Variable(std::move(attrs), std::move(labels), "", tol);
}

}  // namespace ctk
