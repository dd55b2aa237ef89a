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

#ifndef CTK_TASK_HPP
#define CTK_TASK_HPP

#include <vector>

#include "ctk/attribute.hpp"

namespace ctk {

struct TaskPair {
  Attribute input;
  Attribute output;
};

/// A finite set of input/output attribute pairs over one substrate
/// composition. Inputs are pairwise disjoint except for exact repeats, which
/// express a free choice among the outputs offered for that input.
class Task {
 public:
  Task(std::vector<TaskPair> pairs, const Tolerances& tol = {});

  const std::vector<TaskPair>& pairs() const { return pairs_; }
  const SubstratePtr& substrate() const { return pairs_.front().input.substrate(); }

  std::vector<Attribute> inputs() const;
  std::vector<Attribute> outputs() const;

  std::string describe() const;

 private:
  std::vector<TaskPair> pairs_;
};

/// Swaps inputs and outputs. Outputs must be pairwise disjoint or equal, else
/// the transposed inputs would overlap.
Task transpose(const Task& t, const Tolerances& tol = {});

/// Runs `first`, then `second`. The legitimate outputs of `first` must equal
/// the legitimate inputs of `second` as attribute sets.
Task serial_compose(const Task& first, const Task& second, const Tolerances& tol = {});

/// Side-by-side composition on disjoint substrates.
Task parallel_compose(const Task& a, const Task& b, const Tolerances& tol = {});

/// A permutation of n positions.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation cyclic_shift(int n);
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }
  bool fixed_point_free() const;

 private:
  std::vector<int> images_;
};

/// The reversible-computation task of a permutation over a variable: each
/// attribute is carried to its image.
Task permutation_task(const Variable& v, const Permutation& pi, const Tolerances& tol = {});

/// Variable on the composite substrate whose attributes are all products of
/// the factors' attributes, labels joined pairwise.
Variable product_variable(const Variable& a, const Variable& b, const Tolerances& tol = {});

/// Merge groups of attributes into union attributes. `groups` partitions the
/// index set of v.
Variable coarsen(const Variable& v, const std::vector<std::vector<size_t>>& groups,
                 std::vector<std::string> labels = {}, const Tolerances& tol = {});

}  // namespace ctk

#endif
