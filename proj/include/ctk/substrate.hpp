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

#ifndef CTK_SUBSTRATE_HPP
#define CTK_SUBSTRATE_HPP

#include <memory>
#include <string>
#include <vector>

#include "ctk/linalg.hpp"

namespace ctk {

class Substrate;
using SubstratePtr = std::shared_ptr<const Substrate>;

/// A finite physical system: classical with a finite label set, quantum with
/// a finite Hilbert-space dimension, or an ordered composite of such parts.
/// Values are immutable after construction.
class Substrate {
 public:
  enum class Kind { Classical, Quantum };

  static SubstratePtr classical(std::string id, int state_count);
  static SubstratePtr classical(std::string id, std::vector<std::string> labels);
  static SubstratePtr quantum(std::string id, int dimension);
  /// Ordered composite; parts must share a kind. Repeats are allowed (two
  /// instances of the same medium side by side).
  static SubstratePtr compose(std::vector<SubstratePtr> parts);

  const std::string& id() const { return id_; }
  Kind kind() const { return kind_; }
  bool classical_kind() const { return kind_ == Kind::Classical; }
  /// State count (classical) or Hilbert dimension (quantum); products for
  /// composites.
  int size() const { return size_; }
  bool composite() const { return !parts_.empty(); }
  const std::vector<SubstratePtr>& parts() const { return parts_; }

  /// Primitive factors in positional order (a primitive lists itself).
  std::vector<SubstratePtr> leaves() const;

  /// Labels of a primitive classical substrate.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Full classical state space of this substrate (joined labels for
  /// composites). Only valid for classical kind.
  std::vector<std::string> state_space() const;

  std::string describe() const;

 private:
  Substrate() = default;

  std::string id_;
  Kind kind_ = Kind::Classical;
  int size_ = 0;
  std::vector<SubstratePtr> parts_;
  std::vector<std::string> labels_;
};

/// Structural equality: same shape, kinds, sizes, ids and labels throughout.
bool same_substrate(const SubstratePtr& a, const SubstratePtr& b);

/// True when the two substrates share a primitive id (used to reject
/// parallel composition over a common part).
bool substrates_share_leaf(const SubstratePtr& a, const SubstratePtr& b);

/// Joined classical label for a composite state, e.g. "0,1".
std::string join_labels(const std::vector<std::string>& parts);
std::vector<std::string> split_labels(const std::string& joined);

/// A single permitted configuration of a substrate: a classical label (joined
/// for composites) or a unit vector modulo global phase.
class State {
 public:
  static State classical_state(SubstratePtr substrate, std::string label);
  static State quantum_state(SubstratePtr substrate, cvec vector, double tau_norm = 1e-9);

  const SubstratePtr& substrate() const { return substrate_; }
  bool classical_kind() const { return substrate_->classical_kind(); }
  const std::string& label() const { return label_; }
  const cvec& vector() const { return vector_; }

 private:
  State() = default;
  SubstratePtr substrate_;
  std::string label_;
  cvec vector_;
};

/// Basis vector |index> on a quantum substrate.
cvec basis_vector(const SubstratePtr& substrate, int index);

}  // namespace ctk

#endif
