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

#ifndef CTK_ATTRIBUTE_HPP
#define CTK_ATTRIBUTE_HPP

#include <optional>
#include <string>
#include <vector>

#include "ctk/substrate.hpp"

namespace ctk {

struct Tolerances {
  double tau_norm = 1e-9;   // state normalization
  double tau_ray = 1e-9;    // ray equality
  double tau_rank = 1e-9;   // span / rank decisions
  double tau_gram = 1e-9;   // Gram feasibility
  double tau_psd = 1e-9;    // positive semidefiniteness
  double tau_sharp = 1e-9;  // sharpness of simulated outputs
};

/// A set of states of one substrate: a finite label set (classical), a finite
/// list of rays, or every ray of a subspace. The empty attribute is allowed.
class Attribute {
 public:
  enum class Body { StateSet, RaySet, Subspace };

  static Attribute state_set(SubstratePtr substrate, std::vector<std::string> states,
                             std::string label = "");
  static Attribute ray_set(SubstratePtr substrate, std::vector<cvec> rays,
                           std::string label = "", double tau = 1e-9);
  static Attribute single_ray(SubstratePtr substrate, cvec ray, std::string label = "",
                              double tau = 1e-9);
  static Attribute subspace(SubstratePtr substrate, cmat basis, std::string label = "",
                            double tau = 1e-9);
  static Attribute empty(SubstratePtr substrate, std::string label = "");

  const SubstratePtr& substrate() const { return substrate_; }
  Body body() const { return body_; }
  bool classical_kind() const { return substrate_->classical_kind(); }
  const std::vector<std::string>& states() const { return states_; }
  const std::vector<cvec>& rays() const { return rays_; }
  const cmat& basis() const { return basis_; }
  const std::string& label() const { return label_; }

  bool preparable() const { return preparable_; }
  bool generic() const { return generic_; }
  Attribute with_flags(bool preparable, bool generic) const;
  Attribute with_label(std::string label) const;

  bool is_empty() const;
  /// Number of listed states / rays; basis dimension for subspaces.
  int cardinality() const;
  /// Orthonormal basis of the spanned subspace (quantum only).
  cmat span_basis(double tau = 1e-9) const;

  bool contains_state(const State& s, const Tolerances& tol = {}) const;

  std::string describe() const;

 private:
  Attribute() = default;

  SubstratePtr substrate_;
  Body body_ = Body::StateSet;
  std::vector<std::string> states_;  // sorted, unique
  std::vector<cvec> rays_;           // unit, pairwise distinct rays
  cmat basis_;                       // orthonormal columns
  std::string label_;
  bool preparable_ = false;
  bool generic_ = false;
};

bool attributes_disjoint(const Attribute& a, const Attribute& b, const Tolerances& tol = {});
bool attribute_subset(const Attribute& a, const Attribute& b, const Tolerances& tol = {});
/// Equality as state sets (a 1-ray set equals its 1-dimensional span).
bool attribute_equal(const Attribute& a, const Attribute& b, const Tolerances& tol = {});

/// Exact union for classical attributes and ray sets. Subspace parts
/// contribute their basis rays; downstream span-level uses (bar, containment
/// of spans) are unaffected by that representation.
Attribute attribute_union(const std::vector<Attribute>& parts, const Tolerances& tol = {});

/// Attribute of a composite substrate built from per-part attributes. Exact
/// for label sets, ray-set products and single-ray x subspace products;
/// multi-ray x subspace products fall back to the rays of the product basis.
Attribute product_attribute(const std::vector<Attribute>& parts, const Tolerances& tol = {});

/// A set of pairwise disjoint attributes of one substrate, optionally carrying
/// output labels aligned with the attribute list.
class Variable {
 public:
  Variable(std::vector<Attribute> attributes, std::vector<std::string> labels = {},
           std::string name = "", const Tolerances& tol = {});

  const std::vector<Attribute>& attributes() const { return attributes_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  const SubstratePtr& substrate() const { return attributes_.front().substrate(); }
  size_t size() const { return attributes_.size(); }

  /// Union of all member attributes.
  Attribute united(const Tolerances& tol = {}) const;

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Index of the unique attribute containing the state, if any.
std::optional<size_t> is_sharp(const State& state, const Variable& v,
                               const Tolerances& tol = {});

}  // namespace ctk

#endif
