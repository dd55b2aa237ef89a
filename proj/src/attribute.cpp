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

#include "ctk/attribute.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk {

Attribute Attribute::state_set(SubstratePtr substrate, std::vector<std::string> states,
                               std::string label) {
  if (!substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "state sets live on classical substrates");
  }
  auto space = substrate->state_space();
  std::set<std::string> space_set(space.begin(), space.end());
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  for (const auto& s : states) {
    if (!space_set.count(s)) {
      throw Error(ErrorCode::LabelMismatch,
                  "state '" + s + "' not in the state space of " + substrate->id());
    }
  }
  Attribute a;
  a.substrate_ = std::move(substrate);
  a.body_ = Body::StateSet;
  a.states_ = std::move(states);
  a.label_ = std::move(label);
  return a;
}

Attribute Attribute::ray_set(SubstratePtr substrate, std::vector<cvec> rays,
                             std::string label, double tau) {
  if (substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "ray sets live on quantum substrates");
  }
  for (auto& r : rays) {
    if (r.size() != substrate->size()) {
      throw Error(ErrorCode::DimensionMismatch, "ray length does not match dimension");
    }
    double n = r.norm();
    if (std::abs(n - 1.0) > tau) {
      throw Error(ErrorCode::NormViolation, "rays must be unit vectors");
    }
    r /= n;
  }
  for (size_t i = 0; i < rays.size(); ++i) {
    for (size_t j = i + 1; j < rays.size(); ++j) {
      if (same_ray(rays[i], rays[j], tau)) {
        throw Error(ErrorCode::ValidationError, "ray set contains a repeated ray");
      }
    }
  }
  Attribute a;
  a.substrate_ = std::move(substrate);
  a.body_ = Body::RaySet;
  a.rays_ = std::move(rays);
  a.label_ = std::move(label);
  return a;
}

Attribute Attribute::single_ray(SubstratePtr substrate, cvec ray, std::string label,
                                double tau) {
  std::vector<cvec> rays;
  rays.push_back(std::move(ray));
  return ray_set(std::move(substrate), std::move(rays), std::move(label), tau);
}

Attribute Attribute::subspace(SubstratePtr substrate, cmat basis, std::string label,
                              double tau) {
  if (substrate->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "subspaces live on quantum substrates");
  }
  if (basis.cols() > 0 && basis.rows() != substrate->size()) {
    throw Error(ErrorCode::DimensionMismatch, "basis rows do not match dimension");
  }
  cmat gram = basis.adjoint() * basis;
  if (!gram.isApprox(cmat::Identity(basis.cols(), basis.cols()), 1e-7)) {
    basis = orthonormal_basis(basis, tau);
  }
  if (basis.cols() == 0) basis = cmat(substrate->size(), 0);
  Attribute a;
  a.substrate_ = std::move(substrate);
  a.body_ = Body::Subspace;
  a.basis_ = std::move(basis);
  a.label_ = std::move(label);
  return a;
}

Attribute Attribute::empty(SubstratePtr substrate, std::string label) {
  if (substrate->classical_kind()) {
    return state_set(std::move(substrate), {}, std::move(label));
  }
  int dim = substrate->size();
  return subspace(std::move(substrate), cmat(dim, 0), std::move(label));
}

Attribute Attribute::with_flags(bool preparable, bool generic) const {
  Attribute a = *this;
  a.preparable_ = preparable;
  a.generic_ = generic;
  return a;
}

Attribute Attribute::with_label(std::string label) const {
  Attribute a = *this;
  a.label_ = std::move(label);
  return a;
}

bool Attribute::is_empty() const {
  switch (body_) {
    case Body::StateSet: return states_.empty();
    case Body::RaySet: return rays_.empty();
    case Body::Subspace: return basis_.cols() == 0;
  }
  return true;
}

int Attribute::cardinality() const {
  switch (body_) {
    case Body::StateSet: return static_cast<int>(states_.size());
    case Body::RaySet: return static_cast<int>(rays_.size());
    case Body::Subspace: return static_cast<int>(basis_.cols());
  }
  return 0;
}

cmat Attribute::span_basis(double tau) const {
  if (classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "span_basis is a quantum notion");
  }
  if (body_ == Body::Subspace) return basis_;
  cmat m(substrate_->size(), rays_.size());
  for (size_t i = 0; i < rays_.size(); ++i) m.col(i) = rays_[i];
  return orthonormal_basis(m, tau);
}

bool Attribute::contains_state(const State& s, const Tolerances& tol) const {
  if (!same_substrate(substrate_, s.substrate())) return false;
  if (classical_kind()) {
    return std::binary_search(states_.begin(), states_.end(), s.label());
  }
  if (body_ == Body::RaySet) {
    for (const auto& r : rays_) {
      if (same_ray(r, s.vector(), tol.tau_ray)) return true;
    }
    return false;
  }
  return span_contains(basis_, s.vector(), tol.tau_rank);
}

std::string Attribute::describe() const {
  std::ostringstream os;
  if (!label_.empty()) os << label_ << " ";
  switch (body_) {
    case Body::StateSet: os << "{" << states_.size() << " states}"; break;
    case Body::RaySet: os << "{" << rays_.size() << " rays}"; break;
    case Body::Subspace: os << "{subspace dim " << basis_.cols() << "}"; break;
  }
  os << " on " << substrate_->id();
  return os.str();
}

namespace {

bool ray_in_attribute(const cvec& ray, const Attribute& b, const Tolerances& tol) {
  if (b.body() == Attribute::Body::RaySet) {
    for (const auto& r : b.rays()) {
      if (same_ray(ray, r, tol.tau_ray)) return true;
    }
    return false;
  }
  return span_contains(b.basis(), ray, tol.tau_rank);
}

}  // namespace

bool attributes_disjoint(const Attribute& a, const Attribute& b, const Tolerances& tol) {
  if (!same_substrate(a.substrate(), b.substrate())) {
    throw Error(ErrorCode::KindMismatch, "disjointness needs a common substrate");
  }
  if (a.is_empty() || b.is_empty()) return true;
  if (a.classical_kind()) {
    std::vector<std::string> common;
    std::set_intersection(a.states().begin(), a.states().end(), b.states().begin(),
                          b.states().end(), std::back_inserter(common));
    return common.empty();
  }
  const bool a_sub = a.body() == Attribute::Body::Subspace;
  const bool b_sub = b.body() == Attribute::Body::Subspace;
  if (a_sub && b_sub) {
    // Trivial intersection: joint rank equals the rank sum.
    cmat joint(a.basis().rows(), a.basis().cols() + b.basis().cols());
    joint << a.basis(), b.basis();
    cmat basis = orthonormal_basis(joint, tol.tau_rank);
    return basis.cols() == a.basis().cols() + b.basis().cols();
  }
  if (!a_sub && !b_sub) {
    for (const auto& ra : a.rays()) {
      for (const auto& rb : b.rays()) {
        if (same_ray(ra, rb, tol.tau_ray)) return false;
      }
    }
    return true;
  }
  const Attribute& rays_side = a_sub ? b : a;
  const Attribute& sub_side = a_sub ? a : b;
  for (const auto& r : rays_side.rays()) {
    if (span_contains(sub_side.basis(), r, tol.tau_rank)) return false;
  }
  return true;
}

bool attribute_subset(const Attribute& a, const Attribute& b, const Tolerances& tol) {
  if (!same_substrate(a.substrate(), b.substrate())) {
    throw Error(ErrorCode::KindMismatch, "subset needs a common substrate");
  }
  if (a.is_empty()) return true;
  if (a.classical_kind()) {
    return std::includes(b.states().begin(), b.states().end(), a.states().begin(),
                         a.states().end());
  }
  if (a.body() != Attribute::Body::Subspace) {
    for (const auto& r : a.rays()) {
      if (!ray_in_attribute(r, b, tol)) return false;
    }
    return true;
  }
  if (b.body() == Attribute::Body::Subspace) {
    for (Eigen::Index i = 0; i < a.basis().cols(); ++i) {
      if (!span_contains(b.basis(), a.basis().col(i), tol.tau_rank)) return false;
    }
    return true;
  }
  // A subspace holds infinitely many rays unless it is a line.
  if (a.basis().cols() != 1) return false;
  return ray_in_attribute(a.basis().col(0), b, tol);
}

bool attribute_equal(const Attribute& a, const Attribute& b, const Tolerances& tol) {
  if (!same_substrate(a.substrate(), b.substrate())) return false;
  if (a.classical_kind() != b.classical_kind()) return false;
  if (a.classical_kind()) return a.states() == b.states();
  return attribute_subset(a, b, tol) && attribute_subset(b, a, tol);
}

Attribute attribute_union(const std::vector<Attribute>& parts, const Tolerances& tol) {
  if (parts.empty()) {
    throw Error(ErrorCode::ValidationError, "union of zero attributes");
  }
  const SubstratePtr& sub = parts.front().substrate();
  for (const auto& p : parts) {
    if (!same_substrate(sub, p.substrate())) {
      throw Error(ErrorCode::KindMismatch, "union needs a common substrate");
    }
  }
  if (parts.front().classical_kind()) {
    std::vector<std::string> states;
    for (const auto& p : parts) {
      states.insert(states.end(), p.states().begin(), p.states().end());
    }
    return Attribute::state_set(sub, std::move(states));
  }
  std::vector<cvec> rays;
  auto add_ray = [&](const cvec& r) {
    for (const auto& existing : rays) {
      if (same_ray(existing, r, tol.tau_ray)) return;
    }
    rays.push_back(r);
  };
  for (const auto& p : parts) {
    if (p.body() == Attribute::Body::Subspace) {
      for (Eigen::Index i = 0; i < p.basis().cols(); ++i) add_ray(p.basis().col(i));
    } else {
      for (const auto& r : p.rays()) add_ray(r);
    }
  }
  return Attribute::ray_set(sub, std::move(rays), "", tol.tau_ray);
}

Attribute product_attribute(const std::vector<Attribute>& parts, const Tolerances& tol) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::ValidationError, "product of fewer than two attributes");
  }
  std::vector<SubstratePtr> subs;
  for (const auto& p : parts) subs.push_back(p.substrate());
  SubstratePtr composite = Substrate::compose(subs);

  if (parts.front().classical_kind()) {
    std::vector<std::string> acc = {""};
    bool first = true;
    for (const auto& p : parts) {
      std::vector<std::string> next;
      for (const auto& prefix : acc) {
        for (const auto& s : p.states()) {
          next.push_back(first ? s : prefix + "," + s);
        }
      }
      acc = std::move(next);
      first = false;
    }
    if (std::any_of(parts.begin(), parts.end(),
                    [](const Attribute& p) { return p.is_empty(); })) {
      acc.clear();
    }
    return Attribute::state_set(composite, std::move(acc));
  }

  bool any_empty = std::any_of(parts.begin(), parts.end(),
                               [](const Attribute& p) { return p.is_empty(); });
  if (any_empty) return Attribute::empty(composite);

  bool all_rays = true;
  int subspace_parts = 0;
  int multiray_parts = 0;
  for (const auto& p : parts) {
    if (p.body() == Attribute::Body::Subspace) {
      all_rays = false;
      if (p.basis().cols() > 1) ++subspace_parts;
    } else if (p.rays().size() > 1) {
      ++multiray_parts;
    }
  }

  if (all_rays) {
    std::vector<cvec> acc = {cvec::Ones(1)};
    for (const auto& p : parts) {
      std::vector<cvec> next;
      for (const auto& prefix : acc) {
        for (const auto& r : p.rays()) next.push_back(kron(prefix, r));
      }
      acc = std::move(next);
    }
    return Attribute::ray_set(composite, std::move(acc), "", tol.tau_ray);
  }

  if (multiray_parts == 0) {
    // Ray and line factors tensored with genuine subspaces stay a subspace.
    cmat acc = cmat::Ones(1, 1);
    for (const auto& p : parts) {
      cmat factor = p.body() == Attribute::Body::Subspace ? p.basis() : p.span_basis(tol.tau_rank);
      acc = kron(acc, factor);
    }
    return Attribute::subspace(composite, std::move(acc), "", tol.tau_rank);
  }

  // Mixed multi-ray x subspace product: fall back to the rays of the product
  // basis (exact as a span, approximate as a state set).
  std::vector<cvec> acc = {cvec::Ones(1)};
  for (const auto& p : parts) {
    std::vector<cvec> rays;
    if (p.body() == Attribute::Body::Subspace) {
      for (Eigen::Index i = 0; i < p.basis().cols(); ++i) rays.push_back(p.basis().col(i));
    } else {
      rays = p.rays();
    }
    std::vector<cvec> next;
    for (const auto& prefix : acc) {
      for (const auto& r : rays) next.push_back(kron(prefix, r));
    }
    acc = std::move(next);
  }
  return Attribute::ray_set(composite, std::move(acc), "", tol.tau_ray);
}

Variable::Variable(std::vector<Attribute> attributes, std::vector<std::string> labels,
                   std::string name, const Tolerances& tol)
    : attributes_(std::move(attributes)), labels_(std::move(labels)), name_(std::move(name)) {
  if (attributes_.empty()) {
    throw Error(ErrorCode::TooFewAttributes, "a variable needs at least one attribute");
  }
  const SubstratePtr& sub = attributes_.front().substrate();
  if (sub->size() < 2) {
    throw Error(ErrorCode::DimensionMismatch,
                "substrates hosting variables need size >= 2");
  }
  for (const auto& a : attributes_) {
    if (!same_substrate(sub, a.substrate())) {
      throw Error(ErrorCode::KindMismatch, "variable attributes must share a substrate");
    }
  }
  for (size_t i = 0; i < attributes_.size(); ++i) {
    for (size_t j = i + 1; j < attributes_.size(); ++j) {
      if (!attributes_disjoint(attributes_[i], attributes_[j], tol)) {
        throw Error(ErrorCode::BadPartition, "variable attributes must be pairwise disjoint");
      }
    }
  }
  if (!labels_.empty()) {
    if (labels_.size() != attributes_.size()) {
      throw Error(ErrorCode::LabelMismatch, "label list must match the attribute list");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
      throw Error(ErrorCode::LabelMismatch, "variable labels must be distinct");
    }
  }
}

Attribute Variable::united(const Tolerances& tol) const {
  return attribute_union(attributes_, tol);
}

std::optional<size_t> is_sharp(const State& state, const Variable& v, const Tolerances& tol) {
  for (size_t i = 0; i < v.attributes().size(); ++i) {
    if (v.attributes()[i].contains_state(state, tol)) return i;
  }
  return std::nullopt;
}

}  // namespace ctk
