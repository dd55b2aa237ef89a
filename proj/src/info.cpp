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

#include "ctk/info.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk::info {

using oracles::OracleConfig;
using oracles::Verdict;
using oracles::VerdictKind;

Attribute full_attribute(const SubstratePtr& substrate, const Tolerances& tol) {
  if (substrate->classical_kind()) {
    return Attribute::state_set(substrate, substrate->state_space());
  }
  cmat identity = cmat::Identity(substrate->size(), substrate->size());
  return Attribute::subspace(substrate, identity, "", tol.tau_rank);
}

std::vector<Attribute> pointer_targets(const SubstratePtr& substrate, size_t count,
                                       const Tolerances& tol) {
  if (count > static_cast<size_t>(substrate->size())) {
    throw Error(ErrorCode::DimensionMismatch, "substrate has too few canonical targets");
  }
  std::vector<Attribute> targets;
  if (substrate->classical_kind()) {
    auto space = substrate->state_space();
    for (size_t i = 0; i < count; ++i) {
      targets.push_back(Attribute::state_set(substrate, {space[i]}));
    }
  } else {
    for (size_t i = 0; i < count; ++i) {
      targets.push_back(Attribute::single_ray(substrate,
                                              basis_vector(substrate, static_cast<int>(i)),
                                              "", tol.tau_ray));
    }
  }
  return targets;
}

std::optional<Task> distinguish_task(const Variable& x, const Tolerances& tol) {
  const SubstratePtr& sub = x.substrate();
  size_t occupied = 0;
  for (const auto& a : x.attributes()) {
    if (!a.is_empty()) ++occupied;
  }
  if (occupied > static_cast<size_t>(sub->size())) return std::nullopt;
  auto targets = pointer_targets(sub, occupied, tol);
  std::vector<TaskPair> pairs;
  size_t next = 0;
  for (const auto& a : x.attributes()) {
    if (a.is_empty()) {
      pairs.push_back({Attribute::empty(sub), Attribute::empty(sub)});
    } else {
      pairs.push_back({a, targets[next++]});
    }
  }
  return Task(std::move(pairs), tol);
}

Verdict is_distinguishable(const Variable& x, const OracleConfig& cfg) {
  auto task = distinguish_task(x, cfg.tol);
  if (!task) {
    // More occupied members than canonical targets. Two members must then
    // overlap in angle, and that pair alone is already impossible to separate.
    double worst = 0.0;
    int wi = 0, wj = 1;
    for (size_t i = 0; i < x.size(); ++i) {
      for (size_t j = i + 1; j < x.size(); ++j) {
        const auto& a = x.attributes()[i];
        const auto& b = x.attributes()[j];
        if (a.is_empty() || b.is_empty()) continue;
        double c = max_principal_cosine(a.span_basis(cfg.tol.tau_rank),
                                        b.span_basis(cfg.tol.tau_rank));
        if (c > worst) {
          worst = c;
          wi = static_cast<int>(i);
          wj = static_cast<int>(j);
        }
      }
    }
    Verdict v;
    v.kind = VerdictKind::Impossible;
    std::ostringstream msg;
    msg << "members " << wi << " and " << wj << " overlap at angle cosine " << worst
        << " yet would need orthogonal records";
    v.certificate = oracles::Certificate{oracles::CertificateKind::ForcedOrthogonality,
                                         msg.str(),
                                         {wi, wj},
                                         {worst}};
    return v;
  }
  return oracles::possible_with_side_effects(*task, cfg);
}

Verdict ensemble_distinguishable(const std::vector<Attribute>& attrs,
                                 const OracleConfig& cfg) {
  auto family = oracles::ensemble_distinguish_family(attrs, cfg.tol);
  return oracles::limit_verdict(family, cfg);
}

Verdict perp(const Attribute& a, const Attribute& b, const OracleConfig& cfg) {
  if (!same_substrate(a.substrate(), b.substrate())) {
    throw Error(ErrorCode::KindMismatch, "perp compares attributes of one substrate");
  }
  if (!attributes_disjoint(a, b, cfg.tol)) {
    Verdict v;
    v.kind = VerdictKind::Impossible;
    v.note = "the attributes share a state";
    return v;
  }
  if (a.is_empty() || b.is_empty() || a.substrate()->size() < 2) {
    Verdict v;
    v.kind = VerdictKind::Possible;
    v.note = "separation is vacuous";
    return v;
  }
  return is_distinguishable(Variable({a, b}, {}, "", cfg.tol), cfg);
}

Attribute bar(const Attribute& a, const Tolerances& tol) {
  const SubstratePtr& sub = a.substrate();
  if (a.classical_kind()) {
    std::vector<std::string> rest;
    for (const auto& s : sub->state_space()) {
      if (!std::binary_search(a.states().begin(), a.states().end(), s)) rest.push_back(s);
    }
    if (rest.empty()) return Attribute::empty(sub);
    return Attribute::state_set(sub, std::move(rest));
  }
  if (a.is_empty()) return full_attribute(sub, tol);
  cmat comp = orthocomplement(a.span_basis(tol.tau_rank), sub->size(), tol.tau_rank);
  if (comp.cols() == 0) return Attribute::empty(sub);
  return Attribute::subspace(sub, comp, "", tol.tau_rank);
}

Attribute bar_bar(const Attribute& a, const Tolerances& tol) {
  const SubstratePtr& sub = a.substrate();
  if (a.classical_kind()) {
    if (a.is_empty()) return Attribute::empty(sub);
    return Attribute::state_set(sub, a.states());
  }
  if (a.is_empty()) return Attribute::empty(sub);
  return Attribute::subspace(sub, a.span_basis(tol.tau_rank), "", tol.tau_rank);
}

bool bar_closed(const Attribute& a, const Tolerances& tol) {
  return attribute_equal(a, bar_bar(a, tol), tol);
}

Variable boolean_variable(const Attribute& a, const Tolerances& tol) {
  std::string name = a.label().empty() ? "bool" : "bool(" + a.label() + ")";
  return Variable({a, bar(a, tol)}, {"true", "false"}, std::move(name), tol);
}

bool is_maximal(const Variable& v, const Tolerances& tol) {
  return bar(v.united(tol), tol).is_empty();
}

Verdict is_observable(const Variable& v, const OracleConfig& cfg) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (!bar_closed(v.attributes()[i], cfg.tol)) {
      Verdict verdict;
      verdict.kind = VerdictKind::Impossible;
      std::ostringstream msg;
      msg << "member " << i << " is not closed under double complementation";
      verdict.note = msg.str();
      return verdict;
    }
  }
  return is_distinguishable(v, cfg);
}

Task cloning_task(const std::vector<Attribute>& attrs, const Attribute& blank,
                  const Tolerances& tol) {
  if (attrs.empty()) {
    throw Error(ErrorCode::TooFewAttributes, "nothing to clone");
  }
  if (!blank.preparable()) {
    throw Error(ErrorCode::NotPreparable, "the blank of a cloning task must be preparable");
  }
  const SubstratePtr& sub = attrs.front().substrate();
  for (const auto& a : attrs) {
    if (!same_substrate(sub, a.substrate())) {
      throw Error(ErrorCode::KindMismatch, "cloned attributes must share a substrate");
    }
  }
  if (!same_substrate(sub, blank.substrate())) {
    throw Error(ErrorCode::KindMismatch, "the blank must live on a second copy of the substrate");
  }
  std::vector<TaskPair> pairs;
  for (const auto& a : attrs) {
    pairs.push_back({product_attribute({a, blank}, tol), product_attribute({a, a}, tol)});
  }
  return Task(std::move(pairs), tol);
}

Verdict is_clonable(const std::vector<Attribute>& attrs,
                    const std::vector<Attribute>& preparable_blanks,
                    const OracleConfig& cfg) {
  bool offered = false;
  std::optional<Verdict> impossible;
  bool unknown = false;
  for (const auto& blank : preparable_blanks) {
    if (!blank.preparable()) continue;
    offered = true;
    Task task = cloning_task(attrs, blank, cfg.tol);
    Verdict v = oracles::possible_with_side_effects(task, cfg);
    if (v.kind == VerdictKind::Possible) {
      std::ostringstream note;
      note << "cloned against blank \"" << blank.describe() << "\"";
      v.note = note.str();
      return v;
    }
    if (v.kind == VerdictKind::Impossible) {
      if (!impossible) impossible = v;
    } else {
      unknown = true;
    }
  }
  if (!offered) {
    throw Error(ErrorCode::NotPreparable, "no preparable blank was offered");
  }
  if (!unknown && impossible) return *impossible;
  Verdict v;
  v.kind = VerdictKind::Unknown;
  v.note = "no offered blank admits a cloning witness";
  return v;
}

Verdict is_computation_variable(const Variable& v, const OracleConfig& cfg) {
  if (v.size() < 2) {
    throw Error(ErrorCode::TooFewAttributes,
                "computation needs at least two attributes to permute");
  }
  const int n = static_cast<int>(v.size());
  std::vector<Permutation> perms;
  bool exhaustive = n <= 6;
  if (exhaustive) {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    do {
      perms.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
  } else {
    for (int i = 1; i < n; ++i) perms.push_back(Permutation::transposition(n, 0, i));
    perms.push_back(Permutation::cyclic_shift(n));
  }

  bool unknown = false;
  for (const auto& pi : perms) {
    Task task = permutation_task(v, pi, cfg.tol);
    Verdict verdict = oracles::possible_with_side_effects(task, cfg);
    if (verdict.kind == VerdictKind::Impossible) {
      std::ostringstream note;
      note << "the permutation (";
      for (int i = 0; i < n; ++i) note << (i ? " " : "") << pi(i);
      note << ") is impossible";
      verdict.note = note.str();
      return verdict;
    }
    if (verdict.kind != VerdictKind::Possible) unknown = true;
  }
  Verdict verdict;
  if (unknown) {
    verdict.kind = VerdictKind::Unknown;
    verdict.note = "some permutations stayed undecided";
    return verdict;
  }
  verdict.kind = VerdictKind::Possible;
  std::ostringstream note;
  note << perms.size() << " permutations verified";
  if (!exhaustive) {
    note << " (transpositions and the full cycle; the rest follow by serial composition)";
  }
  verdict.note = note.str();
  return verdict;
}

Verdict is_information_variable(const Variable& v,
                                const std::vector<Attribute>& preparable_blanks,
                                const OracleConfig& cfg) {
  if (v.size() < 2) {
    Verdict verdict;
    verdict.kind = VerdictKind::Impossible;
    verdict.note = "fewer than two members";
    return verdict;
  }
  Verdict comp = is_computation_variable(v, cfg);
  if (comp.kind == VerdictKind::Impossible) {
    comp.note = "not a computation variable: " + comp.note;
    return comp;
  }
  Verdict clone = is_clonable(v.attributes(), preparable_blanks, cfg);
  if (clone.kind == VerdictKind::Impossible) {
    clone.note = "not clonable: " + clone.note;
    return clone;
  }
  if (comp.kind == VerdictKind::Possible && clone.kind == VerdictKind::Possible) {
    Verdict verdict;
    verdict.kind = VerdictKind::Possible;
    verdict.note = "permutations and cloning both verified";
    return verdict;
  }
  Verdict verdict;
  verdict.kind = VerdictKind::Unknown;
  verdict.note = "a sub-check stayed undecided";
  return verdict;
}

InfoCapacity info_capacity(const SubstratePtr& substrate, const OracleConfig& cfg) {
  InfoCapacity result;
  const int n = substrate->size();
  if (n < 2) {
    result.size = 1;
    result.computation.note = "a one-state substrate holds a single preparation";
    return result;
  }
  auto targets = pointer_targets(substrate, static_cast<size_t>(n), cfg.tol);
  std::vector<Attribute> members;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    members.push_back(targets[i].with_flags(true, false));
    labels.push_back(std::to_string(i));
  }
  Variable witness(members, labels, "canonical", cfg.tol);
  result.computation = is_computation_variable(witness, cfg);
  result.cloning = is_clonable(members, {members.front()}, cfg);
  if (result.computation.kind == VerdictKind::Possible &&
      result.cloning.kind == VerdictKind::Possible) {
    result.size = n;
    result.witness = std::move(witness);
  }
  return result;
}

MeasurementSpec canonical_measurer(const Variable& x, const Tolerances& tol) {
  const SubstratePtr& sub = x.substrate();
  const size_t n = x.size();
  const int dim = static_cast<int>(std::max<size_t>(2, n));
  SubstratePtr pointer;
  if (sub->classical_kind()) {
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back(std::to_string(i));
    pointer = Substrate::classical(sub->id() + "_ptr", labels);
  } else {
    pointer = Substrate::quantum(sub->id() + "_ptr", dim);
  }
  auto marks = pointer_targets(pointer, n, tol);
  std::vector<Attribute> outputs_on_s;
  std::vector<Attribute> pointer_marks;
  for (size_t i = 0; i < n; ++i) {
    outputs_on_s.push_back(x.attributes()[i]);
    std::string mark_label = x.labels().empty() ? std::to_string(i) : x.labels()[i];
    pointer_marks.push_back(marks[i].with_label(std::move(mark_label)));
  }
  Attribute ready = pointer_targets(pointer, 1, tol).front().with_flags(true, false);
  return MeasurementSpec{x, pointer, std::move(ready), std::move(outputs_on_s),
                         std::move(pointer_marks)};
}

Task measurement_task(const MeasurementSpec& spec, const Tolerances& tol) {
  const size_t n = spec.observed.size();
  if (spec.outputs_on_s.size() != n || spec.pointer_marks.size() != n) {
    throw Error(ErrorCode::ValidationError,
                "measurement outputs must align with the observed variable");
  }
  std::vector<TaskPair> pairs;
  for (size_t i = 0; i < n; ++i) {
    pairs.push_back({product_attribute({spec.observed.attributes()[i], spec.pointer_ready}, tol),
                     product_attribute({spec.outputs_on_s[i], spec.pointer_marks[i]}, tol)});
  }
  return Task(std::move(pairs), tol);
}

Verdict is_measurer_of(const MeasurementSpec& machine, const Variable& x,
                       const OracleConfig& cfg) {
  if (!same_substrate(machine.observed.substrate(), x.substrate())) {
    throw Error(ErrorCode::KindMismatch, "the machine reads a different substrate");
  }
  const Tolerances& tol = cfg.tol;

  // Structural pass: every member must be covered by defining inputs that all
  // carry one common mark, injectively across members.
  bool structural = true;
  std::vector<int> mark_of(x.size(), -1);
  for (size_t i = 0; i < x.size() && structural; ++i) {
    const Attribute& xi = x.attributes()[i];
    if (xi.is_empty()) continue;
    std::vector<size_t> rows;
    for (size_t j = 0; j < machine.observed.size(); ++j) {
      if (!attributes_disjoint(machine.observed.attributes()[j], xi, tol)) rows.push_back(j);
    }
    if (rows.empty()) {
      structural = false;
      break;
    }
    for (size_t r = 1; r < rows.size(); ++r) {
      if (!attribute_equal(machine.pointer_marks[rows[0]], machine.pointer_marks[rows[r]],
                           tol)) {
        structural = false;
        break;
      }
    }
    if (!structural) break;
    std::vector<Attribute> covering;
    for (size_t r : rows) covering.push_back(machine.observed.attributes()[r]);
    if (!attribute_subset(xi, attribute_union(covering, tol), tol)) {
      structural = false;
      break;
    }
    mark_of[i] = static_cast<int>(rows[0]);
  }
  if (structural) {
    for (size_t i = 0; i < x.size() && structural; ++i) {
      for (size_t j = i + 1; j < x.size() && structural; ++j) {
        if (mark_of[i] < 0 || mark_of[j] < 0) continue;
        if (!attributes_disjoint(machine.pointer_marks[mark_of[i]],
                                 machine.pointer_marks[mark_of[j]], tol)) {
          structural = false;
        }
      }
    }
  }
  if (structural) {
    Verdict verdict;
    verdict.kind = VerdictKind::Possible;
    verdict.note = "the defining pairs cover every member with a distinct mark";
    return verdict;
  }

  // Joint pass: pose the defining pairs and the claimed measurement pairs as
  // one task, for every labelling of members by marks.
  std::vector<Attribute> pool = machine.pointer_marks;
  if (pool.size() < x.size()) {
    Verdict verdict;
    verdict.kind = VerdictKind::Unknown;
    verdict.note = "fewer marks than members";
    return verdict;
  }
  size_t occupied = 0;
  for (const auto& xi : x.attributes()) {
    if (!xi.is_empty()) ++occupied;
  }
  long long labellings = 1;
  for (size_t i = 0; i < occupied; ++i) labellings *= static_cast<long long>(pool.size() - i);
  if (labellings > 24) {
    Verdict verdict;
    verdict.kind = VerdictKind::Unknown;
    verdict.note = "too many labellings to scan";
    return verdict;
  }

  Task base = measurement_task(machine, tol);
  Attribute whole = full_attribute(x.substrate(), tol);
  std::vector<int> assignment(x.size(), -1);
  std::vector<bool> used(pool.size(), false);
  std::optional<Verdict> impossible;
  bool unknown = false;
  bool consistent = false;
  std::string consistent_note;

  std::function<void(size_t)> scan = [&](size_t idx) {
    while (idx < x.size() && x.attributes()[idx].is_empty()) ++idx;
    if (idx == x.size()) {
      std::vector<TaskPair> pairs = base.pairs();
      for (size_t i = 0; i < x.size(); ++i) {
        if (x.attributes()[i].is_empty()) continue;
        pairs.push_back(
            {product_attribute({x.attributes()[i], machine.pointer_ready}, tol),
             product_attribute({whole, pool[assignment[i]]}, tol)});
      }
      try {
        Task joint(std::move(pairs), tol);
        Verdict v = oracles::possible_with_side_effects(joint, cfg);
        if (v.kind == VerdictKind::Possible) {
          consistent = true;
          std::ostringstream note;
          note << "labelling";
          for (size_t i = 0; i < x.size(); ++i) {
            if (assignment[i] >= 0) note << " " << i << "->" << assignment[i];
          }
          consistent_note = note.str();
        } else if (v.kind == VerdictKind::Impossible) {
          if (!impossible) impossible = v;
        } else {
          unknown = true;
        }
      } catch (const Error&) {
        unknown = true;
      }
      return;
    }
    for (size_t m = 0; m < pool.size(); ++m) {
      if (used[m]) continue;
      used[m] = true;
      assignment[idx] = static_cast<int>(m);
      scan(idx + 1);
      used[m] = false;
      assignment[idx] = -1;
    }
  };
  scan(0);

  if (consistent) {
    Verdict verdict;
    verdict.kind = VerdictKind::Unknown;
    verdict.note = "the defining pairs do not force it, though " + consistent_note +
                   " is jointly realizable";
    return verdict;
  }
  if (!unknown && impossible) {
    impossible->note = "no labelling of marks is jointly realizable";
    return *impossible;
  }
  Verdict verdict;
  verdict.kind = VerdictKind::Unknown;
  verdict.note = "no labelling decided";
  return verdict;
}

bool is_non_perturbing(const MeasurementSpec& machine, const Tolerances& tol) {
  for (size_t i = 0; i < machine.observed.size(); ++i) {
    if (!attribute_subset(machine.outputs_on_s[i], machine.observed.attributes()[i], tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace ctk::info
