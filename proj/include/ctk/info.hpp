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

#ifndef CTK_INFO_HPP
#define CTK_INFO_HPP

#include <optional>

#include "ctk/oracle.hpp"

namespace ctk::info {

/// Whole state space of a substrate as one attribute.
Attribute full_attribute(const SubstratePtr& substrate, const Tolerances& tol = {});

/// Canonical pointer targets: the first `count` basis states of the substrate
/// itself (labels when classical, basis rays when quantum).
std::vector<Attribute> pointer_targets(const SubstratePtr& substrate, size_t count,
                                       const Tolerances& tol = {});

/// The task carrying each member of the variable to a distinct canonical
/// pointer target. Empty members map to the empty attribute. Absent when the
/// substrate has fewer canonical targets than nonempty members.
std::optional<Task> distinguish_task(const Variable& x, const Tolerances& tol = {});

/// Whether the members of the variable can be told apart in one shot (side
/// effects allowed). When no distinguishing task fits on the substrate the
/// verdict carries a certificate naming a non-orthogonal pair.
oracles::Verdict is_distinguishable(const Variable& x, const oracles::OracleConfig& cfg = {});

/// Limit of n-copy distinguishing over the listed attributes (which need not
/// be disjoint).
oracles::Verdict ensemble_distinguishable(const std::vector<Attribute>& attrs,
                                          const oracles::OracleConfig& cfg = {});

/// Two attributes are perp when they are disjoint and the pair variable is
/// distinguishable.
oracles::Verdict perp(const Attribute& a, const Attribute& b,
                      const oracles::OracleConfig& cfg = {});

/// Union of everything perp to the attribute: the label-set complement
/// (classical) or the orthocomplement of the span (quantum).
Attribute bar(const Attribute& a, const Tolerances& tol = {});

/// Closure of the attribute under double complementation: the attribute
/// itself (classical) or the full span (quantum).
Attribute bar_bar(const Attribute& a, const Tolerances& tol = {});

bool bar_closed(const Attribute& a, const Tolerances& tol = {});

/// The two-member variable {x, bar(x)} labelled "true" / "false". The bar
/// side may be empty.
Variable boolean_variable(const Attribute& a, const Tolerances& tol = {});

/// No state lies outside the union of the members.
bool is_maximal(const Variable& v, const Tolerances& tol = {});

/// A distinguishable variable all of whose members are bar-closed.
oracles::Verdict is_observable(const Variable& v, const oracles::OracleConfig& cfg = {});

/// The task copying each listed attribute from the first factor onto a second
/// factor prepared in `blank` (which must be flagged preparable).
Task cloning_task(const std::vector<Attribute>& attrs, const Attribute& blank,
                  const Tolerances& tol = {});

/// Searches the preparable candidates for a blank making the cloning task
/// possible.
oracles::Verdict is_clonable(const std::vector<Attribute>& attrs,
                             const std::vector<Attribute>& preparable_blanks,
                             const oracles::OracleConfig& cfg = {});

/// Every permutation of the members is a possible task. Exhaustive up to six
/// members; generator permutations (with a note) beyond that.
oracles::Verdict is_computation_variable(const Variable& v,
                                         const oracles::OracleConfig& cfg = {});

/// Computation variable whose members are clonable using one of the offered
/// blanks. Variables with fewer than two members simply fail.
oracles::Verdict is_information_variable(const Variable& v,
                                         const std::vector<Attribute>& preparable_blanks,
                                         const oracles::OracleConfig& cfg = {});

struct InfoCapacity {
  int size = 0;
  std::optional<Variable> witness;
  oracles::Verdict computation;
  oracles::Verdict cloning;
};

/// Size of the canonical maximal information variable the substrate carries
/// (label count / Hilbert dimension), with the verifying sub-verdicts.
InfoCapacity info_capacity(const SubstratePtr& substrate, const oracles::OracleConfig& cfg = {});

/// A measuring machine: inputs sharp in a member of `observed` (with the
/// pointer ready in `pointer_ready`) end with the pointer sharp in the
/// member's mark; `outputs_on_s` describe what is left on the measured
/// substrate.
struct MeasurementSpec {
  Variable observed;
  SubstratePtr pointer;
  Attribute pointer_ready;
  std::vector<Attribute> outputs_on_s;
  std::vector<Attribute> pointer_marks;
};

/// Measurer of `x` leaving the measured member in place, with a fresh pointer
/// substrate of matching kind.
MeasurementSpec canonical_measurer(const Variable& x, const Tolerances& tol = {});

Task measurement_task(const MeasurementSpec& spec, const Tolerances& tol = {});

/// Whether the machine measures `x`. Structural containment of the defining
/// pairs decides the clear cases; otherwise the machine's pairs and the
/// claimed measurement pairs are posed as one joint task for every pointer
/// labelling, whose uniform impossibility is a definitive no and whose mere
/// consistency stays unknown.
oracles::Verdict is_measurer_of(const MeasurementSpec& machine, const Variable& x,
                                const oracles::OracleConfig& cfg = {});

/// Every member is left inside itself.
bool is_non_perturbing(const MeasurementSpec& machine, const Tolerances& tol = {});

}  // namespace ctk::info

#endif
