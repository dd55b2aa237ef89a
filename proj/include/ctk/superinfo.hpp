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

#ifndef CTK_SUPERINFO_HPP
#define CTK_SUPERINFO_HPP

#include "ctk/info.hpp"
#include "ctk/network.hpp"
#include "ctk/simulate.hpp"

namespace ctk::superinfo {

/// Two information variables on one substrate whose union is suspected not to
/// be one, plus the preparable blanks available for cloning checks.
struct Medium {
  SubstratePtr substrate;
  Variable x;
  Variable y;
  std::vector<Attribute> blanks;
};

/// Qubit with its two canonical ray pairs (the computational pair and the
/// diagonal pair), blanks at the first basis ray.
Medium standard_qubit_medium(const Tolerances& tol = {});

struct DetectionReport {
  bool found = false;
  int first = -1;
  int second = -1;
  oracles::Verdict first_check;
  oracles::Verdict second_check;
  oracles::Verdict union_check;
  std::string note;
};

/// Scans pairs of candidate variables for two that are information variables
/// individually while their union fails to be one.
DetectionReport detect_superinformation(const std::vector<Variable>& candidates,
                                        const std::vector<Attribute>& blanks,
                                        const oracles::OracleConfig& cfg = {});

struct MemberPair {
  int first_member = -1;
  int second_member = -1;
  double overlap = 0.0;
  oracles::Verdict verdict;
};

/// First member of x and member of y that cannot be told apart in one shot.
std::optional<MemberPair> find_indistinguishable_pair(const Variable& x, const Variable& y,
                                                      const oracles::OracleConfig& cfg = {});

/// Structural certificate that the outcome of measuring `x` on an input sharp
/// in `y` is unpredictable: at least two members carry weight, none contains
/// `y`, and their union spans it. Throws PreconditionFailed when `y` sits
/// inside a single member.
struct UnpredictabilityCertificate {
  std::vector<size_t> support;
  std::vector<double> weights;
  Attribute chi;
};

UnpredictabilityCertificate unpredictability_certificate(const Variable& x, const Attribute& y,
                                                         const Tolerances& tol = {});

/// The task of measuring `x` into a fresh pointer while leaving both every
/// member and the attribute `y` undisturbed. Throws PreconditionFailed when
/// fewer than two members meet `y`.
Task perturbation_task(const Variable& x, const Attribute& y, const Tolerances& tol = {});

/// Consecutive records of one observable agree even on inputs whose outcome
/// is unpredictable.
struct AgreementResult {
  Network network;
  Task flattened;
  bool record_sharp_true = false;
  bool first_record_sharp = false;
  bool second_record_sharp = false;
  std::vector<double> first_weights;
  std::vector<double> second_weights;
  cvec final_state;
};

/// Measure the basis observable of a quantum substrate twice (with a basis
/// permutation fixing the members that meet `y` in between) and compare the
/// records. Throws NoFixedPointFreePermutation when exactly one member misses
/// `y`.
AgreementResult consecutive_measurements(const Variable& x, const Attribute& y,
                                         const oracles::OracleConfig& cfg = {});

/// Whether the task admits a coherent realization: reversible on the quantum
/// side (no side effects), injective on the classical side.
oracles::Verdict coherence_check(const Task& task, const oracles::OracleConfig& cfg = {});

/// One verified statement about a medium, with the numbers it rests on.
struct TheoremCheck {
  std::string id;
  bool holds = false;
  std::vector<std::pair<std::string, double>> values;
  std::vector<std::pair<std::string, std::string>> facts;
};

TheoremCheck check_indistinguishable_members(const Medium& medium,
                                             const oracles::OracleConfig& cfg = {});
TheoremCheck check_ensemble_distinguishable(const Medium& medium,
                                            const oracles::OracleConfig& cfg = {});
TheoremCheck check_no_cloning(const Medium& medium, const oracles::OracleConfig& cfg = {});
TheoremCheck check_no_joint_measurement(const Medium& medium,
                                        const oracles::OracleConfig& cfg = {});
TheoremCheck check_unpredictability(const Medium& medium,
                                    const oracles::OracleConfig& cfg = {});
TheoremCheck check_perturbation(const Medium& medium, const oracles::OracleConfig& cfg = {});
TheoremCheck check_consecutive_agreement(const Medium& medium,
                                         const oracles::OracleConfig& cfg = {});
TheoremCheck check_locally_inaccessible(const oracles::OracleConfig& cfg = {});

/// Dispatch by section id "8.1" .. "8.7", "8.9" on the standard media.
TheoremCheck check_theorem(const std::string& id, const oracles::OracleConfig& cfg = {});

}  // namespace ctk::superinfo

#endif
