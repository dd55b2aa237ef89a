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

#ifndef CTK_ORACLE_HPP
#define CTK_ORACLE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctk/task.hpp"

namespace ctk::oracles {

struct OracleConfig {
  Tolerances tol;
  uint64_t seed = 0;
  int restarts = 64;
  int iterations = 500;
  int n_probe = 20;
  int max_choice_variants = 64;
  int max_output_combos = 256;
};

enum class VerdictKind { Possible, Impossible, PossibleInLimit, Unknown };
enum class SideEffects { Off, On };

const char* verdict_kind_name(VerdictKind k);

enum class CertificateKind {
  EmptyOutput,
  ForcedOrthogonality,
  OverlapBound,
  CloningGram,
  UnitNormConflict,
  GramMismatch,
  DefectLowerBound,
};

const char* certificate_kind_name(CertificateKind k);

/// An analytic impossibility proof. `rows` index the expanded constraint rows
/// it talks about, `values` carry its numeric exhibits.
struct Certificate {
  CertificateKind kind;
  std::string message;
  std::vector<int> rows;
  std::vector<double> values;
};

struct ClassicalWitness {
  std::map<std::string, std::string> transition;
};

/// Output and ancilla vectors realizing the required Gram relation
/// <in_i|in_j> = <out_i|out_j> <anc_i|anc_j> on the expanded rows.
struct QuantumWitness {
  std::vector<cvec> input_rays;
  std::vector<int> pair_index;
  std::vector<cvec> output_rays;
  std::vector<cvec> ancilla;
  bool side_effects = false;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::optional<Certificate> certificate;
  std::optional<ClassicalWitness> classical_witness;
  std::optional<QuantumWitness> quantum_witness;
  std::string note;
  /// Residuals probed by limit_verdict, indexed from n = 1.
  std::vector<double> probe_residuals;
};

/// Hermitian, unit-diagonal, positive semidefinite overlap matrix.
struct GramMatrix {
  cmat entries;

  static GramMatrix from_vectors(const std::vector<cvec>& vectors);
  void validate(const Tolerances& tol) const;
};

/// Decides a classical task: some total transition function on the union of
/// the input states must land every state inside an output offered for it.
Verdict classical_possible(const Task& task, const OracleConfig& cfg = {});

/// Decides a quantum task by unitary-extension feasibility. Analytic
/// certificates prove impossibility; a seeded random-restart alternating
/// least-squares search produces witnesses; a failed search is Unknown.
Verdict quantum_possible(const Task& task, SideEffects side, const OracleConfig& cfg = {});

/// Kind dispatch with side effects off / on.
Verdict possible(const Task& task, const OracleConfig& cfg = {});
Verdict possible_with_side_effects(const Task& task, const OracleConfig& cfg = {});

/// Re-derives every claim a witness makes, independently of the search.
bool validate_witness(const Task& task, const Verdict& verdict, const OracleConfig& cfg = {});

/// A family of tasks indexed by the ensemble size n >= 1.
struct TaskFamily {
  enum class Shape { EnsembleDistinguish, Generic };
  Shape shape = Shape::Generic;
  std::vector<Attribute> base;
  std::function<Task(int)> generator;
};

TaskFamily ensemble_distinguish_family(std::vector<Attribute> base, const Tolerances& tol = {});

/// Worst pairwise overlap of the base attributes raised to the n-th power
/// (the Gram residual forced onto the n-fold distinguishing task).
double ensemble_residual(const TaskFamily& family, int n, const Tolerances& tol = {});

/// Possible when some probed n already succeeds; PossibleInLimit when the
/// defect of a recognized family shape decays to zero; Impossible when it is
/// bounded below; Unknown for unrecognized families.
Verdict limit_verdict(const TaskFamily& family, const OracleConfig& cfg = {});

/// Seed-stable structural hash used to derive the per-query RNG stream.
uint64_t task_fingerprint(const Task& task);

}  // namespace ctk::oracles

#endif
