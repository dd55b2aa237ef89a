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

// Acceptance gate: ten end-to-end criteria, one pass/fail line each.
// Usage: acceptance <models-dir> [cli-binary]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ctk/model_io.hpp"
#include "ctk/principles.hpp"
#include "ctk/report.hpp"
#include "ctk/simulate.hpp"
#include "ctk/superinfo.hpp"

using namespace ctk;
using oracles::CertificateKind;
using oracles::Verdict;
using oracles::VerdictKind;

namespace {

constexpr double kTauMatch = 1e-9;     // verdict / overlap agreement
constexpr double kTauResidual = 1e-12; // pinned residual values
constexpr double kInvSqrt2 = 0.7071067811865476;

std::string g_models_dir;
std::string g_cli;

struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

cvec random_ray(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss;
  cvec v(dim);
  for (int i = 0; i < dim; ++i) v(i) = cdouble(gauss(rng), gauss(rng));
  return v / v.norm();
}

double ray_overlap(const cvec& a, const cvec& b) {
  return std::abs((cdouble)(a.adjoint() * b));
}

models::Model fixture(const std::string& name) {
  return models::load_model(g_models_dir + "/" + name + ".ctm");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 1. One-shot separability coincides with orthogonality on random ray pairs.
void criterion_distinguish_orthogonality() {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int dim : {2, 3}) {
    SubstratePtr s = Substrate::quantum(dim == 2 ? "q" : "t", dim);
    std::vector<std::pair<cvec, cvec>> pairs;
    for (int i = 0; i < 50; ++i) pairs.push_back({random_ray(rng, dim), random_ray(rng, dim)});
    pairs.push_back({basis_vector(s, 0), basis_vector(s, 1)});  // overlap 0
    pairs.push_back({basis_vector(s, 0), basis_vector(s, 0)});  // overlap 1
    for (const auto& [a, b] : pairs) {
      double overlap = ray_overlap(a, b);
      Verdict v = info::perp(Attribute::single_ray(s, a), Attribute::single_ray(s, b));
      bool separable = v.kind == VerdictKind::Possible;
      expect(separable == (overlap < kTauMatch),
             "verdict disagrees with overlap " + std::to_string(overlap));
      ++checked;
    }
  }
  expect(checked == 104, "expected 104 pairs");
  expect(seconds_since(start) < 5.0, "ran past the 5 s bound");
}

// 2. Copying admits witnesses exactly at the aligned and orthogonal ends.
void criterion_cloning_boundary() {
  auto start = std::chrono::steady_clock::now();
  SubstratePtr q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0);
  cvec e1 = basis_vector(q, 1);
  Attribute blank = Attribute::single_ray(q, e0).with_flags(true, false);
  for (int step = 0; step <= 10; ++step) {
    const double c = step / 10.0;
    cvec other = c * e0 + std::sqrt(std::max(0.0, 1.0 - c * c)) * e1;
    Verdict v = info::is_clonable(
        {Attribute::single_ray(q, e0), Attribute::single_ray(q, other)}, {blank});
    if (step == 0 || step == 10) {
      expect(v.kind == VerdictKind::Possible,
             "copyable pair rejected at overlap " + std::to_string(c));
    } else {
      expect(v.kind == VerdictKind::Impossible,
             "skew pair accepted at overlap " + std::to_string(c));
      expect(v.certificate && v.certificate->kind == CertificateKind::CloningGram,
             "missing Gram certificate at overlap " + std::to_string(c));
    }
  }
  expect(seconds_since(start) < 5.0, "ran past the 5 s bound");
}

// 3. Swapping two non-orthogonal rays is possible, with a checkable witness.
void criterion_skew_swap() {
  SubstratePtr q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0);
  cvec plus = kInvSqrt2 * (e0 + basis_vector(q, 1));
  Variable pair({Attribute::single_ray(q, e0), Attribute::single_ray(q, plus)});
  Task swap = permutation_task(pair, Permutation::transposition(2, 0, 1));
  Verdict v = oracles::possible_with_side_effects(swap);
  expect(v.kind == VerdictKind::Possible, "the skew swap was not possible");
  expect(v.quantum_witness.has_value(), "no witness attached");
  expect(oracles::validate_witness(swap, v), "the witness does not replay");
}

// 4. The qubit fixture exhibits two good variables with a bad union.
void criterion_superinfo_detection() {
  models::Model m = fixture("qubit_zx");
  auto blanks = models::preparable_blanks(m, m.substrate("q"));
  auto report = superinfo::detect_superinformation({m.variable("z"), m.variable("x")}, blanks);
  expect(report.found, "no superinformation found on the z/x fixture");
  expect(report.union_check.kind == VerdictKind::Impossible, "the union was not refuted");
  auto pair = superinfo::find_indistinguishable_pair(m.variable("z"), m.variable("x"));
  expect(pair.has_value(), "no indistinguishable member pair");
  expect(std::abs(pair->overlap - kInvSqrt2) <= kTauMatch,
         "overlap " + std::to_string(pair->overlap) + " is not 1/sqrt(2)");
}

// 5. The eight standard statements hold, with the advertised certificates.
void criterion_theorem_suite() {
  auto start = std::chrono::steady_clock::now();
  for (const char* id : {"8.1", "8.2", "8.3", "8.4", "8.5", "8.6", "8.7"}) {
    auto check = superinfo::check_theorem(id);
    expect(check.holds, std::string("statement ") + id + " does not hold");
  }

  superinfo::Medium m = superinfo::standard_qubit_medium();

  // 8.2: merging the two variables into one readout fails in one shot
  auto slots = info::pointer_targets(m.substrate, 2);
  std::vector<TaskPair> merge;
  for (const auto& a : m.x.attributes()) merge.push_back({a, slots[0]});
  for (const auto& b : m.y.attributes()) merge.push_back({b, slots[1]});
  Verdict single = oracles::possible_with_side_effects(Task(std::move(merge)));
  expect(single.kind == VerdictKind::Impossible && single.certificate.has_value(),
         "single-shot ensemble readout lacks a certificate");

  // 8.3: the mixed pair carries the cloning certificate
  Verdict mixed = info::is_clonable({m.x.attributes()[0], m.y.attributes()[0]}, m.blanks);
  expect(mixed.kind == VerdictKind::Impossible && mixed.certificate &&
             mixed.certificate->kind == CertificateKind::CloningGram,
         "mixed pair cloning lacks the Gram certificate");

  // 8.4: no joint readout of both variables at once
  std::vector<Attribute> merged = m.x.attributes();
  for (const auto& b : m.y.attributes()) merged.push_back(b);
  Verdict joint = info::is_distinguishable(Variable(merged));
  expect(joint.kind == VerdictKind::Impossible && joint.certificate.has_value(),
         "joint readout lacks a certificate");

  // 8.5: the unpredictable outcome spreads over exactly two members
  auto cert = superinfo::unpredictability_certificate(m.x, m.y.attributes()[0]);
  expect(cert.support.size() == 2, "support is not two members");

  // 8.6: leaving the probe in place clashes with unit norm
  Verdict disturb =
      oracles::possible_with_side_effects(superinfo::perturbation_task(m.x, m.y.attributes()[0]));
  expect(disturb.kind == VerdictKind::Impossible && disturb.certificate &&
             disturb.certificate->kind == CertificateKind::UnitNormConflict,
         "perturbation lacks the norm-conflict certificate");

  // 8.7: the comparator lands sharply on "agree" though neither record is sharp
  auto two = superinfo::consecutive_measurements(m.x, m.y.attributes()[0]);
  expect(two.record_sharp_true, "the records do not agree sharply");
  expect(!two.first_record_sharp && !two.second_record_sharp,
         "an individual record came out sharp");
  double agree_weight = 0.0;
  for (int i = 0; i < two.final_state.size(); ++i) {
    if (i & 1) agree_weight += std::norm(two.final_state(i));
  }
  expect(std::abs(agree_weight - 1.0) < kTauMatch, "the agreement flag is not sharp to 1e-9");

  expect(seconds_since(start) < 30.0, "ran past the 30 s bound");
}

// 6. The two-qubit fixture replays the locally inaccessible construction.
void criterion_two_qubit_construction() {
  models::Model m = fixture("two_qubit");
  SubstratePtr ab = m.substrate("ab");

  cvec e0(2), e1(2);
  e0 << 1, 0;
  e1 << 0, 1;
  cvec plus = kInvSqrt2 * (e0 + e1);
  cmat cnot(4, 4);
  cnot << 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
  cvec image = cnot * kron(plus, e0);

  const cvec& psi1 = m.attribute("phi_plus").rays().front();
  expect(same_ray(psi1, image, 1e-9), "phi_plus is not the controlled-not image of (0', 0)");
  expect(std::abs(ray_overlap(psi1, kron(e0, e0)) - kInvSqrt2) <= kTauMatch,
         "overlap with 00 is not 1/sqrt(2)");
  expect(std::abs(ray_overlap(psi1, kron(e1, e1)) - kInvSqrt2) <= kTauMatch,
         "overlap with 11 is not 1/sqrt(2)");

  auto blanks = models::preparable_blanks(m, ab);
  for (const char* name : {"c", "d"}) {
    Verdict v = info::is_information_variable(m.variable(name), blanks);
    expect(v.kind == VerdictKind::Possible,
           std::string("variable ") + name + " failed the information checks");
  }
}

// 7. The exhaustive classical sweep matches the analytic count and finds nothing.
void criterion_classical_sweep() {
  auto start = std::chrono::steady_clock::now();
  auto report = principles::falsify_classical(4);
  expect(!report.counterexample_found,
         "counterexample reported: " + report.counterexample);

  // Independent enumeration: every partition of every nonempty subset of a
  // k-state space, for k = 2..4. Partitions of an m-set are counted by the
  // Bell numbers.
  long long bell[5] = {1, 1, 2, 5, 15};
  auto choose = [](int n, int k) {
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  long long expected = 0;
  for (int k = 2; k <= 4; ++k) {
    for (int msize = 1; msize <= k; ++msize) expected += choose(k, msize) * bell[msize];
  }
  expect(report.variables_checked == expected,
         "coverage " + std::to_string(report.variables_checked) + " != analytic " +
             std::to_string(expected));
  expect(seconds_since(start) < 300.0, "ran past the 5 min bound");
}

// 8. Complement laws hold on random attributes drawn across the fixtures.
void criterion_bar_laws() {
  std::vector<SubstratePtr> subs;
  for (const char* name : {"bit", "trit", "qubit_zx", "qutrit_mub", "two_qubit", "four_level"}) {
    models::Model m = fixture(name);
    for (const auto& id : m.substrate_ids) subs.push_back(m.substrates.at(id));
  }
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const SubstratePtr& s = subs[round % subs.size()];
    Attribute x = Attribute::empty(s);
    if (s->classical_kind()) {
      auto space = s->state_space();
      uint64_t mask = 1 + rng() % ((uint64_t{1} << space.size()) - 1);
      std::vector<std::string> picked;
      for (size_t i = 0; i < space.size(); ++i) {
        if (mask & (uint64_t{1} << i)) picked.push_back(space[i]);
      }
      x = Attribute::state_set(s, picked);
    } else {
      const int d = s->size();
      switch (rng() % 3) {
        case 0:
          x = Attribute::single_ray(s, random_ray(rng, d));
          break;
        case 1: {
          cvec a = random_ray(rng, d);
          cvec b = random_ray(rng, d);
          x = Attribute::ray_set(s, {a, b});
          break;
        }
        default: {
          int k = 1 + static_cast<int>(rng() % static_cast<uint64_t>(d));
          cmat raw(d, k);
          for (int j = 0; j < k; ++j) raw.col(j) = random_ray(rng, d);
          x = Attribute::subspace(s, raw);
          break;
        }
      }
    }
    expect(attribute_subset(x, info::bar_bar(x)), "x escapes its double complement");
    expect(attribute_equal(info::bar(info::bar_bar(x)), info::bar(x)),
           "bar of the closure differs from bar");
    Variable boolean = info::boolean_variable(x);
    expect(info::is_distinguishable(boolean).kind == VerdictKind::Possible,
           "a boolean variable was not separable");
    expect(info::is_maximal(boolean), "a boolean variable left states uncovered");
  }
}

// 9. Disjoint fixture attributes separate at worst in the many-copy limit.
void criterion_ensemble_pairs() {
  for (const char* name : {"bit", "trit", "qubit_zx", "qutrit_mub", "two_qubit", "four_level"}) {
    models::Model m = fixture(name);
    for (size_t i = 0; i < m.attribute_names.size(); ++i) {
      for (size_t j = i + 1; j < m.attribute_names.size(); ++j) {
        const Attribute& a = m.attributes.at(m.attribute_names[i]);
        const Attribute& b = m.attributes.at(m.attribute_names[j]);
        if (a.is_empty() || b.is_empty()) continue;
        if (!same_substrate(a.substrate(), b.substrate())) continue;
        if (!attributes_disjoint(a, b)) continue;
        Verdict v = info::ensemble_distinguishable({a, b});
        expect(v.kind == VerdictKind::Possible || v.kind == VerdictKind::PossibleInLimit,
               std::string(name) + ": " + m.attribute_names[i] + " vs " +
                   m.attribute_names[j] + " did not separate in the limit");
      }
    }
  }

  models::Model m = fixture("qubit_zx");
  Verdict v = info::ensemble_distinguishable({m.attribute("z0"), m.attribute("xplus")});
  expect(v.kind == VerdictKind::PossibleInLimit, "the z0/xplus family is not a limit case");
  expect(v.probe_residuals.size() >= 20, "fewer than 20 probes");
  expect(std::abs(v.probe_residuals[19] - 0.0009765625) <= kTauResidual,
         "the 20-copy residual is off");
}

// 10. Equal seeds give byte-identical reports.
void criterion_determinism() {
  auto render = [] {
    oracles::OracleConfig cfg;
    cfg.seed = 123;
    std::ostringstream out;
    for (const char* id : {"8.1", "8.2", "8.3", "8.9"}) {
      out << reports::theorem_json(superinfo::check_theorem(id, cfg)).dump(2) << "\n";
    }
    models::Model m = fixture("qubit_zx");
    auto blanks = models::preparable_blanks(m, m.substrate("q"));
    Verdict v = info::is_information_variable(m.variable("x"), blanks, cfg);
    out << reports::verdict_json(v).dump(2) << "\n";
    out << reports::falsify_json(principles::falsify_classical(3, 4, cfg)).dump(2) << "\n";
    return out.str();
  };
  std::string first = render();
  std::string second = render();
  expect(first == second, "in-process reports differ between runs");

  if (!g_cli.empty()) {
    std::string base = "/tmp/ctk_accept_";
    for (int run = 0; run < 2; ++run) {
      std::string cmd = g_cli + " superinfo " + g_models_dir +
                        "/qubit_zx.ctm --seed 9 --json --out " + base + std::to_string(run);
      expect(std::system(cmd.c_str()) == 0, "the CLI run failed");
    }
    expect(slurp(base + "0") == slurp(base + "1"), "CLI reports differ between runs");
    std::remove((base + "0").c_str());
    std::remove((base + "1").c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <models-dir> [cli-binary]\n";
    return 2;
  }
  g_models_dir = argv[1];
  if (argc > 2) g_cli = argv[2];

  struct Entry {
    const char* title;
    std::function<void()> run;
  };
  const Entry entries[] = {
      {"one-shot separability coincides with orthogonality", criterion_distinguish_orthogonality},
      {"copying is admitted exactly at the overlap boundary", criterion_cloning_boundary},
      {"a non-orthogonal swap is possible with a replayable witness", criterion_skew_swap},
      {"the qubit fixture is detected as a superinformation medium", criterion_superinfo_detection},
      {"the eight standard statements hold with their certificates", criterion_theorem_suite},
      {"the two-qubit construction replays, members skew by 1/sqrt(2)", criterion_two_qubit_construction},
      {"the exhaustive classical sweep is clean and fully counted", criterion_classical_sweep},
      {"complement laws hold on 200 random attributes", criterion_bar_laws},
      {"disjoint fixture attributes separate at worst in the limit", criterion_ensemble_pairs},
      {"equal seeds emit byte-identical reports", criterion_determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& entry : entries) {
    ++index;
    std::string detail;
    try {
      entry.run();
    } catch (const Failure& f) {
      detail = f.what;
    } catch (const std::exception& e) {
      detail = std::string("unexpected error: ") + e.what();
    }
    if (detail.empty()) {
      std::cout << "[PASS] " << index << ". " << entry.title << "\n";
    } else {
      ++failures;
      std::cout << "[FAIL] " << index << ". " << entry.title << " (" << detail << ")\n";
    }
  }
  if (failures) {
    std::cout << failures << " of 10 criteria failed\n";
    return 1;
  }
  std::cout << "all 10 criteria passed\n";
  return 0;
}
