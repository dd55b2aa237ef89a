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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ctk/errors.hpp"
#include "ctk/oracle.hpp"

using namespace ctk;
using namespace ctk::oracles;

namespace {

// 1/sqrt(2) to full double precision; several outcomes below pin to it.
constexpr double kInvSqrt2 = 0.7071067811865476;

Attribute labels(const SubstratePtr& s, std::vector<std::string> states) {
  return Attribute::state_set(s, std::move(states));
}

Attribute ray(const SubstratePtr& s, const cvec& v) {
  return Attribute::single_ray(s, v);
}

}  // namespace

TEST_CASE("classical permutations are possible with a total witness") {
  auto t = Substrate::classical("t", 3);
  Task cycle({{labels(t, {"0"}), labels(t, {"1"})},
              {labels(t, {"1"}), labels(t, {"2"})},
              {labels(t, {"2"}), labels(t, {"0"})}});
  Verdict v = classical_possible(cycle);
  REQUIRE(v.kind == VerdictKind::Possible);
  REQUIRE(v.classical_witness.has_value());
  CHECK(v.classical_witness->transition.at("0") == "1");
  CHECK(v.classical_witness->transition.at("2") == "0");
  CHECK(validate_witness(cycle, v));
}

TEST_CASE("classical merging is possible, empty outputs are not") {
  auto t = Substrate::classical("t", 3);
  Task merge({{labels(t, {"0", "1"}), labels(t, {"2"})}});
  CHECK(classical_possible(merge).kind == VerdictKind::Possible);

  Task stuck({{labels(t, {"0"}), Attribute::empty(t)}});
  Verdict v = classical_possible(stuck);
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::EmptyOutput);
}

TEST_CASE("repeated inputs offer a free choice") {
  auto t = Substrate::classical("t", 3);
  Attribute a0 = labels(t, {"0"});
  Task choice({{a0, Attribute::empty(t)}, {a0, labels(t, {"1"})}});
  Verdict v = classical_possible(choice);
  REQUIRE(v.kind == VerdictKind::Possible);
  CHECK(v.classical_witness->transition.at("0") == "1");

  // every offered output empty: nothing to choose
  Task no_way({{a0, Attribute::empty(t)}, {a0, Attribute::empty(t)}});
  CHECK(classical_possible(no_way).kind == VerdictKind::Impossible);
}

TEST_CASE("skew rays cannot be mapped to orthogonal outputs") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1);
  Task tell_apart({{ray(q, e0), ray(q, e0)}, {ray(q, plus), ray(q, e1)}});
  Verdict v = quantum_possible(tell_apart, SideEffects::On);
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::ForcedOrthogonality);
  REQUIRE(v.certificate->values.size() >= 1);
  CHECK(std::abs(v.certificate->values[0] - kInvSqrt2) <= 1e-12);
}

TEST_CASE("erasing the basis distinction needs exactly the input overlap in the ancilla") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1);
  Task erase({{ray(q, e0), ray(q, e0)}, {ray(q, plus), ray(q, e0)}});

  CHECK(quantum_possible(erase, SideEffects::Off).kind == VerdictKind::Impossible);

  Verdict v = quantum_possible(erase, SideEffects::On);
  REQUIRE(v.kind == VerdictKind::Possible);
  REQUIRE(v.quantum_witness.has_value());
  const auto& w = *v.quantum_witness;
  REQUIRE(w.ancilla.size() == 2);
  // <in0|in1> = <out0|out1> <anc0|anc1> forces |<anc0|anc1>| = 1/sqrt(2)
  const double anc = std::abs((w.ancilla[0].adjoint() * w.ancilla[1])(0, 0));
  CHECK(std::abs(anc - kInvSqrt2) <= 1e-6);
  CHECK(validate_witness(erase, v));
}

TEST_CASE("copying a skew pair hits the cloning constraint") {
  auto q = Substrate::quantum("q", 2);
  auto qq = Substrate::compose({q, q});
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  const double c = 0.6;
  cvec tilted = c * e0 + std::sqrt(1.0 - c * c) * e1;

  Task copy({{ray(qq, kron(e0, e0)), ray(qq, kron(e0, e0))},
             {ray(qq, kron(tilted, e0)), ray(qq, kron(tilted, tilted))}});
  Verdict v = quantum_possible(copy, SideEffects::On);
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::CloningGram);
  // the certificate exhibits |G| = c and the forced |F| = c^2
  REQUIRE(v.certificate->values.size() >= 2);
  CHECK(std::abs(v.certificate->values[0] - c) <= 1e-12);
  CHECK(std::abs(v.certificate->values[1] - c * c) <= 1e-12);
}

TEST_CASE("basis rotations come out possible without side effects") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1), minus = kInvSqrt2 * (e0 - e1);
  Task rotate({{ray(q, e0), ray(q, plus)}, {ray(q, e1), ray(q, minus)}});
  Verdict v = quantum_possible(rotate, SideEffects::Off);
  REQUIRE(v.kind == VerdictKind::Possible);
  REQUIRE(v.quantum_witness.has_value());
  CHECK_FALSE(v.quantum_witness->side_effects);
  CHECK(validate_witness(rotate, v));
}

TEST_CASE("sampled unitary tasks always produce validated witnesses") {
  std::mt19937_64 rng(991);
  for (int dim : {2, 3}) {
    auto q = Substrate::quantum("s" + std::to_string(dim), dim);
    for (int round = 0; round < 5; ++round) {
      cmat u = random_unitary(rng, dim);
      std::vector<TaskPair> pairs;
      for (int i = 0; i < dim; ++i) {
        pairs.push_back({ray(q, basis_vector(q, i)), ray(q, u * basis_vector(q, i))});
      }
      Task rotate(pairs);
      Verdict v = quantum_possible(rotate, SideEffects::Off);
      REQUIRE(v.kind == VerdictKind::Possible);
      CHECK(validate_witness(rotate, v));
    }
  }
}

TEST_CASE("tampered witnesses are rejected") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  Task swap_task({{ray(q, e0), ray(q, e1)}, {ray(q, e1), ray(q, e0)}});
  Verdict v = quantum_possible(swap_task, SideEffects::Off);
  REQUIRE(v.kind == VerdictKind::Possible);
  REQUIRE(v.quantum_witness.has_value());
  CHECK(validate_witness(swap_task, v));

  Verdict forged = v;
  forged.quantum_witness->output_rays[0] = kInvSqrt2 * (e0 + e1);
  CHECK_FALSE(validate_witness(swap_task, forged));

  forged = v;
  forged.quantum_witness->ancilla[0] *= 2.0;
  CHECK_FALSE(validate_witness(swap_task, forged));
}

TEST_CASE("whatever is possible without side effects stays possible with them") {
  std::mt19937_64 rng(424242);
  auto q = Substrate::quantum("q", 2);
  int off_possible = 0;
  for (int round = 0; round < 40; ++round) {
    cvec in0 = random_unit_vector(rng, 2);
    cvec in1 = random_unit_vector(rng, 2);
    cvec out0 = random_unit_vector(rng, 2);
    cvec out1 = random_unit_vector(rng, 2);
    Task two({{ray(q, in0), ray(q, out0)}, {ray(q, in1), ray(q, out1)}});
    Verdict off = quantum_possible(two, SideEffects::Off);
    Verdict on = quantum_possible(two, SideEffects::On);
    if (off.kind == VerdictKind::Possible) {
      ++off_possible;
      CHECK(on.kind == VerdictKind::Possible);
    }
    if (on.kind == VerdictKind::Impossible) {
      CHECK(off.kind != VerdictKind::Possible);
    }
  }
  // random rays are generically skew, so coherent success should be rare
  CHECK(off_possible <= 5);
}

TEST_CASE("verdicts repeat bit for bit under one seed") {
  auto q = Substrate::quantum("q", 3);
  std::mt19937_64 rng(5);
  cmat u = random_unitary(rng, 3);
  std::vector<TaskPair> pairs;
  for (int i = 0; i < 3; ++i) {
    pairs.push_back({ray(q, basis_vector(q, i)), ray(q, u * basis_vector(q, i))});
  }
  Task rotate(pairs);
  OracleConfig cfg;
  cfg.seed = 31337;
  Verdict a = quantum_possible(rotate, SideEffects::Off, cfg);
  Verdict b = quantum_possible(rotate, SideEffects::Off, cfg);
  REQUIRE(a.kind == b.kind);
  REQUIRE(a.quantum_witness.has_value());
  REQUIRE(b.quantum_witness.has_value());
  for (size_t i = 0; i < a.quantum_witness->output_rays.size(); ++i) {
    CHECK((a.quantum_witness->output_rays[i] - b.quantum_witness->output_rays[i]).norm() ==
          0.0);
  }

  OracleConfig other = cfg;
  other.seed = 4;
  CHECK(quantum_possible(rotate, SideEffects::Off, other).kind == a.kind);
}

TEST_CASE("gram matrices validate hermiticity, diagonal and positivity") {
  auto g = GramMatrix::from_vectors({cvec::Unit(2, 0), cvec::Unit(2, 1)});
  CHECK_NOTHROW(g.validate({}));

  GramMatrix bad;
  bad.entries = cmat(2, 2);
  bad.entries << 1.0, 2.0, 2.0, 1.0;  // unit diagonal, |off| > 1: not PSD
  CHECK_THROWS_AS(bad.validate({}), Error);

  GramMatrix skew;
  skew.entries = cmat(2, 2);
  skew.entries << 1.0, cdouble(0, 0.5), cdouble(0, 0.5), 1.0;  // not hermitian
  CHECK_THROWS_AS(skew.validate({}), Error);
}

TEST_CASE("the n-fold ensemble squeezes the residual geometrically") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1);
  TaskFamily fam = ensemble_distinguish_family({ray(q, e0), ray(q, plus)});

  CHECK(std::abs(ensemble_residual(fam, 1) - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(ensemble_residual(fam, 2) - 0.5) <= 1e-15);
  // (1/sqrt(2))^20 is 2^-10 up to the rounding of the squaring
  CHECK(std::abs(ensemble_residual(fam, 20) - 0.0009765625) <= 1e-15);

  Verdict v = limit_verdict(fam);
  REQUIRE(v.kind == VerdictKind::PossibleInLimit);
  REQUIRE(v.probe_residuals.size() == 20);
  CHECK(std::abs(v.probe_residuals.front() - kInvSqrt2) <= 1e-15);
  CHECK(std::abs(v.probe_residuals.back() - 0.0009765625) <= 1e-15);
}

TEST_CASE("orthogonal ensembles succeed at n = 1, repeats never succeed") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  Verdict ortho = limit_verdict(ensemble_distinguish_family({ray(q, e0), ray(q, e1)}));
  CHECK(ortho.kind == VerdictKind::Possible);

  Verdict same = limit_verdict(ensemble_distinguish_family({ray(q, e0), ray(q, e0)}));
  REQUIRE(same.kind == VerdictKind::Impossible);
  REQUIRE(same.certificate.has_value());
  CHECK(same.certificate->kind == CertificateKind::DefectLowerBound);
}

TEST_CASE("generic families fall back to probing, then report honestly") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);

  TaskFamily succeeding;
  succeeding.generator = [&q, e0, e1](int) {
    return Task({{ray(q, e0), ray(q, e1)}});
  };
  CHECK(limit_verdict(succeeding).kind == VerdictKind::Possible);

  TaskFamily opaque;
  opaque.generator = [&q, e0, e1](int) {
    cvec plus = kInvSqrt2 * (e0 + e1);
    return Task({{ray(q, e0), ray(q, e0)}, {ray(q, plus), ray(q, e1)}});
  };
  Verdict v = limit_verdict(opaque);
  CHECK(v.kind == VerdictKind::Unknown);
  CHECK(v.note.find("Unrecognized") != std::string::npos);
}

TEST_CASE("fingerprints track task content, not object identity") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  Task a({{ray(q, e0), ray(q, e1)}});
  Task b({{ray(q, e0), ray(q, e1)}});
  Task c({{ray(q, e1), ray(q, e0)}});
  CHECK(task_fingerprint(a) == task_fingerprint(b));
  CHECK(task_fingerprint(a) != task_fingerprint(c));
}

TEST_CASE("subspace outputs leave room that forced rays lack") {
  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0), e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1);
  cmat whole(2, 2);
  whole << 1, 0, 0, 1;

  // anywhere in the plane: trivially possible
  Task relaxed({{ray(q, e0), Attribute::subspace(q, whole)},
                {ray(q, plus), Attribute::subspace(q, whole)}});
  CHECK(quantum_possible(relaxed, SideEffects::Off).kind == VerdictKind::Possible);

  // the subspace pins a 1-dim target: same as a forced ray
  cmat line(2, 1);
  line << 1, 0;
  Task pinned({{ray(q, e0), Attribute::subspace(q, line)},
               {ray(q, plus), ray(q, e1)}});
  CHECK(quantum_possible(pinned, SideEffects::On).kind == VerdictKind::Impossible);
}

TEST_CASE("dispatch picks the matching oracle") {
  auto t = Substrate::classical("t", 2);
  Task flip({{labels(t, {"0"}), labels(t, {"1"})}, {labels(t, {"1"}), labels(t, {"0"})}});
  CHECK(possible(flip).kind == VerdictKind::Possible);
  CHECK(possible_with_side_effects(flip).kind == VerdictKind::Possible);

  auto q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0);
  cvec plus = kInvSqrt2 * (e0 + basis_vector(q, 1));
  Task erase({{ray(q, e0), ray(q, e0)}, {ray(q, plus), ray(q, e0)}});
  CHECK(possible(erase).kind == VerdictKind::Impossible);
  CHECK(possible_with_side_effects(erase).kind == VerdictKind::Possible);
}
