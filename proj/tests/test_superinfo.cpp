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

#include "ctk/errors.hpp"
#include "ctk/superinfo.hpp"

using namespace ctk;
using namespace ctk::superinfo;
using oracles::CertificateKind;
using oracles::Verdict;
using oracles::VerdictKind;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

Attribute labels(const SubstratePtr& s, std::vector<std::string> states) {
  return Attribute::state_set(s, std::move(states));
}

}  // namespace

TEST_CASE("the standard medium is a qubit with its two ray pairs") {
  Medium m = standard_qubit_medium();
  CHECK_FALSE(m.substrate->classical_kind());
  CHECK(m.substrate->size() == 2);
  CHECK(m.x.labels() == std::vector<std::string>{"0", "1"});
  CHECK(m.y.labels() == std::vector<std::string>{"+", "-"});
  REQUIRE(m.blanks.size() == 1);
  CHECK(m.blanks.front().preparable());
}

TEST_CASE("detection finds the pair whose union stops being information") {
  Medium m = standard_qubit_medium();
  DetectionReport report = detect_superinformation({m.x, m.y}, m.blanks);
  REQUIRE(report.found);
  CHECK(report.first == 0);
  CHECK(report.second == 1);
  CHECK(report.first_check.kind == VerdictKind::Possible);
  CHECK(report.second_check.kind == VerdictKind::Possible);
  CHECK(report.union_check.kind == VerdictKind::Impossible);
}

TEST_CASE("classical partitions never detect anything") {
  auto c4 = Substrate::classical("c4", 4);
  Attribute blank = labels(c4, {"0"}).with_flags(true, false);
  Variable low({labels(c4, {"0"}), labels(c4, {"1"})});
  Variable high({labels(c4, {"2"}), labels(c4, {"3"})});
  DetectionReport report = detect_superinformation({low, high}, {blank});
  CHECK_FALSE(report.found);
  CHECK(report.note == "every union stayed an information variable");
}

TEST_CASE("candidates sharing states cannot form a union variable") {
  auto c2 = Substrate::classical("c2", 2);
  Attribute blank = labels(c2, {"0"}).with_flags(true, false);
  Variable v({labels(c2, {"0"}), labels(c2, {"1"})});
  DetectionReport report = detect_superinformation({v, v}, {blank});
  CHECK_FALSE(report.found);
  CHECK(report.note.find("union is no variable") != std::string::npos);
}

TEST_CASE("the indistinguishable pair straddles the two bases") {
  Medium m = standard_qubit_medium();
  auto pair = find_indistinguishable_pair(m.x, m.y);
  REQUIRE(pair.has_value());
  CHECK(pair->first_member == 0);
  CHECK(pair->second_member == 0);
  CHECK(std::abs(pair->overlap - kInvSqrt2) <= 1e-12);
  CHECK(pair->verdict.kind == VerdictKind::Impossible);

  // disjoint classical members are always separable, so nothing turns up
  auto t = Substrate::classical("t", 4);
  Variable a({labels(t, {"0"}), labels(t, {"1"})});
  Variable b({labels(t, {"2"}), labels(t, {"3"})});
  CHECK_FALSE(find_indistinguishable_pair(a, b).has_value());
}

TEST_CASE("unpredictability spreads the weight over two members") {
  Medium m = standard_qubit_medium();
  auto cert = unpredictability_certificate(m.x, m.y.attributes()[0]);
  CHECK(cert.support == std::vector<size_t>{0, 1});
  REQUIRE(cert.weights.size() == 2);
  CHECK(std::abs(cert.weights[0] - 0.5) <= 1e-12);
  CHECK(std::abs(cert.weights[1] - 0.5) <= 1e-12);
  CHECK_FALSE(cert.chi.is_empty());

  // a sharp probe has a predictable outcome and is rejected
  CHECK_THROWS_AS(unpredictability_certificate(m.x, m.x.attributes()[0]), Error);
}

TEST_CASE("classical unpredictability weighs label overlaps") {
  auto t = Substrate::classical("t", 4);
  Variable v({labels(t, {"0", "1"}), labels(t, {"2", "3"})});
  auto cert = unpredictability_certificate(v, labels(t, {"1", "2"}));
  CHECK(cert.support == std::vector<size_t>{0, 1});
  CHECK(std::abs(cert.weights[0] - 0.5) <= 1e-12);
  CHECK_THROWS_AS(unpredictability_certificate(v, labels(t, {"0", "1"})), Error);
  CHECK_THROWS_AS(unpredictability_certificate(v, Attribute::empty(t)), Error);
}

TEST_CASE("measuring one basis necessarily disturbs the other") {
  Medium m = standard_qubit_medium();
  Task task = perturbation_task(m.x, m.y.attributes()[0]);
  CHECK(task.pairs().size() == m.x.size() + 1);
  CHECK(task.substrate()->size() == 2 * 3);

  Verdict v = oracles::possible_with_side_effects(task);
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::UnitNormConflict);
}

TEST_CASE("classical measurement can pin the probed set in place") {
  auto c2 = Substrate::classical("c2", 2);
  Variable v({labels(c2, {"0"}), labels(c2, {"1"})});
  Attribute y = labels(c2, {"0", "1"});
  Task task = perturbation_task(v, y);
  CHECK(oracles::possible(task).kind == VerdictKind::Possible);

  // a probe meeting a single member cannot be disturbed by the readout
  CHECK_THROWS_AS(perturbation_task(v, labels(c2, {"0"})), Error);
}

TEST_CASE("two readings of the same observable agree") {
  Medium m = standard_qubit_medium();
  AgreementResult r = consecutive_measurements(m.x, m.y.attributes()[0]);
  CHECK(r.record_sharp_true);
  CHECK_FALSE(r.first_record_sharp);
  CHECK_FALSE(r.second_record_sharp);
  REQUIRE(r.first_weights.size() == 2);
  CHECK(std::abs(r.first_weights[0] - 0.5) <= 1e-12);
  CHECK(std::abs(r.first_weights[1] - 0.5) <= 1e-12);

  // circuit order (s, m1, m2, flag): the survivors are 0001 and 1111
  REQUIRE(r.final_state.size() == 16);
  for (int i = 0; i < 16; ++i) {
    double expected = (i == 1 || i == 15) ? kInvSqrt2 : 0.0;
    CHECK(std::abs(std::abs(r.final_state(i)) - expected) <= 1e-12);
  }
  CHECK(r.network.nodes.size() == 4);
  CHECK(r.flattened.pairs().size() >= 2);
}

TEST_CASE("the in-between shuffle needs two leftover members") {
  auto s3 = Substrate::quantum("s3", 3);
  std::vector<Attribute> members;
  for (int i = 0; i < 3; ++i) {
    members.push_back(Attribute::single_ray(s3, basis_vector(s3, i)));
  }
  Variable basis(members);
  cvec probe = kInvSqrt2 * (basis_vector(s3, 0) + basis_vector(s3, 1));
  CHECK_THROWS_AS(consecutive_measurements(basis, Attribute::single_ray(s3, probe)),
                  Error);

  auto c2 = Substrate::classical("c2", 2);
  Variable cv({labels(c2, {"0"}), labels(c2, {"1"})});
  CHECK_THROWS_AS(consecutive_measurements(cv, labels(c2, {"0"})), Error);

  Medium m = standard_qubit_medium();
  Variable partial({m.x.attributes()[0]});
  CHECK_THROWS_AS(consecutive_measurements(partial, m.y.attributes()[0]), Error);
}

TEST_CASE("coherence asks for reversibility or injectivity") {
  Medium m = standard_qubit_medium();
  Task flip({{m.x.attributes()[0], m.x.attributes()[1]},
             {m.x.attributes()[1], m.x.attributes()[0]}});
  CHECK(coherence_check(flip).kind == VerdictKind::Possible);

  auto c2 = Substrate::classical("c2", 2);
  Task rename({{labels(c2, {"0"}), labels(c2, {"1"})},
               {labels(c2, {"1"}), labels(c2, {"0"})}});
  Verdict ok = coherence_check(rename);
  CHECK(ok.kind == VerdictKind::Possible);
  CHECK(ok.note == "injective transition found");

  Task merge({{labels(c2, {"0", "1"}), labels(c2, {"0"})}});
  Verdict bad = coherence_check(merge);
  CHECK(bad.kind == VerdictKind::Impossible);
  CHECK(bad.note.find("merging is forced") != std::string::npos);
}

TEST_CASE("every standard statement holds") {
  const char* ids[] = {"8.1", "8.2", "8.3", "8.4", "8.5", "8.6", "8.7", "8.9"};
  for (const char* id : ids) {
    CAPTURE(id);
    TheoremCheck check = check_theorem(id);
    CHECK(check.id == id);
    CHECK(check.holds);
  }
  CHECK_THROWS_AS(check_theorem("8.8"), Error);
  CHECK_THROWS_AS(check_theorem("nope"), Error);
}

TEST_CASE("the statement checks expose their key numbers") {
  Medium m = standard_qubit_medium();
  TheoremCheck one = check_indistinguishable_members(m);
  REQUIRE_FALSE(one.values.empty());
  CHECK(one.values.front().first == "overlap");
  CHECK(std::abs(one.values.front().second - kInvSqrt2) <= 1e-12);

  TheoremCheck two = check_ensemble_distinguishable(m);
  CHECK(two.holds);
  bool saw_n1 = false;
  for (const auto& [key, value] : two.values) {
    if (key == "residual_n1") {
      saw_n1 = true;
      CHECK(std::abs(value - kInvSqrt2) <= 1e-12);
    }
  }
  CHECK(saw_n1);

  TheoremCheck cloning = check_no_cloning(m);
  CHECK(cloning.holds);
  // the overlap sweep admits copies only at the aligned and orthogonal ends
  int clonable = 0;
  for (const auto& [key, value] : cloning.values) {
    if (key.rfind("clonable_at_", 0) == 0 && value == 1.0) ++clonable;
  }
  CHECK(clonable == 2);
}
