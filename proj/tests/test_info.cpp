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
#include "ctk/info.hpp"

using namespace ctk;
using namespace ctk::info;
using oracles::CertificateKind;
using oracles::Verdict;
using oracles::VerdictKind;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;

Attribute labels(const SubstratePtr& s, std::vector<std::string> states) {
  return Attribute::state_set(s, std::move(states));
}

Attribute ray(const SubstratePtr& s, const cvec& v) {
  return Attribute::single_ray(s, v);
}

struct QubitRig {
  SubstratePtr q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0);
  cvec e1 = basis_vector(q, 1);
  cvec plus = kInvSqrt2 * (e0 + e1);
  cvec minus = kInvSqrt2 * (e0 - e1);
  Attribute blank = ray(q, e0).with_flags(true, false);

  Variable z() const { return Variable({ray(q, e0), ray(q, e1)}, {"0", "1"}); }
  Variable x() const { return Variable({ray(q, plus), ray(q, minus)}, {"+", "-"}); }
};

}  // namespace

TEST_CASE("distinguishing maps members onto canonical targets") {
  QubitRig rig;
  auto task = distinguish_task(rig.z());
  REQUIRE(task.has_value());
  REQUIRE(task->pairs().size() == 2);
  auto targets = pointer_targets(rig.q, 2, {});
  CHECK(attribute_equal(task->pairs()[0].output, targets[0]));
  CHECK(attribute_equal(task->pairs()[1].output, targets[1]));

  CHECK(is_distinguishable(rig.z()).kind == VerdictKind::Possible);
  CHECK(is_distinguishable(rig.x()).kind == VerdictKind::Possible);

  Variable skew({ray(rig.q, rig.e0), ray(rig.q, rig.plus)});
  CHECK(is_distinguishable(skew).kind == VerdictKind::Impossible);
}

TEST_CASE("more occupied members than dimensions is hopeless by counting") {
  QubitRig rig;
  Variable three({ray(rig.q, rig.e0), ray(rig.q, rig.e1), ray(rig.q, rig.plus)});
  CHECK_FALSE(distinguish_task(three).has_value());
  auto v = is_distinguishable(three);
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::ForcedOrthogonality);
  REQUIRE_FALSE(v.certificate->values.empty());
  CHECK(std::abs(v.certificate->values.front() - kInvSqrt2) <= 1e-12);
}

TEST_CASE("empty members ride along without disturbing the alignment") {
  auto t = Substrate::classical("t", 3);
  Variable with_gap({labels(t, {"0"}), Attribute::empty(t), labels(t, {"1", "2"})});
  auto task = distinguish_task(with_gap);
  REQUIRE(task.has_value());
  REQUIRE(task->pairs().size() == 3);
  CHECK(task->pairs()[1].input.is_empty());
  CHECK(is_distinguishable(with_gap).kind == VerdictKind::Possible);
}

TEST_CASE("ensembles pool members that one shot cannot separate") {
  QubitRig rig;
  CHECK(ensemble_distinguishable({ray(rig.q, rig.e0), ray(rig.q, rig.e1)}).kind ==
        VerdictKind::Possible);
  Verdict v = ensemble_distinguishable({ray(rig.q, rig.e0), ray(rig.q, rig.plus)});
  CHECK(v.kind == VerdictKind::PossibleInLimit);
  REQUIRE_FALSE(v.probe_residuals.empty());
  CHECK(std::abs(v.probe_residuals.front() - kInvSqrt2) <= 1e-15);
}

TEST_CASE("perp pairs are disjoint and separable") {
  QubitRig rig;
  CHECK(perp(ray(rig.q, rig.e0), ray(rig.q, rig.e1)).kind == VerdictKind::Possible);
  CHECK(perp(ray(rig.q, rig.e0), ray(rig.q, rig.plus)).kind == VerdictKind::Impossible);

  auto t = Substrate::classical("t", 3);
  CHECK(perp(labels(t, {"0"}), labels(t, {"1", "2"})).kind == VerdictKind::Possible);
  Verdict shared = perp(labels(t, {"0", "1"}), labels(t, {"1"}));
  CHECK(shared.kind == VerdictKind::Impossible);
  CHECK(shared.note.find("share") != std::string::npos);
  CHECK(perp(Attribute::empty(t), labels(t, {"0"})).kind == VerdictKind::Possible);
}

TEST_CASE("the bar is the relative complement") {
  auto t = Substrate::classical("t", 3);
  Attribute a = labels(t, {"0"});
  CHECK(attribute_equal(bar(a), labels(t, {"1", "2"})));
  CHECK(attribute_equal(bar_bar(a), a));
  CHECK(bar_closed(a));

  QubitRig rig;
  Attribute z0 = ray(rig.q, rig.e0);
  CHECK(attribute_equal(bar(z0), ray(rig.q, rig.e1)));
  CHECK(bar_closed(z0));

  // two rays span the plane, so their closure is the whole plane
  Attribute two = Attribute::ray_set(rig.q, {rig.e0, rig.plus});
  CHECK_FALSE(bar_closed(two));
  CHECK(bar(two).is_empty());
  cmat whole(2, 2);
  whole << 1, 0, 0, 1;
  CHECK(attribute_equal(bar_bar(two), Attribute::subspace(rig.q, whole)));
}

TEST_CASE("boolean variables carry the yes and the no side") {
  auto t = Substrate::classical("t", 3);
  Variable b = boolean_variable(labels(t, {"1"}));
  CHECK(b.labels() == std::vector<std::string>{"true", "false"});
  CHECK(attribute_equal(b.attributes()[1], labels(t, {"0", "2"})));
  CHECK(is_maximal(b));

  QubitRig rig;
  Variable zb = boolean_variable(ray(rig.q, rig.e0));
  CHECK(attribute_equal(zb.attributes()[1], ray(rig.q, rig.e1)));
  CHECK(is_maximal(zb));
  CHECK_FALSE(is_maximal(Variable({ray(rig.q, rig.e0)})));
}

TEST_CASE("observables are distinguishable variables of closed members") {
  QubitRig rig;
  CHECK(is_observable(rig.z()).kind == VerdictKind::Possible);

  Variable open_member({Attribute::ray_set(rig.q, {rig.e0, rig.e1})});
  Verdict v = is_observable(open_member);
  CHECK(v.kind == VerdictKind::Impossible);
  CHECK(v.note.find("closed") != std::string::npos);
}

TEST_CASE("cloning tasks copy onto a prepared blank") {
  QubitRig rig;
  Task copy = cloning_task({ray(rig.q, rig.e0), ray(rig.q, rig.e1)}, rig.blank);
  REQUIRE(copy.pairs().size() == 2);
  CHECK(copy.substrate()->size() == 4);
  // second pair: e1 (x) blank -> e1 (x) e1
  auto big = copy.substrate();
  CHECK(attribute_equal(copy.pairs()[1].input, ray(big, kron(rig.e1, rig.e0))));
  CHECK(attribute_equal(copy.pairs()[1].output, ray(big, kron(rig.e1, rig.e1))));

  CHECK_THROWS_AS(cloning_task({ray(rig.q, rig.e0)}, ray(rig.q, rig.e0)), Error);
}

TEST_CASE("clonability separates bases from skew pairs") {
  QubitRig rig;
  CHECK(is_clonable({ray(rig.q, rig.e0), ray(rig.q, rig.e1)}, {rig.blank}).kind ==
        VerdictKind::Possible);

  Verdict v = is_clonable({ray(rig.q, rig.e0), ray(rig.q, rig.plus)}, {rig.blank});
  REQUIRE(v.kind == VerdictKind::Impossible);
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->kind == CertificateKind::CloningGram);

  CHECK_THROWS_AS(is_clonable({ray(rig.q, rig.e0)}, {}), Error);

  auto t = Substrate::classical("t", 3);
  Attribute tblank = labels(t, {"0"}).with_flags(true, false);
  CHECK(is_clonable({labels(t, {"1"}), labels(t, {"2"})}, {tblank}).kind ==
        VerdictKind::Possible);
}

TEST_CASE("computation variables admit every permutation") {
  auto t = Substrate::classical("t", 3);
  Variable v({labels(t, {"0"}), labels(t, {"1"}), labels(t, {"2"})});
  Verdict c = is_computation_variable(v);
  CHECK(c.kind == VerdictKind::Possible);
  CHECK(c.note.find("6 permutations") != std::string::npos);

  QubitRig rig;
  CHECK(is_computation_variable(rig.z()).kind == VerdictKind::Possible);
  CHECK_THROWS_AS(is_computation_variable(Variable({ray(rig.q, rig.e0)})), Error);

  // a skew pair still permutes (the Hadamard swaps them), it only fails later
  // at cloning; computation alone is weaker than information
  Variable mixed({ray(rig.q, rig.e0), ray(rig.q, rig.plus)});
  CHECK(is_computation_variable(mixed).kind == VerdictKind::Possible);
  CHECK(is_information_variable(mixed, {rig.blank}).kind == VerdictKind::Impossible);
}

TEST_CASE("information variables are computation variables with copies") {
  QubitRig rig;
  CHECK(is_information_variable(rig.z(), {rig.blank}).kind == VerdictKind::Possible);
  CHECK(is_information_variable(rig.x(), {rig.blank}).kind == VerdictKind::Possible);

  Variable single({ray(rig.q, rig.e0)});
  CHECK(is_information_variable(single, {rig.blank}).kind == VerdictKind::Impossible);

  // the union of the two bases fails: its permutations are not all possible
  Variable both({ray(rig.q, rig.e0), ray(rig.q, rig.e1), ray(rig.q, rig.plus),
                 ray(rig.q, rig.minus)});
  CHECK(is_information_variable(both, {rig.blank}).kind == VerdictKind::Impossible);
}

TEST_CASE("capacity counts the canonical maximal variable") {
  CHECK(info_capacity(Substrate::classical("b", 2)).size == 2);
  CHECK(info_capacity(Substrate::classical("t", 3)).size == 3);
  auto qubit_cap = info_capacity(Substrate::quantum("q", 2));
  CHECK(qubit_cap.size == 2);
  CHECK(qubit_cap.computation.kind == VerdictKind::Possible);
  CHECK(qubit_cap.cloning.kind == VerdictKind::Possible);
  REQUIRE(qubit_cap.witness.has_value());
  CHECK(qubit_cap.witness->size() == 2);
  CHECK(info_capacity(Substrate::quantum("s3", 3)).size == 3);

  auto pair_cap = info_capacity(Substrate::compose(
      {Substrate::classical("u", 2), Substrate::classical("v", 3)}));
  CHECK(pair_cap.size == 6);
}

TEST_CASE("the canonical measurer records marks on a fresh pointer") {
  QubitRig rig;
  MeasurementSpec spec = canonical_measurer(rig.z());
  CHECK(spec.pointer->size() == 2);
  CHECK_FALSE(spec.pointer->classical_kind());
  CHECK(spec.pointer_ready.preparable());
  REQUIRE(spec.pointer_marks.size() == 2);
  CHECK(attributes_disjoint(spec.pointer_marks[0], spec.pointer_marks[1]));

  Task t = measurement_task(spec);
  CHECK(t.pairs().size() == 2);
  CHECK(t.substrate()->size() == 4);

  CHECK(is_non_perturbing(spec));
  CHECK(is_measurer_of(spec, rig.z()).kind == VerdictKind::Possible);
}

TEST_CASE("a measurer of one basis is no measurer of the other") {
  QubitRig rig;
  MeasurementSpec z_meter = canonical_measurer(rig.z());
  Verdict v = is_measurer_of(z_meter, rig.x());
  CHECK(v.kind == VerdictKind::Impossible);
  CHECK(v.note.find("no labelling") != std::string::npos);
}

TEST_CASE("classical measurers come out classical and sound") {
  auto t = Substrate::classical("t", 3);
  Variable v({labels(t, {"0"}), labels(t, {"1"}), labels(t, {"2"})});
  MeasurementSpec spec = canonical_measurer(v);
  CHECK(spec.pointer->classical_kind());
  CHECK(spec.pointer->size() == 3);
  CHECK(is_measurer_of(spec, v).kind == VerdictKind::Possible);
  CHECK(is_non_perturbing(spec));
}

TEST_CASE("boolean observables of quantum attributes") {
  QubitRig rig;
  Variable zb = boolean_variable(ray(rig.q, rig.e0));
  CHECK(is_observable(zb).kind == VerdictKind::Possible);
  // measuring it is a legitimate task
  MeasurementSpec spec = canonical_measurer(zb);
  CHECK(is_measurer_of(spec, zb).kind == VerdictKind::Possible);
}
