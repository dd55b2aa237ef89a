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

#include "ctk/superinfo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk::superinfo {

using oracles::OracleConfig;
using oracles::Verdict;
using oracles::VerdictKind;

namespace {

std::vector<std::string> set_intersection(const std::vector<std::string>& a,
                                          const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<std::string> set_difference(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string kind_fact(const Verdict& v) {
  std::string s = oracles::verdict_kind_name(v.kind);
  if (v.certificate) {
    s += " (";
    s += oracles::certificate_kind_name(v.certificate->kind);
    s += ")";
  }
  return s;
}

}  // namespace

Medium standard_qubit_medium(const Tolerances& tol) {
  SubstratePtr q = Substrate::quantum("q", 2);
  const double r = 1.0 / std::sqrt(2.0);
  cvec e0 = basis_vector(q, 0);
  cvec e1 = basis_vector(q, 1);
  auto ray = [&](const cvec& v, const std::string& label) {
    return Attribute::single_ray(q, v, label, tol.tau_ray).with_flags(true, false);
  };
  Variable z({ray(e0, "0"), ray(e1, "1")}, {"0", "1"}, "z", tol);
  Variable x({ray(r * (e0 + e1), "+"), ray(r * (e0 - e1), "-")}, {"+", "-"}, "x", tol);
  return Medium{q, z, x, {ray(e0, "blank")}};
}

DetectionReport detect_superinformation(const std::vector<Variable>& candidates,
                                        const std::vector<Attribute>& blanks,
                                        const OracleConfig& cfg) {
  DetectionReport report;
  std::vector<std::optional<Verdict>> cache(candidates.size());
  auto member_check = [&](size_t i) -> const Verdict& {
    if (!cache[i]) cache[i] = info::is_information_variable(candidates[i], blanks, cfg);
    return *cache[i];
  };

  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if (!same_substrate(candidates[i].substrate(), candidates[j].substrate())) continue;
      if (member_check(i).kind != VerdictKind::Possible) continue;
      if (member_check(j).kind != VerdictKind::Possible) continue;
      std::vector<Attribute> merged = candidates[i].attributes();
      for (const auto& a : candidates[j].attributes()) merged.push_back(a);
      std::optional<Variable> united;
      try {
        united.emplace(merged, std::vector<std::string>{}, "", cfg.tol);
      } catch (const Error&) {
        report.note = "a candidate pair shares states, so their union is no variable";
        continue;
      }
      Verdict u = info::is_information_variable(*united, blanks, cfg);
      if (u.kind == VerdictKind::Impossible) {
        report.found = true;
        report.first = static_cast<int>(i);
        report.second = static_cast<int>(j);
        report.first_check = member_check(i);
        report.second_check = member_check(j);
        report.union_check = std::move(u);
        return report;
      }
      if (u.kind == VerdictKind::Unknown) {
        report.note = "a union check stayed undecided";
      }
    }
  }
  if (report.note.empty()) report.note = "every union stayed an information variable";
  return report;
}

std::optional<MemberPair> find_indistinguishable_pair(const Variable& x, const Variable& y,
                                                      const OracleConfig& cfg) {
  for (size_t i = 0; i < x.size(); ++i) {
    for (size_t j = 0; j < y.size(); ++j) {
      const Attribute& a = x.attributes()[i];
      const Attribute& b = y.attributes()[j];
      if (a.is_empty() || b.is_empty()) continue;
      if (!attributes_disjoint(a, b, cfg.tol)) continue;
      Verdict v = info::is_distinguishable(Variable({a, b}, {}, "", cfg.tol), cfg);
      if (v.kind == VerdictKind::Impossible) {
        MemberPair pair;
        pair.first_member = static_cast<int>(i);
        pair.second_member = static_cast<int>(j);
        pair.overlap = a.classical_kind()
                           ? 1.0
                           : max_principal_cosine(a.span_basis(cfg.tol.tau_rank),
                                                  b.span_basis(cfg.tol.tau_rank));
        pair.verdict = std::move(v);
        return pair;
      }
    }
  }
  return std::nullopt;
}

UnpredictabilityCertificate unpredictability_certificate(const Variable& x, const Attribute& y,
                                                         const Tolerances& tol) {
  if (!same_substrate(x.substrate(), y.substrate())) {
    throw Error(ErrorCode::KindMismatch, "the variable and the state share no substrate");
  }
  std::vector<double> weights(x.size(), 0.0);
  if (y.classical_kind()) {
    if (y.is_empty()) {
      throw Error(ErrorCode::PreconditionFailed, "an empty attribute predicts nothing");
    }
    for (size_t i = 0; i < x.size(); ++i) {
      weights[i] = static_cast<double>(
                       set_intersection(y.states(), x.attributes()[i].states()).size()) /
                   static_cast<double>(y.states().size());
    }
  } else {
    if (y.body() == Attribute::Body::Subspace || y.cardinality() != 1) {
      throw Error(ErrorCode::PreconditionFailed,
                  "unpredictability talks about a single state");
    }
    const cvec& psi = y.rays().front();
    for (size_t i = 0; i < x.size(); ++i) {
      if (x.attributes()[i].is_empty()) continue;
      cmat basis = x.attributes()[i].span_basis(tol.tau_rank);
      weights[i] = (basis.adjoint() * psi).squaredNorm();
    }
  }

  UnpredictabilityCertificate cert{{}, {}, Attribute::empty(y.substrate())};
  std::vector<Attribute> support_members;
  for (size_t i = 0; i < x.size(); ++i) {
    if (weights[i] > tol.tau_sharp) {
      cert.support.push_back(i);
      support_members.push_back(x.attributes()[i]);
    }
  }
  if (cert.support.size() < 2) {
    throw Error(ErrorCode::PreconditionFailed,
                "the outcome is sharp: a single member carries all the weight");
  }
  cert.weights = std::move(weights);
  cert.chi = attribute_union(support_members, tol);

  if (y.classical_kind()) {
    if (!attribute_subset(y, cert.chi, tol)) {
      throw Error(ErrorCode::PreconditionFailed, "part of the state escapes the variable");
    }
  } else {
    cmat chi_span = cert.chi.span_basis(tol.tau_rank);
    if (!span_contains(chi_span, y.rays().front(), tol.tau_rank)) {
      throw Error(ErrorCode::PreconditionFailed, "part of the state escapes the variable");
    }
  }
  for (const auto& member : x.attributes()) {
    if (!member.is_empty() && attribute_subset(y, member, tol)) {
      throw Error(ErrorCode::PreconditionFailed, "the state sits inside one member");
    }
  }
  return cert;
}

Task perturbation_task(const Variable& x, const Attribute& y, const Tolerances& tol) {
  if (!same_substrate(x.substrate(), y.substrate())) {
    throw Error(ErrorCode::KindMismatch, "the variable and the state share no substrate");
  }
  const SubstratePtr& sub = x.substrate();
  const size_t n = x.size();

  size_t meeting = 0;
  for (const auto& member : x.attributes()) {
    if (member.classical_kind()) {
      if (!set_intersection(y.states(), member.states()).empty()) ++meeting;
    } else if (!member.is_empty() && !y.is_empty()) {
      if (max_principal_cosine(member.span_basis(tol.tau_rank),
                               y.span_basis(tol.tau_rank)) > tol.tau_rank) {
        ++meeting;
      }
    }
  }
  if (meeting < 2) {
    throw Error(ErrorCode::PreconditionFailed,
                "the state meets fewer than two members, so measuring cannot disturb it");
  }

  SubstratePtr pointer;
  const int dp = static_cast<int>(n) + 1;
  if (sub->classical_kind()) {
    std::vector<std::string> labels;
    for (int i = 0; i < dp; ++i) labels.push_back(std::to_string(i));
    pointer = Substrate::classical(sub->id() + "_ptr", labels);
  } else {
    pointer = Substrate::quantum(sub->id() + "_ptr", dp);
  }
  auto marks = info::pointer_targets(pointer, static_cast<size_t>(dp), tol);
  const Attribute& ready = marks[0];

  std::vector<TaskPair> pairs;
  if (sub->classical_kind()) {
    // Split each member against the state set, so the task itself pins every
    // state of `y` inside `y`.
    for (size_t i = 0; i < n; ++i) {
      const auto& member = x.attributes()[i].states();
      auto inside = set_intersection(member, y.states());
      auto outside = set_difference(member, y.states());
      if (!inside.empty()) {
        pairs.push_back({product_attribute({Attribute::state_set(sub, inside), ready}, tol),
                         product_attribute({Attribute::state_set(sub, inside), marks[i + 1]},
                                           tol)});
      }
      if (!outside.empty()) {
        pairs.push_back({product_attribute({Attribute::state_set(sub, outside), ready}, tol),
                         product_attribute({Attribute::state_set(sub, outside), marks[i + 1]},
                                           tol)});
      }
    }
  } else {
    for (size_t i = 0; i < n; ++i) {
      pairs.push_back({product_attribute({x.attributes()[i], ready}, tol),
                       product_attribute({x.attributes()[i], marks[i + 1]}, tol)});
    }
    pairs.push_back({product_attribute({y, ready}, tol),
                     product_attribute({y, info::full_attribute(pointer, tol)}, tol)});
  }
  return Task(std::move(pairs), tol);
}

AgreementResult consecutive_measurements(const Variable& x, const Attribute& y,
                                         const OracleConfig& cfg) {
  const Tolerances& tol = cfg.tol;
  const SubstratePtr& sub = x.substrate();
  if (sub->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "the agreement network is a quantum circuit");
  }
  const int d = sub->size();
  if (static_cast<int>(x.size()) != d) {
    throw Error(ErrorCode::ValidationError, "the network measures a maximal basis variable");
  }
  for (int i = 0; i < d; ++i) {
    const Attribute& m = x.attributes()[i];
    if (m.body() == Attribute::Body::Subspace || m.cardinality() != 1 ||
        !same_ray(m.rays().front(), basis_vector(sub, i), tol.tau_ray)) {
      throw Error(ErrorCode::ValidationError, "the network measures a maximal basis variable");
    }
  }
  if (y.classical_kind() || y.body() == Attribute::Body::Subspace || y.cardinality() != 1) {
    throw Error(ErrorCode::ValidationError, "the probed state must be a single ray");
  }
  const cvec psi = y.rays().front();

  std::vector<int> fixed, moved;
  for (int i = 0; i < d; ++i) {
    if (std::abs(psi(i)) > tol.tau_rank) {
      fixed.push_back(i);
    } else {
      moved.push_back(i);
    }
  }
  if (moved.size() == 1) {
    throw Error(ErrorCode::NoFixedPointFreePermutation,
                "one leftover member admits no fixed-point-free shuffle");
  }
  std::vector<int> images(d);
  for (int i : fixed) images[i] = i;
  for (size_t k = 0; k < moved.size(); ++k) images[moved[k]] = moved[(k + 1) % moved.size()];

  SubstratePtr first_ptr = Substrate::quantum(sub->id() + "_m1", d);
  SubstratePtr second_ptr = Substrate::quantum(sub->id() + "_m2", d);
  SubstratePtr flag = Substrate::quantum(sub->id() + "_r", 2);
  auto s_rays = info::pointer_targets(sub, static_cast<size_t>(d), tol);
  auto m1_rays = info::pointer_targets(first_ptr, static_cast<size_t>(d), tol);
  auto m2_rays = info::pointer_targets(second_ptr, static_cast<size_t>(d), tol);
  auto flags = info::pointer_targets(flag, 2, tol);
  const Attribute& flag_false = flags[0];
  const Attribute& flag_true = flags[1];

  Network net;
  NetworkNode record1{"record1", {"s", "m1"}, {sub, first_ptr}, {}};
  NetworkNode shuffle{"shuffle", {"s"}, {sub}, {}};
  NetworkNode record2{"record2", {"s", "m2"}, {sub, second_ptr}, {}};
  NetworkNode compare{"compare", {"m1", "m2", "r"}, {first_ptr, second_ptr, flag}, {}};
  for (int i = 0; i < d; ++i) {
    record1.pairs.push_back({{s_rays[i], m1_rays[0]}, {s_rays[i], m1_rays[i]}});
    shuffle.pairs.push_back({{s_rays[i]}, {s_rays[images[i]]}});
    record2.pairs.push_back({{s_rays[i], m2_rays[0]}, {s_rays[i], m2_rays[i]}});
  }
  for (int v = 0; v < d; ++v) {
    for (int w = 0; w < d; ++w) {
      compare.pairs.push_back(
          {{m1_rays[v], m2_rays[w], flag_false},
           {m1_rays[v], m2_rays[w], v == w ? flag_true : flag_false}});
    }
  }
  net.nodes = {record1, shuffle, record2, compare};
  net.edges = {{0, 1, "s"}, {1, 2, "s"}, {0, 3, "m1"}, {2, 3, "m2"}};

  Task flattened = validate_network(net, tol);

  sim::StateVector state = sim::StateVector::product(
      {d, d, d, 2}, {psi, basis_vector(first_ptr, 0), basis_vector(second_ptr, 0),
                     basis_vector(flag, 0)});
  sim::apply_unitary(state, sim::controlled_shift(d, d), {0, 1});
  sim::apply_unitary(state, sim::permutation_matrix(images), {0});
  sim::apply_unitary(state, sim::controlled_shift(d, d), {0, 2});
  sim::apply_unitary(state, sim::comparator(d), {1, 2, 3});

  AgreementResult result{std::move(net), std::move(flattened), false, false,
                         false,          {},                   {},    {}};
  auto flag_outcome = sim::sharp_outcome(state, {3}, tol.tau_sharp);
  result.record_sharp_true = flag_outcome.has_value() && *flag_outcome == 1;
  result.first_record_sharp = sim::sharp_outcome(state, {1}, tol.tau_sharp).has_value();
  result.second_record_sharp = sim::sharp_outcome(state, {2}, tol.tau_sharp).has_value();
  result.first_weights = sim::marginal_weights(state, {1});
  result.second_weights = sim::marginal_weights(state, {2});
  result.final_state = state.amplitudes;
  return result;
}

Verdict coherence_check(const Task& task, const OracleConfig& cfg) {
  if (!task.substrate()->classical_kind()) {
    return oracles::quantum_possible(task, oracles::SideEffects::Off, cfg);
  }

  // A coherent classical realization is an injective transition: match every
  // occupied input state to a distinct state inside an output offered for it.
  std::vector<std::string> left;
  std::vector<std::vector<std::string>> allowed;
  for (const auto& p : task.pairs()) {
    for (const auto& s : p.input.states()) {
      size_t idx = 0;
      for (; idx < left.size(); ++idx) {
        if (left[idx] == s) break;
      }
      if (idx == left.size()) {
        left.push_back(s);
        allowed.emplace_back();
      }
      for (const auto& t : p.output.states()) allowed[idx].push_back(t);
    }
  }

  std::map<std::string, int> owner;
  std::vector<int> match(left.size(), -1);
  std::function<bool(size_t, std::set<size_t>&)> augment = [&](size_t i,
                                                               std::set<size_t>& seen) {
    for (const auto& t : allowed[i]) {
      auto it = owner.find(t);
      if (it == owner.end()) {
        owner[t] = static_cast<int>(i);
        return true;
      }
      size_t other = static_cast<size_t>(it->second);
      if (other == i || seen.count(other)) continue;
      seen.insert(other);
      if (augment(other, seen)) {
        owner[t] = static_cast<int>(i);
        return true;
      }
    }
    return false;
  };

  for (size_t i = 0; i < left.size(); ++i) {
    std::set<size_t> seen{i};
    if (!augment(i, seen)) {
      Verdict v;
      v.kind = VerdictKind::Impossible;
      std::ostringstream note;
      note << "state \"" << left[i] << "\" cannot keep a distinct image: merging is forced";
      v.note = note.str();
      return v;
    }
  }
  oracles::ClassicalWitness witness;
  for (const auto& [t, i] : owner) witness.transition[left[static_cast<size_t>(i)]] = t;
  Verdict v;
  v.kind = VerdictKind::Possible;
  v.classical_witness = std::move(witness);
  v.note = "injective transition found";
  return v;
}

TheoremCheck check_indistinguishable_members(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.1";
  auto pair = find_indistinguishable_pair(medium.x, medium.y, cfg);
  check.holds = pair.has_value();
  if (pair) {
    check.values.push_back({"overlap", pair->overlap});
    check.facts.push_back({"members", medium.x.labels()[pair->first_member] + " vs " +
                                          medium.y.labels()[pair->second_member]});
    check.facts.push_back({"verdict", kind_fact(pair->verdict)});
  }
  return check;
}

TheoremCheck check_ensemble_distinguishable(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.2";
  const Tolerances& tol = cfg.tol;

  auto slots = info::pointer_targets(medium.substrate, 2, tol);
  std::vector<TaskPair> pairs;
  for (const auto& a : medium.x.attributes()) pairs.push_back({a, slots[0]});
  for (const auto& b : medium.y.attributes()) pairs.push_back({b, slots[1]});
  Verdict single = oracles::possible_with_side_effects(Task(std::move(pairs), tol), cfg);

  Attribute ux = medium.x.united(tol);
  Attribute uy = medium.y.united(tol);
  Verdict limit = info::ensemble_distinguishable({ux, uy}, cfg);

  check.holds = single.kind == VerdictKind::Impossible &&
                limit.kind == VerdictKind::PossibleInLimit;
  check.facts.push_back({"single_shot", kind_fact(single)});
  check.facts.push_back({"in_the_limit", kind_fact(limit)});
  if (!limit.probe_residuals.empty()) {
    check.values.push_back({"residual_n1", limit.probe_residuals.front()});
    if (limit.probe_residuals.size() >= 20) {
      check.values.push_back({"residual_n20", limit.probe_residuals[19]});
    }
  }
  return check;
}

TheoremCheck check_no_cloning(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.3";
  const Tolerances& tol = cfg.tol;

  std::vector<Attribute> mixed = {medium.x.attributes()[0], medium.y.attributes()[0]};
  Verdict pairwise = info::is_clonable(mixed, medium.blanks, cfg);
  bool pair_blocked = pairwise.kind == VerdictKind::Impossible;
  check.facts.push_back({"mixed_pair", kind_fact(pairwise)});

  // Overlap sweep: exactly the aligned (c = 1) and orthogonal (c = 0) pairs
  // admit copies.
  bool sweep_matches = true;
  SubstratePtr q = medium.substrate->classical_kind() ? Substrate::quantum("sweep", 2)
                                                      : medium.substrate;
  cvec e0 = basis_vector(q, 0);
  cvec e1 = basis_vector(q, 1);
  Attribute blank = Attribute::single_ray(q, e0, "", tol.tau_ray).with_flags(true, false);
  for (int step = 0; step <= 10; ++step) {
    const double c = step / 10.0;
    cvec other = c * e0 + std::sqrt(std::max(0.0, 1.0 - c * c)) * e1;
    std::vector<Attribute> attrs = {Attribute::single_ray(q, e0, "", tol.tau_ray),
                                    Attribute::single_ray(q, other, "", tol.tau_ray)};
    Verdict v = info::is_clonable(attrs, {blank}, cfg);
    const bool expected = step == 0 || step == 10;
    if ((v.kind == VerdictKind::Possible) != expected) sweep_matches = false;
    check.values.push_back({"clonable_at_" + std::to_string(step),
                            v.kind == VerdictKind::Possible ? 1.0 : 0.0});
  }
  check.holds = pair_blocked && sweep_matches;
  return check;
}

TheoremCheck check_no_joint_measurement(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.4";
  const Tolerances& tol = cfg.tol;

  bool pairwise_disjoint = true;
  for (const auto& a : medium.x.attributes()) {
    for (const auto& b : medium.y.attributes()) {
      if (!attributes_disjoint(a, b, tol)) pairwise_disjoint = false;
    }
  }

  std::vector<Attribute> merged = medium.x.attributes();
  for (const auto& b : medium.y.attributes()) merged.push_back(b);
  Verdict joint = info::is_distinguishable(Variable(merged, {}, "", tol), cfg);
  check.facts.push_back({"joint_readout", kind_fact(joint)});

  // Classical contrast: partitions always refine to one jointly readable
  // variable.
  SubstratePtr c4 = Substrate::classical("c4", 4);
  auto space = c4->state_space();
  Variable coarse_a({Attribute::state_set(c4, {space[0], space[1]}),
                     Attribute::state_set(c4, {space[2], space[3]})},
                    {}, "", tol);
  Variable coarse_b({Attribute::state_set(c4, {space[0], space[2]}),
                     Attribute::state_set(c4, {space[1], space[3]})},
                    {}, "", tol);
  std::vector<Attribute> refined;
  for (const auto& a : coarse_a.attributes()) {
    for (const auto& b : coarse_b.attributes()) {
      auto common = set_intersection(a.states(), b.states());
      if (!common.empty()) refined.push_back(Attribute::state_set(c4, common));
    }
  }
  Verdict classical = info::is_distinguishable(Variable(refined, {}, "", tol), cfg);
  check.facts.push_back({"classical_refinement", kind_fact(classical)});

  check.holds = pairwise_disjoint && joint.kind == VerdictKind::Impossible &&
                classical.kind == VerdictKind::Possible;
  return check;
}

TheoremCheck check_unpredictability(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.5";
  const Tolerances& tol = cfg.tol;
  const Attribute& probe = medium.y.attributes()[0];

  bool certified = false;
  try {
    auto cert = unpredictability_certificate(medium.x, probe, tol);
    certified = cert.support.size() >= 2;
    double total = 0.0;
    for (size_t i = 0; i < cert.weights.size(); ++i) {
      check.values.push_back({"weight_" + std::to_string(i), cert.weights[i]});
      total += cert.weights[i];
    }
    certified = certified && std::abs(total - 1.0) <= 1e-9;
  } catch (const Error& e) {
    check.facts.push_back({"probe", e.what()});
  }

  bool sharp_rejected = false;
  try {
    unpredictability_certificate(medium.x, medium.x.attributes()[0], tol);
  } catch (const Error& e) {
    sharp_rejected = e.code() == ErrorCode::PreconditionFailed;
  }
  check.facts.push_back({"sharp_probe_rejected", sharp_rejected ? "yes" : "no"});
  check.holds = certified && sharp_rejected;
  return check;
}

TheoremCheck check_perturbation(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.6";
  const Tolerances& tol = cfg.tol;

  Task quantum = perturbation_task(medium.x, medium.y.attributes()[0], tol);
  Verdict qv = oracles::possible_with_side_effects(quantum, cfg);
  check.facts.push_back({"quantum", kind_fact(qv)});

  SubstratePtr c2 = Substrate::classical("c2", 2);
  auto space = c2->state_space();
  Variable cx({Attribute::state_set(c2, {space[0]}), Attribute::state_set(c2, {space[1]})},
              {}, "", tol);
  Attribute cy = Attribute::state_set(c2, space);
  Verdict cv = oracles::possible(perturbation_task(cx, cy, tol), cfg);
  check.facts.push_back({"classical", kind_fact(cv)});

  check.holds = qv.kind == VerdictKind::Impossible && qv.certificate &&
                qv.certificate->kind == oracles::CertificateKind::UnitNormConflict &&
                cv.kind == VerdictKind::Possible;
  return check;
}

TheoremCheck check_consecutive_agreement(const Medium& medium, const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.7";
  const Tolerances& tol = cfg.tol;

  AgreementResult two = consecutive_measurements(medium.x, medium.y.attributes()[0], cfg);
  check.facts.push_back({"records_agree", two.record_sharp_true ? "yes" : "no"});
  check.facts.push_back(
      {"first_record_sharp", two.first_record_sharp ? "yes" : "no"});
  for (size_t i = 0; i < two.first_weights.size(); ++i) {
    check.values.push_back({"first_record_weight_" + std::to_string(i), two.first_weights[i]});
  }

  // Same story on four levels, where the in-between shuffle must genuinely
  // move the two untouched members.
  SubstratePtr s4 = Substrate::quantum("s4", 4);
  auto rays = info::pointer_targets(s4, 4, tol);
  Variable basis(
      {rays[0], rays[1], rays[2], rays[3]}, {"0", "1", "2", "3"}, "levels", tol);
  cvec half = (basis_vector(s4, 0) + basis_vector(s4, 1)) / std::sqrt(2.0);
  Attribute probe = Attribute::single_ray(s4, half, "probe", tol.tau_ray);
  AgreementResult four = consecutive_measurements(basis, probe, cfg);
  check.facts.push_back({"four_level_records_agree", four.record_sharp_true ? "yes" : "no"});

  check.holds = two.record_sharp_true && !two.first_record_sharp &&
                !two.second_record_sharp && four.record_sharp_true &&
                !four.first_record_sharp;
  return check;
}

TheoremCheck check_locally_inaccessible(const OracleConfig& cfg) {
  TheoremCheck check;
  check.id = "8.9";
  const Tolerances& tol = cfg.tol;
  const double r = 1.0 / std::sqrt(2.0);

  SubstratePtr a1 = Substrate::quantum("a1", 2);
  SubstratePtr a2 = Substrate::quantum("a2", 2);
  SubstratePtr both = Substrate::compose({a1, a2});
  auto basis = info::pointer_targets(both, 4, tol);
  cvec b00 = basis_vector(both, 0), b01 = basis_vector(both, 1);
  cvec b10 = basis_vector(both, 2), b11 = basis_vector(both, 3);

  auto ray = [&](const cvec& v, const std::string& label) {
    return Attribute::single_ray(both, v, label, tol.tau_ray);
  };
  cvec psi1 = r * (b00 + b11);
  cvec psi2 = r * (b01 + b10);
  cvec psi3 = r * (b00 - b11);
  cvec psi4 = r * (b01 - b10);

  Task controlled_not({{basis[0], basis[0]},
                       {basis[1], basis[1]},
                       {basis[2], basis[3]},
                       {basis[3], basis[2]}},
                      tol);
  Task entangler({{basis[0], ray(psi1, "psi1")},
                  {basis[1], ray(psi2, "psi2")},
                  {basis[2], ray(psi3, "psi3")},
                  {basis[3], ray(psi4, "psi4")}},
                 tol);

  Verdict coh_cnot = coherence_check(controlled_not, cfg);
  Verdict coh_ent = coherence_check(entangler, cfg);
  check.facts.push_back({"first_gate_coherent", kind_fact(coh_cnot)});
  check.facts.push_back({"second_gate_coherent", kind_fact(coh_ent)});

  bool extension_ok = true;
  try {
    cmat u = sim::unitary_extension({b00, b01, b10, b11}, {psi1, psi2, psi3, psi4},
                                    tol.tau_rank);
    extension_ok = (u * b00 - psi1).norm() <= 1e-8;
  } catch (const Error&) {
    extension_ok = false;
  }
  check.facts.push_back({"unitary_extension", extension_ok ? "closed" : "failed"});

  cvec plus0 = kron(r * (basis_vector(a1, 0) + basis_vector(a1, 1)), basis_vector(a2, 0));
  cvec minus0 = kron(r * (basis_vector(a1, 0) - basis_vector(a1, 1)), basis_vector(a2, 0));
  Attribute blank = basis[0].with_flags(true, false);
  Variable c_var({basis[1], basis[3], ray(plus0, "+0"), ray(minus0, "-0")},
                 {"01", "11", "+0", "-0"}, "c", tol);
  Variable d_var({basis[1], basis[2], ray(psi1, "psi1"), ray(psi3, "psi3")},
                 {"01", "10", "psi1", "psi3"}, "d", tol);
  Verdict c_check = info::is_information_variable(c_var, {blank}, cfg);
  Verdict d_check = info::is_information_variable(d_var, {blank}, cfg);
  check.facts.push_back({"c_variable", kind_fact(c_check)});
  check.facts.push_back({"d_variable", kind_fact(d_check)});

  const double o00 = std::abs(overlap(psi1, b00));
  const double o11 = std::abs(overlap(psi1, b11));
  check.values.push_back({"overlap_psi1_00", o00});
  check.values.push_back({"overlap_psi1_11", o11});
  bool spread = std::abs(o00 - r) <= 1e-12 && std::abs(o11 - r) <= 1e-12 && o00 > 1e-12;

  std::vector<TaskPair> merged = controlled_not.pairs();
  for (const auto& p : entangler.pairs()) merged.push_back(p);
  Task free_choice(merged, tol);
  Verdict union_check = oracles::quantum_possible(free_choice, oracles::SideEffects::Off, cfg);
  Verdict gate1_rev = oracles::quantum_possible(transpose(controlled_not, tol),
                                                oracles::SideEffects::Off, cfg);
  Verdict gate2_rev = oracles::quantum_possible(transpose(entangler, tol),
                                                oracles::SideEffects::Off, cfg);
  // Undoing the choice coherently would reveal which gate acted; with the
  // branch outputs 00 and psi1 both sent back over 00, that is a merge.
  Verdict union_rev = oracles::quantum_possible(transpose(free_choice, tol),
                                                oracles::SideEffects::Off, cfg);
  check.facts.push_back({"either_gate", kind_fact(union_check)});
  check.facts.push_back({"first_gate_reversed", kind_fact(gate1_rev)});
  check.facts.push_back({"second_gate_reversed", kind_fact(gate2_rev)});
  check.facts.push_back({"union_reversed", kind_fact(union_rev)});

  check.holds = coh_cnot.kind == VerdictKind::Possible &&
                coh_ent.kind == VerdictKind::Possible && extension_ok &&
                c_check.kind == VerdictKind::Possible &&
                d_check.kind == VerdictKind::Possible && spread &&
                union_check.kind == VerdictKind::Possible &&
                gate1_rev.kind == VerdictKind::Possible &&
                gate2_rev.kind == VerdictKind::Possible &&
                union_rev.kind == VerdictKind::Impossible;
  return check;
}

TheoremCheck check_theorem(const std::string& id, const OracleConfig& cfg) {
  Medium medium = standard_qubit_medium(cfg.tol);
  if (id == "8.1") return check_indistinguishable_members(medium, cfg);
  if (id == "8.2") return check_ensemble_distinguishable(medium, cfg);
  if (id == "8.3") return check_no_cloning(medium, cfg);
  if (id == "8.4") return check_no_joint_measurement(medium, cfg);
  if (id == "8.5") return check_unpredictability(medium, cfg);
  if (id == "8.6") return check_perturbation(medium, cfg);
  if (id == "8.7") return check_consecutive_agreement(medium, cfg);
  if (id == "8.9") return check_locally_inaccessible(cfg);
  throw Error(ErrorCode::ValidationError, "unknown section id: " + id);
}

}  // namespace ctk::superinfo
