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

#include "ctk/principles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk::principles {

using oracles::OracleConfig;
using oracles::Verdict;
using oracles::VerdictKind;

namespace {

std::string kind_fact(const Verdict& v) {
  std::string s = oracles::verdict_kind_name(v.kind);
  if (v.certificate) {
    s += " (";
    s += oracles::certificate_kind_name(v.certificate->kind);
    s += ")";
  }
  return s;
}

PrincipleResult check_locality(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "II";
  const Tolerances& tol = cfg.tol;

  SubstratePtr p = Substrate::quantum("p", 2);
  SubstratePtr extra = Substrate::quantum("rr", 2);
  auto p_rays = info::pointer_targets(p, 2, tol);
  Task flip({{p_rays[0], p_rays[1]}, {p_rays[1], p_rays[0]}}, tol);
  Attribute whole = info::full_attribute(extra, tol);
  Task idle({{whole, whole}}, tol);

  Verdict alone = oracles::possible(flip, cfg);
  Verdict alongside = oracles::possible(parallel_compose(flip, idle, tol), cfg);
  result.facts.push_back({"flip_alone", kind_fact(alone)});
  result.facts.push_back({"flip_alongside_idle", kind_fact(alongside)});

  Attribute blank = p_rays[0].with_flags(true, false);
  const double c = std::sqrt(0.5);
  cvec tilted = c * basis_vector(p, 0) + c * basis_vector(p, 1);
  std::vector<Attribute> pair = {p_rays[0],
                                 Attribute::single_ray(p, tilted, "", tol.tau_ray)};
  Task copying = info::cloning_task(pair, blank, tol);
  Verdict blocked = oracles::possible_with_side_effects(copying, cfg);
  Verdict blocked_alongside =
      oracles::possible_with_side_effects(parallel_compose(copying, idle, tol), cfg);
  result.facts.push_back({"copying_alone", kind_fact(blocked)});
  result.facts.push_back({"copying_alongside_idle", kind_fact(blocked_alongside)});

  result.holds = alone.kind == VerdictKind::Possible &&
                 alongside.kind == VerdictKind::Possible &&
                 blocked.kind == VerdictKind::Impossible &&
                 blocked_alongside.kind == VerdictKind::Impossible;
  return result;
}

PrincipleResult check_composite_information(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "III";
  const Tolerances& tol = cfg.tol;

  SubstratePtr u = Substrate::classical("u", 2);
  SubstratePtr v = Substrate::classical("v", 2);
  auto split = [&](const SubstratePtr& s) {
    std::vector<Attribute> singles;
    for (const auto& label : s->state_space()) {
      singles.push_back(Attribute::state_set(s, {label}).with_flags(true, false));
    }
    return singles;
  };
  Variable xu(split(u), {}, "", tol);
  Variable xv(split(v), {}, "", tol);
  Variable prod = product_variable(xu, xv, tol);
  Attribute blank =
      product_attribute({xu.attributes()[0], xv.attributes()[0]}, tol).with_flags(true, false);
  Verdict classical = info::is_information_variable(prod, {blank}, cfg);
  result.facts.push_back({"classical_product", kind_fact(classical)});

  SubstratePtr qu = Substrate::quantum("qu", 2);
  SubstratePtr qv = Substrate::quantum("qv", 2);
  auto rays = [&](const SubstratePtr& s) {
    auto targets = info::pointer_targets(s, 2, tol);
    std::vector<Attribute> flagged;
    for (auto& t : targets) flagged.push_back(t.with_flags(true, false));
    return flagged;
  };
  Variable zu(rays(qu), {}, "", tol);
  Variable zv(rays(qv), {}, "", tol);
  Variable qprod = product_variable(zu, zv, tol);
  Attribute qblank =
      product_attribute({zu.attributes()[0], zv.attributes()[0]}, tol).with_flags(true, false);
  Verdict quantum = info::is_information_variable(qprod, {qblank}, cfg);
  result.facts.push_back({"quantum_product", kind_fact(quantum)});

  result.holds = classical.kind == VerdictKind::Possible &&
                 quantum.kind == VerdictKind::Possible;
  return result;
}

PrincipleResult check_separation(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "IV";
  const Tolerances& tol = cfg.tol;

  bool all_good = true;

  SubstratePtr q = Substrate::quantum("q", 2);
  auto q_rays = info::pointer_targets(q, 2, tol);
  Verdict basis_pair = info::is_distinguishable(Variable({q_rays[0], q_rays[1]}, {}, "", tol),
                                                cfg);
  all_good = all_good && basis_pair.kind == VerdictKind::Possible;
  result.facts.push_back({"orthogonal_rays", kind_fact(basis_pair)});

  SubstratePtr s4 = Substrate::quantum("s4", 4);
  cmat low(4, 2), high(4, 2);
  low.setZero();
  high.setZero();
  low(0, 0) = 1.0;
  low(1, 1) = 1.0;
  high(2, 0) = 1.0;
  high(3, 1) = 1.0;
  Variable planes({Attribute::subspace(s4, low, "low", tol.tau_rank),
                   Attribute::subspace(s4, high, "high", tol.tau_rank)},
                  {}, "", tol);
  Verdict plane_pair = info::is_distinguishable(planes, cfg);
  all_good = all_good && plane_pair.kind == VerdictKind::Possible;
  result.facts.push_back({"orthogonal_planes", kind_fact(plane_pair)});

  SubstratePtr c4 = Substrate::classical("c4", 4);
  auto space = c4->state_space();
  Variable parity({Attribute::state_set(c4, {space[0], space[2]}),
                   Attribute::state_set(c4, {space[1], space[3]})},
                  {}, "", tol);
  Verdict parity_pair = info::is_distinguishable(parity, cfg);
  all_good = all_good && parity_pair.kind == VerdictKind::Possible;
  result.facts.push_back({"disjoint_labels", kind_fact(parity_pair)});

  // Contrast: a non-perp pair must fail, or the principle would say nothing.
  const double c = std::sqrt(0.5);
  cvec plus = c * basis_vector(q, 0) + c * basis_vector(q, 1);
  Verdict skew = info::is_distinguishable(
      Variable({q_rays[0], Attribute::single_ray(q, plus, "", tol.tau_ray)}, {}, "", tol),
      cfg);
  all_good = all_good && skew.kind == VerdictKind::Impossible;
  result.facts.push_back({"skew_rays", kind_fact(skew)});

  result.holds = all_good;
  return result;
}

PrincipleResult check_closure(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "V";
  const Tolerances& tol = cfg.tol;
  bool all_good = true;

  SubstratePtr c3 = Substrate::classical("c3", 3);
  auto space = c3->state_space();
  std::vector<Attribute> classical_samples;
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<std::string> states;
    for (int b = 0; b < 3; ++b) {
      if (mask & (1 << b)) states.push_back(space[b]);
    }
    classical_samples.push_back(Attribute::state_set(c3, states));
  }
  for (const auto& a : classical_samples) {
    all_good = all_good && attribute_equal(a, info::bar_bar(a, tol), tol);
    all_good = all_good &&
               attribute_equal(info::bar(a, tol),
                               info::bar(info::bar_bar(a, tol), tol), tol);
  }
  result.facts.push_back({"label_sets_closed", all_good ? "yes" : "no"});

  SubstratePtr q = Substrate::quantum("q", 2);
  cvec e0 = basis_vector(q, 0);
  cvec e1 = basis_vector(q, 1);
  const double c = std::sqrt(0.5);
  std::vector<Attribute> quantum_samples = {
      Attribute::single_ray(q, e0, "", tol.tau_ray),
      Attribute::single_ray(q, c * (e0 + e1), "", tol.tau_ray),
      Attribute::single_ray(q, c * (e0 + cdouble(0, 1) * e1), "", tol.tau_ray),
      Attribute::ray_set(q, {e0, e1}, "", tol.tau_ray),
      info::full_attribute(q, tol),
      Attribute::empty(q)};
  bool rays_ok = true;
  for (const auto& a : quantum_samples) {
    Attribute closure = info::bar_bar(a, tol);
    rays_ok = rays_ok && attribute_subset(a, closure, tol);
    rays_ok = rays_ok && attribute_equal(closure, info::bar_bar(closure, tol), tol);
    rays_ok = rays_ok &&
              attribute_equal(info::bar(a, tol), info::bar(closure, tol), tol);
  }
  // A single ray is already closed; a two-ray set closes to the whole plane.
  rays_ok = rays_ok && info::bar_closed(quantum_samples[0], tol);
  rays_ok = rays_ok && !info::bar_closed(quantum_samples[3], tol);
  result.facts.push_back({"ray_sets_close_to_spans", rays_ok ? "yes" : "no"});
  all_good = all_good && rays_ok;

  (void)cfg;
  result.holds = all_good;
  return result;
}

PrincipleResult check_preparability(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "VI";
  const Tolerances& tol = cfg.tol;

  superinfo::Medium medium = superinfo::standard_qubit_medium(tol);
  bool flagged = !medium.blanks.empty();
  for (const auto& b : medium.blanks) flagged = flagged && b.preparable();
  result.facts.push_back({"declared_blanks", flagged ? "preparable" : "missing"});

  bool constructible = true;
  try {
    info::cloning_task(medium.x.attributes(), medium.blanks.front(), tol);
  } catch (const Error&) {
    constructible = false;
  }
  result.facts.push_back({"copy_tasks_constructible", constructible ? "yes" : "no"});

  bool unflagged_rejected = false;
  try {
    info::cloning_task(medium.x.attributes(),
                       medium.blanks.front().with_flags(false, false), tol);
  } catch (const Error& e) {
    unflagged_rejected = e.code() == ErrorCode::NotPreparable;
  }
  result.facts.push_back({"unflagged_blank_rejected", unflagged_rejected ? "yes" : "no"});

  (void)cfg;
  result.holds = flagged && constructible && unflagged_rejected;
  return result;
}

PrincipleResult check_composition(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "VII";
  const Tolerances& tol = cfg.tol;
  bool all_good = true;

  SubstratePtr w = Substrate::quantum("w", 2);
  cvec e0 = basis_vector(w, 0);
  cvec e1 = basis_vector(w, 1);
  const double c = std::sqrt(0.5);
  auto ray = [&](const cvec& v) { return Attribute::single_ray(w, v, "", tol.tau_ray); };
  Attribute plus = ray(c * (e0 + e1));
  Attribute minus = ray(c * (e0 - e1));

  Task rotate({{ray(e0), plus}, {ray(e1), minus}}, tol);
  Task rotate_back({{plus, ray(e0)}, {minus, ray(e1)}}, tol);
  Verdict first = oracles::possible(rotate, cfg);
  Verdict second = oracles::possible(rotate_back, cfg);
  Task chained = serial_compose(rotate, rotate_back, tol);
  Verdict whole = oracles::possible(chained, cfg);
  all_good = all_good && first.kind == VerdictKind::Possible &&
             second.kind == VerdictKind::Possible && whole.kind == VerdictKind::Possible &&
             oracles::validate_witness(chained, whole, cfg);
  result.facts.push_back({"serial_chain", kind_fact(whole)});

  SubstratePtr w2 = Substrate::quantum("w2", 2);
  auto rays2 = info::pointer_targets(w2, 2, tol);
  Task swap2({{rays2[0], rays2[1]}, {rays2[1], rays2[0]}}, tol);
  Task side_by_side = parallel_compose(rotate, swap2, tol);
  Verdict parallel = oracles::possible(side_by_side, cfg);
  all_good = all_good && parallel.kind == VerdictKind::Possible &&
             oracles::validate_witness(side_by_side, parallel, cfg);
  result.facts.push_back({"parallel_pair", kind_fact(parallel)});

  std::mt19937_64 rng(cfg.seed ^ 0x5eedu);
  for (int round = 0; round < 3 && all_good; ++round) {
    cmat a = random_unitary(rng, 2);
    cmat b = random_unitary(rng, 2);
    Task first_leg({{ray(e0), ray(a * e0)}, {ray(e1), ray(a * e1)}}, tol);
    Task second_leg({{ray(a * e0), ray(b * (a * e0))}, {ray(a * e1), ray(b * (a * e1))}},
                    tol);
    Task joined = serial_compose(first_leg, second_leg, tol);
    Verdict verdict = oracles::possible(joined, cfg);
    all_good = all_good && verdict.kind == VerdictKind::Possible &&
               oracles::validate_witness(joined, verdict, cfg);
  }
  result.facts.push_back({"sampled_chains", all_good ? "possible" : "broken"});

  result.holds = all_good;
  return result;
}

PrincipleResult check_measurer_family(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "VIII";
  const Tolerances& tol = cfg.tol;
  bool all_good = true;

  superinfo::Medium medium = superinfo::standard_qubit_medium(tol);
  info::MeasurementSpec canonical = info::canonical_measurer(medium.x, tol);
  const int d = 2;

  std::vector<std::vector<int>> relabellings = {{0, 1}, {1, 0}};
  for (const auto& images : relabellings) {
    info::MeasurementSpec variant = canonical;
    for (size_t i = 0; i < canonical.pointer_marks.size(); ++i) {
      variant.pointer_marks[i] = canonical.pointer_marks[static_cast<size_t>(images[i])];
    }
    Verdict v = info::is_measurer_of(variant, medium.x, cfg);
    all_good = all_good && v.kind == VerdictKind::Possible;

    // The relabelled machine must still report sharply, at the moved mark.
    for (int input = 0; input < d; ++input) {
      sim::StateVector state = sim::StateVector::product(
          {d, d}, {medium.x.attributes()[static_cast<size_t>(input)].rays().front(),
                   basis_vector(variant.pointer, 0)});
      cmat record = sim::controlled_shift(d, d);
      sim::apply_unitary(state, record, {0, 1});
      sim::apply_unitary(state, sim::permutation_matrix(images), {1});
      auto outcome = sim::sharp_outcome(state, {1}, tol.tau_sharp);
      all_good = all_good && outcome.has_value() && *outcome == images[input];
    }
  }
  result.facts.push_back({"relabelled_family", all_good ? "sharp and consistent" : "broken"});
  result.holds = all_good;
  return result;
}

PrincipleResult check_ensemble_separation(const OracleConfig& cfg) {
  PrincipleResult result;
  result.id = "IX";
  const Tolerances& tol = cfg.tol;
  bool all_good = true;

  superinfo::Medium medium = superinfo::standard_qubit_medium(tol);
  std::vector<Attribute> rays = medium.x.attributes();
  for (const auto& a : medium.y.attributes()) rays.push_back(a);
  int limit_cases = 0;
  for (size_t i = 0; i < rays.size(); ++i) {
    for (size_t j = i + 1; j < rays.size(); ++j) {
      if (!attributes_disjoint(rays[i], rays[j], tol)) continue;
      Verdict v = info::ensemble_distinguishable({rays[i], rays[j]}, cfg);
      const bool fine = v.kind == VerdictKind::Possible ||
                        v.kind == VerdictKind::PossibleInLimit;
      if (v.kind == VerdictKind::PossibleInLimit) ++limit_cases;
      all_good = all_good && fine;
    }
  }
  std::ostringstream note;
  note << "6 disjoint ray pairs, " << limit_cases << " only in the limit";
  result.facts.push_back({"qubit_pairs", note.str()});

  SubstratePtr c3 = Substrate::classical("c3", 3);
  auto space = c3->state_space();
  Verdict labels = info::ensemble_distinguishable(
      {Attribute::state_set(c3, {space[0]}), Attribute::state_set(c3, {space[1], space[2]})},
      cfg);
  all_good = all_good && labels.kind == VerdictKind::Possible;
  result.facts.push_back({"disjoint_labels", kind_fact(labels)});

  Verdict repeated = info::ensemble_distinguishable(
      {medium.x.attributes()[0], medium.x.attributes()[0]}, cfg);
  all_good = all_good && repeated.kind == VerdictKind::Impossible;
  result.facts.push_back({"repeated_attribute", kind_fact(repeated)});

  result.holds = all_good;
  return result;
}

/// All partitions of `elements` (as index lists per block).
void partitions_of(size_t count, std::vector<std::vector<std::vector<size_t>>>& out) {
  std::vector<std::vector<size_t>> current;
  std::function<void(size_t)> place = [&](size_t e) {
    if (e == count) {
      out.push_back(current);
      return;
    }
    // Index access: the recursion grows `current`, which may reallocate.
    for (size_t b = 0; b < current.size(); ++b) {
      current[b].push_back(e);
      place(e + 1);
      current[b].pop_back();
    }
    current.push_back({e});
    place(e + 1);
    current.pop_back();
  };
  place(0);
}

}  // namespace

const std::vector<std::string>& principle_ids() {
  static const std::vector<std::string> ids = {"II",  "III", "IV", "V",
                                               "VI",  "VII", "VIII", "IX"};
  return ids;
}

PrincipleResult check_principle(const std::string& id, const OracleConfig& cfg) {
  if (id == "II") return check_locality(cfg);
  if (id == "III") return check_composite_information(cfg);
  if (id == "IV") return check_separation(cfg);
  if (id == "V") return check_closure(cfg);
  if (id == "VI") return check_preparability(cfg);
  if (id == "VII") return check_composition(cfg);
  if (id == "VIII") return check_measurer_family(cfg);
  if (id == "IX") return check_ensemble_separation(cfg);
  throw Error(ErrorCode::ValidationError, "unknown principle id: " + id);
}

FalsifyReport falsify_classical(int max_states, int budget, const OracleConfig& cfg) {
  if (max_states < 2) {
    throw Error(ErrorCode::ValidationError, "the search starts at two states");
  }
  if (max_states > budget) {
    std::ostringstream msg;
    msg << "searching up to " << max_states << " states exceeds the budget of " << budget;
    throw Error(ErrorCode::BudgetExceeded, msg.str());
  }
  const Tolerances& tol = cfg.tol;

  FalsifyReport report;
  report.max_states = max_states;

  for (int k = 2; k <= max_states && !report.counterexample_found; ++k) {
    SubstratePtr sub = Substrate::classical("m" + std::to_string(k), k);
    auto space = sub->state_space();
    Attribute blank = Attribute::state_set(sub, {space[0]}).with_flags(true, false);

    std::vector<Variable> info_vars;
    auto flag_counterexample = [&](const Variable& v, const std::string& why) {
      report.counterexample_found = true;
      std::ostringstream desc;
      desc << k << "-state model, variable ";
      for (const auto& a : v.attributes()) desc << a.describe() << " ";
      desc << ": " << why;
      report.counterexample = desc.str();
    };

    for (int mask = 1; mask < (1 << k) && !report.counterexample_found; ++mask) {
      std::vector<std::string> subset;
      for (int b = 0; b < k; ++b) {
        if (mask & (1 << b)) subset.push_back(space[b]);
      }
      std::vector<std::vector<std::vector<size_t>>> partitions;
      partitions_of(subset.size(), partitions);
      for (const auto& blocks : partitions) {
        std::vector<Attribute> members;
        for (const auto& block : blocks) {
          std::vector<std::string> states;
          for (size_t e : block) states.push_back(subset[e]);
          std::sort(states.begin(), states.end());
          members.push_back(Attribute::state_set(sub, states));
        }
        Variable v(members, {}, "", tol);
        ++report.variables_checked;

        Verdict sep = info::is_distinguishable(v, cfg);
        if (sep.kind != VerdictKind::Possible) {
          flag_counterexample(v, "members are not distinguishable");
          break;
        }
        bool closed = true;
        for (const auto& a : v.attributes()) {
          closed = closed && attribute_equal(a, info::bar_bar(a, tol), tol);
        }
        if (!closed) {
          flag_counterexample(v, "a member is not closed");
          break;
        }
        Verdict measured = info::is_measurer_of(info::canonical_measurer(v, tol), v, cfg);
        if (measured.kind != VerdictKind::Possible) {
          flag_counterexample(v, "its own measurer does not measure it");
          break;
        }
        if (v.size() >= 2) {
          Verdict iv = info::is_information_variable(v, {blank}, cfg);
          if (iv.kind != VerdictKind::Possible) {
            flag_counterexample(v, "a partition variable failed the information checks");
            break;
          }
          info_vars.push_back(v);
        }
      }
    }

    for (size_t i = 0; i < info_vars.size() && !report.counterexample_found; ++i) {
      for (size_t j = i + 1; j < info_vars.size(); ++j) {
        std::vector<Attribute> merged = info_vars[i].attributes();
        for (const auto& a : info_vars[j].attributes()) merged.push_back(a);
        std::optional<Variable> united;
        try {
          united.emplace(merged, std::vector<std::string>{}, "", tol);
        } catch (const Error&) {
          continue;  // overlapping members: no union variable to test
        }
        ++report.union_pairs_checked;
        Verdict u = info::is_information_variable(*united, {blank}, cfg);
        if (u.kind != VerdictKind::Possible) {
          flag_counterexample(*united, "a union of information variables failed");
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace ctk::principles
