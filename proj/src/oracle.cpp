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

#include "ctk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ctk/errors.hpp"

namespace ctk::oracles {

const char* verdict_kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Possible: return "possible";
    case VerdictKind::Impossible: return "impossible";
    case VerdictKind::PossibleInLimit: return "possible_in_limit";
    case VerdictKind::Unknown: return "unknown";
  }
  return "unknown";
}

const char* certificate_kind_name(CertificateKind k) {
  switch (k) {
    case CertificateKind::EmptyOutput: return "EmptyOutput";
    case CertificateKind::ForcedOrthogonality: return "ForcedOrthogonality";
    case CertificateKind::OverlapBound: return "OverlapBound";
    case CertificateKind::CloningGram: return "CloningGram";
    case CertificateKind::UnitNormConflict: return "UnitNormConflict";
    case CertificateKind::GramMismatch: return "GramMismatch";
    case CertificateKind::DefectLowerBound: return "DefectLowerBound";
  }
  return "Certificate";
}

GramMatrix GramMatrix::from_vectors(const std::vector<cvec>& vectors) {
  const Eigen::Index m = static_cast<Eigen::Index>(vectors.size());
  cmat g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = overlap(vectors[i], vectors[j]);
  }
  return GramMatrix{std::move(g)};
}

void GramMatrix::validate(const Tolerances& tol) const {
  const Eigen::Index m = entries.rows();
  if (entries.cols() != m) {
    throw Error(ErrorCode::ValidationError, "Gram matrix must be square");
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    if (std::abs(entries(i, i) - cdouble(1.0, 0.0)) > tol.tau_norm) {
      throw Error(ErrorCode::NormViolation, "Gram diagonal must be 1");
    }
    for (Eigen::Index j = 0; j < m; ++j) {
      if (std::abs(entries(i, j) - std::conj(entries(j, i))) > tol.tau_norm) {
        throw Error(ErrorCode::ValidationError, "Gram matrix must be Hermitian");
      }
    }
  }
  if (!is_positive_semidefinite(entries, tol.tau_psd)) {
    throw Error(ErrorCode::ValidationError, "Gram matrix must be positive semidefinite");
  }
}

namespace {

struct Row {
  cvec input;
  int pair_index;
};

// Expanded constraint rows of one output choice: every row has an input ray
// and an orthonormal output basis (a single column pins the output ray).
struct Instance {
  std::vector<Row> rows;
  std::vector<cmat> bases;
  cmat gram;
};

std::vector<cvec> attribute_input_rays(const Attribute& a) {
  std::vector<cvec> rays;
  if (a.body() == Attribute::Body::Subspace) {
    for (Eigen::Index i = 0; i < a.basis().cols(); ++i) rays.push_back(a.basis().col(i));
  } else {
    rays = a.rays();
  }
  return rays;
}

std::vector<cmat> attribute_output_options(const Attribute& a) {
  std::vector<cmat> options;
  if (a.body() == Attribute::Body::Subspace) {
    if (a.basis().cols() > 0) options.push_back(a.basis());
  } else {
    for (const auto& r : a.rays()) {
      cmat column(r.size(), 1);
      column.col(0) = r;
      options.push_back(column);
    }
  }
  return options;
}

cmat gram_of_rows(const std::vector<Row>& rows) {
  const Eigen::Index m = static_cast<Eigen::Index>(rows.size());
  cmat g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) g(i, j) = overlap(rows[i].input, rows[j].input);
  }
  return g;
}

std::optional<Certificate> scan_certificates(const Instance& inst, SideEffects side,
                                             const Tolerances& tol) {
  const size_t m = inst.rows.size();
  const cmat& g = inst.gram;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const double gij = std::abs(g(i, j));
      const double cmax = max_principal_cosine(inst.bases[i], inst.bases[j]);
      const bool forced = inst.bases[i].cols() == 1 && inst.bases[j].cols() == 1;
      if (gij > cmax + tol.tau_gram) {
        std::ostringstream msg;
        if (cmax <= tol.tau_gram) {
          msg << "inputs overlap at " << gij << " but the outputs are forced orthogonal";
          return Certificate{CertificateKind::ForcedOrthogonality, msg.str(),
                             {static_cast<int>(i), static_cast<int>(j)},
                             {gij, cmax}};
        }
        if (forced && std::abs(cmax - gij * gij) <= 1e-9 && gij < 1.0 - tol.tau_gram) {
          msg << "overlap " << gij << " would need an ancilla overlap of " << gij / cmax
              << " > 1 (|c| vs |c|^2)";
          return Certificate{CertificateKind::CloningGram, msg.str(),
                             {static_cast<int>(i), static_cast<int>(j)},
                             {gij, cmax}};
        }
        msg << "input overlap " << gij << " exceeds the principal-angle bound " << cmax;
        return Certificate{CertificateKind::OverlapBound, msg.str(),
                           {static_cast<int>(i), static_cast<int>(j)},
                           {gij, cmax}};
      }
      if (side == SideEffects::Off && forced && std::abs(cmax - gij) > tol.tau_gram) {
        std::ostringstream msg;
        msg << "without side effects the overlap must be preserved exactly (" << gij
            << " vs " << cmax << ")";
        return Certificate{CertificateKind::GramMismatch, msg.str(),
                           {static_cast<int>(i), static_cast<int>(j)},
                           {gij, cmax}};
      }
    }
  }

  // Tight alignment conflicts: a subspace-output row whose ray is pinned by
  // two different forced rows at full projection overlap cannot satisfy both
  // (the pinned directions are distinct, so one inner product falls short).
  for (size_t t = 0; t < m; ++t) {
    if (inst.bases[t].cols() < 2) continue;
    std::vector<cvec> pinned;
    std::vector<int> pinned_by;
    std::vector<double> pinned_overlap;
    for (size_t i = 0; i < m; ++i) {
      if (i == t || inst.bases[i].cols() != 1) continue;
      const cvec forced_ray = inst.bases[i].col(0);
      cvec projected = inst.bases[t] * (inst.bases[t].adjoint() * forced_ray);
      const double p = projected.norm();
      const double git = std::abs(g(i, t));
      if (git <= tol.tau_gram || std::abs(git - p) > tol.tau_gram) continue;
      cvec direction = projected / p;
      for (size_t k = 0; k < pinned.size(); ++k) {
        if (std::abs(overlap(pinned[k], direction)) < 1.0 - 1e-7) {
          std::ostringstream msg;
          msg << "rows " << pinned_by[k] << " and " << i
              << " each pin the output of row " << t
              << " to a different ray at unit ancilla overlap";
          return Certificate{CertificateKind::UnitNormConflict, msg.str(),
                             {pinned_by[k], static_cast<int>(i), static_cast<int>(t)},
                             {pinned_overlap[k], git}};
        }
      }
      pinned.push_back(std::move(direction));
      pinned_by.push_back(static_cast<int>(i));
      pinned_overlap.push_back(git);
    }
  }
  return std::nullopt;
}

double instance_error(const Instance& inst, const std::vector<cvec>& coeffs,
                      const std::vector<cvec>& anc, SideEffects side) {
  const size_t m = inst.rows.size();
  double worst = 0.0;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      cdouble f = (inst.bases[i] * coeffs[i]).dot(inst.bases[j] * coeffs[j]);
      cdouble a = side == SideEffects::On ? anc[i].dot(anc[j]) : cdouble(1.0, 0.0);
      worst = std::max(worst, std::abs(inst.gram(i, j) - f * a));
    }
  }
  return worst;
}

bool solve_instance(const Instance& inst, SideEffects side, const OracleConfig& cfg,
                    std::mt19937_64& rng, std::vector<cvec>& out_coeffs,
                    std::vector<cvec>& out_anc) {
  const size_t m = inst.rows.size();
  std::vector<cvec> coeffs(m), anc(m);

  auto aligned_init = [&]() {
    for (size_t i = 0; i < m; ++i) {
      cvec c = inst.bases[i].adjoint() * inst.rows[i].input;
      double n = c.norm();
      if (n > 1e-8) {
        coeffs[i] = c / n;
      } else {
        coeffs[i] = cvec::Zero(inst.bases[i].cols());
        coeffs[i](0) = 1.0;
      }
      anc[i] = cvec::Zero(m);
      anc[i](0) = 1.0;
    }
  };

  auto random_init = [&]() {
    for (size_t i = 0; i < m; ++i) {
      coeffs[i] = random_unit_vector(rng, inst.bases[i].cols());
      if (side == SideEffects::On) {
        anc[i] = random_unit_vector(rng, m);
      } else {
        anc[i] = cvec::Zero(m);
        anc[i](0) = 1.0;
      }
    }
  };

  for (int restart = 0; restart < std::max(1, cfg.restarts); ++restart) {
    if (restart == 0) {
      aligned_init();
    } else {
      random_init();
    }
    double err = instance_error(inst, coeffs, anc, side);
    for (int sweep = 0; sweep < cfg.iterations && err > cfg.tol.tau_gram; ++sweep) {
      for (size_t i = 0; i < m; ++i) {
        if (m == 1) break;
        cmat w(m - 1, inst.bases[i].cols());
        cvec target(m - 1);
        Eigen::Index r = 0;
        for (size_t j = 0; j < m; ++j) {
          if (j == i) continue;
          cvec u = inst.bases[i].adjoint() * (inst.bases[j] * coeffs[j]);
          cdouble t = side == SideEffects::On ? anc[i].dot(anc[j]) : cdouble(1.0, 0.0);
          w.row(r) = (t * u).transpose();
          target(r) = inst.gram(i, j);
          ++r;
        }
        coeffs[i] = unit_norm_least_squares(w, target).conjugate();
      }
      if (side == SideEffects::On) {
        for (size_t i = 0; i < m; ++i) {
          if (m == 1) break;
          cmat w(m - 1, m);
          cvec target(m - 1);
          Eigen::Index r = 0;
          for (size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            cdouble f = (inst.bases[i] * coeffs[i]).dot(inst.bases[j] * coeffs[j]);
            w.row(r) = (f * anc[j]).transpose();
            target(r) = inst.gram(i, j);
            ++r;
          }
          anc[i] = unit_norm_least_squares(w, target).conjugate();
        }
      }
      double next = instance_error(inst, coeffs, anc, side);
      if (next >= err - 1e-15 && next > cfg.tol.tau_gram) {
        err = next;
        break;  // stalled; try the next restart
      }
      err = next;
    }
    if (err <= cfg.tol.tau_gram) {
      out_coeffs = coeffs;
      out_anc = anc;
      return true;
    }
  }
  return false;
}

Verdict witness_verdict(const Instance& inst, SideEffects side,
                        const std::vector<cvec>& coeffs, const std::vector<cvec>& anc) {
  QuantumWitness w;
  w.side_effects = side == SideEffects::On;
  for (size_t i = 0; i < inst.rows.size(); ++i) {
    w.input_rays.push_back(inst.rows[i].input);
    w.pair_index.push_back(inst.rows[i].pair_index);
    w.output_rays.push_back(inst.bases[i] * coeffs[i]);
    w.ancilla.push_back(side == SideEffects::On ? anc[i] : cvec::Ones(1));
  }
  Verdict v;
  v.kind = VerdictKind::Possible;
  v.quantum_witness = std::move(w);
  return v;
}

}  // namespace

Verdict classical_possible(const Task& task, const OracleConfig& cfg) {
  if (!task.substrate()->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "classical oracle on a quantum task");
  }
  // Group the pairs offered for each (repeated) input attribute.
  std::vector<std::pair<const Attribute*, std::vector<const Attribute*>>> groups;
  for (const auto& p : task.pairs()) {
    bool found = false;
    for (auto& g : groups) {
      if (g.first->states() == p.input.states()) {
        g.second.push_back(&p.output);
        found = true;
        break;
      }
    }
    if (!found) groups.push_back({&p.input, {&p.output}});
  }

  ClassicalWitness witness;
  for (const auto& g : groups) {
    if (g.first->is_empty()) continue;
    const Attribute* chosen = nullptr;
    for (const auto* out : g.second) {
      if (!out->is_empty()) {
        chosen = out;
        break;
      }
    }
    if (!chosen) {
      Verdict v;
      v.kind = VerdictKind::Impossible;
      v.certificate = Certificate{CertificateKind::EmptyOutput,
                                  "every output offered for an occupied input is empty",
                                  {},
                                  {}};
      return v;
    }
    for (const auto& s : g.first->states()) {
      witness.transition[s] = chosen->states().front();
    }
  }
  (void)cfg;
  Verdict v;
  v.kind = VerdictKind::Possible;
  v.classical_witness = std::move(witness);
  return v;
}

Verdict quantum_possible(const Task& task, SideEffects side, const OracleConfig& cfg) {
  if (task.substrate()->classical_kind()) {
    throw Error(ErrorCode::KindMismatch, "quantum oracle on a classical task");
  }

  std::vector<Row> all_rows;
  for (size_t p = 0; p < task.pairs().size(); ++p) {
    for (auto& ray : attribute_input_rays(task.pairs()[p].input)) {
      all_rows.push_back({std::move(ray), static_cast<int>(p)});
    }
  }
  if (all_rows.empty()) {
    Verdict v;
    v.kind = VerdictKind::Possible;
    v.note = "no occupied inputs";
    v.quantum_witness = QuantumWitness{{}, {}, {}, {}, side == SideEffects::On};
    return v;
  }

  // Rows sharing one input ray across different pairs express a free choice;
  // enumerate which pair serves the ray.
  std::vector<std::vector<size_t>> ray_groups;
  std::vector<bool> grouped(all_rows.size(), false);
  for (size_t i = 0; i < all_rows.size(); ++i) {
    if (grouped[i]) continue;
    std::vector<size_t> group = {i};
    for (size_t j = i + 1; j < all_rows.size(); ++j) {
      if (!grouped[j] && same_ray(all_rows[i].input, all_rows[j].input, cfg.tol.tau_ray)) {
        group.push_back(j);
        grouped[j] = true;
      }
    }
    grouped[i] = true;
    ray_groups.push_back(std::move(group));
  }

  long long variant_count = 1;
  for (const auto& g : ray_groups) variant_count *= static_cast<long long>(g.size());
  if (variant_count > cfg.max_choice_variants) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.note = "too many output choices for repeated inputs";
    return v;
  }

  uint64_t fingerprint = task_fingerprint(task);
  uint64_t stream = fnv1a(cfg.seed ^ fingerprint, "quantum_possible", 16);

  std::optional<Certificate> first_certificate;
  bool any_unknown = false;

  std::vector<size_t> choice(ray_groups.size(), 0);
  for (long long variant = 0; variant < variant_count; ++variant) {
    long long code = variant;
    for (size_t g = 0; g < ray_groups.size(); ++g) {
      choice[g] = static_cast<size_t>(code % ray_groups[g].size());
      code /= ray_groups[g].size();
    }
    std::vector<Row> rows;
    for (size_t g = 0; g < ray_groups.size(); ++g) {
      rows.push_back(all_rows[ray_groups[g][choice[g]]]);
    }

    std::vector<std::vector<cmat>> options(rows.size());
    bool empty_output = false;
    long long combos = 1;
    for (size_t i = 0; i < rows.size(); ++i) {
      options[i] = attribute_output_options(task.pairs()[rows[i].pair_index].output);
      if (options[i].empty()) {
        empty_output = true;
        break;
      }
      combos *= static_cast<long long>(options[i].size());
    }
    if (empty_output) {
      if (!first_certificate) {
        first_certificate = Certificate{CertificateKind::EmptyOutput,
                                        "an occupied input is mapped to the empty attribute",
                                        {},
                                        {}};
      }
      continue;
    }
    if (combos > cfg.max_output_combos) {
      any_unknown = true;
      continue;
    }

    cmat gram = gram_of_rows(rows);
    for (long long combo = 0; combo < combos; ++combo) {
      Instance inst;
      inst.rows = rows;
      inst.gram = gram;
      long long c = combo;
      for (size_t i = 0; i < rows.size(); ++i) {
        inst.bases.push_back(options[i][static_cast<size_t>(c % options[i].size())]);
        c /= options[i].size();
      }
      if (auto cert = scan_certificates(inst, side, cfg.tol)) {
        if (!first_certificate) first_certificate = cert;
        continue;
      }
      std::mt19937_64 rng(fnv1a(stream, &combo, sizeof combo) ^ (uint64_t)variant);
      std::vector<cvec> coeffs, anc;
      if (solve_instance(inst, side, cfg, rng, coeffs, anc)) {
        return witness_verdict(inst, side, coeffs, anc);
      }
      any_unknown = true;
    }
  }

  Verdict v;
  if (!any_unknown && first_certificate) {
    v.kind = VerdictKind::Impossible;
    v.certificate = std::move(first_certificate);
  } else {
    v.kind = VerdictKind::Unknown;
    v.note = "no witness found and no impossibility certificate applies";
  }
  return v;
}

Verdict possible(const Task& task, const OracleConfig& cfg) {
  if (task.substrate()->classical_kind()) return classical_possible(task, cfg);
  return quantum_possible(task, SideEffects::Off, cfg);
}

Verdict possible_with_side_effects(const Task& task, const OracleConfig& cfg) {
  if (task.substrate()->classical_kind()) return classical_possible(task, cfg);
  return quantum_possible(task, SideEffects::On, cfg);
}

bool validate_witness(const Task& task, const Verdict& verdict, const OracleConfig& cfg) {
  if (verdict.kind != VerdictKind::Possible) return false;
  const Tolerances& tol = cfg.tol;

  if (verdict.classical_witness) {
    const auto& w = *verdict.classical_witness;
    for (const auto& p : task.pairs()) {
      if (p.input.is_empty()) continue;
      for (const auto& s : p.input.states()) {
        auto it = w.transition.find(s);
        if (it == w.transition.end()) return false;
        // The state must land in an output offered for this input attribute.
        bool lands = false;
        for (const auto& q : task.pairs()) {
          if (q.input.states() != p.input.states()) continue;
          if (std::binary_search(q.output.states().begin(), q.output.states().end(),
                                 it->second)) {
            lands = true;
            break;
          }
        }
        if (!lands) return false;
      }
    }
    return true;
  }

  if (!verdict.quantum_witness) return false;
  const auto& w = *verdict.quantum_witness;
  const size_t m = w.input_rays.size();
  if (w.output_rays.size() != m || w.pair_index.size() != m || w.ancilla.size() != m) {
    return false;
  }
  for (size_t i = 0; i < m; ++i) {
    if (std::abs(w.input_rays[i].norm() - 1.0) > tol.tau_norm) return false;
    if (std::abs(w.output_rays[i].norm() - 1.0) > tol.tau_norm) return false;
    if (std::abs(w.ancilla[i].norm() - 1.0) > tol.tau_norm) return false;
    int p = w.pair_index[i];
    if (p < 0 || p >= static_cast<int>(task.pairs().size())) return false;
    const Attribute& in = task.pairs()[p].input;
    const Attribute& out = task.pairs()[p].output;
    State in_state = State::quantum_state(task.substrate(), w.input_rays[i], tol.tau_norm);
    State out_state = State::quantum_state(task.substrate(), w.output_rays[i], tol.tau_norm);
    if (!in.contains_state(in_state, tol)) return false;
    if (!out.contains_state(out_state, tol)) return false;
  }
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      cdouble g = overlap(w.input_rays[i], w.input_rays[j]);
      cdouble f = overlap(w.output_rays[i], w.output_rays[j]);
      cdouble a = w.side_effects ? overlap(w.ancilla[i], w.ancilla[j]) : cdouble(1.0, 0.0);
      if (std::abs(g - f * a) > tol.tau_gram * 10) return false;
    }
  }
  if (!w.side_effects) {
    for (size_t i = 1; i < m; ++i) {
      if (w.ancilla[i].size() != w.ancilla[0].size()) return false;
    }
  }
  return true;
}

TaskFamily ensemble_distinguish_family(std::vector<Attribute> base, const Tolerances& tol) {
  if (base.size() < 2) {
    throw Error(ErrorCode::TooFewAttributes, "an ensemble family needs at least two attributes");
  }
  const SubstratePtr sub = base.front().substrate();
  for (const auto& a : base) {
    if (!same_substrate(sub, a.substrate())) {
      throw Error(ErrorCode::KindMismatch, "family attributes must share a substrate");
    }
  }
  TaskFamily family;
  family.shape = TaskFamily::Shape::EnsembleDistinguish;
  family.base = base;

  family.generator = [base, sub, tol](int n) -> Task {
    if (n < 1 || n > 10) {
      throw Error(ErrorCode::BudgetExceeded, "ensemble generator supports n in [1, 10]");
    }
    SubstratePtr big = sub;
    if (n > 1) {
      std::vector<SubstratePtr> copies(static_cast<size_t>(n), sub);
      big = Substrate::compose(copies);
    }
    std::vector<TaskPair> pairs;
    if (sub->classical_kind()) {
      auto space = big->state_space();
      if (space.size() < base.size()) {
        throw Error(ErrorCode::DimensionMismatch, "not enough pointer states");
      }
      for (size_t i = 0; i < base.size(); ++i) {
        std::vector<std::string> product = {""};
        bool first = true;
        for (int k = 0; k < n; ++k) {
          std::vector<std::string> next;
          for (const auto& prefix : product) {
            for (const auto& s : base[i].states()) {
              next.push_back(first ? s : prefix + "," + s);
            }
          }
          product = std::move(next);
          first = false;
        }
        pairs.push_back({Attribute::state_set(big, product),
                         Attribute::state_set(big, {space[i]})});
      }
      return Task(std::move(pairs), tol);
    }
    if (big->size() < static_cast<int>(base.size())) {
      throw Error(ErrorCode::DimensionMismatch, "not enough pointer rays");
    }
    for (size_t i = 0; i < base.size(); ++i) {
      std::vector<cvec> source;
      if (base[i].body() == Attribute::Body::Subspace) {
        for (Eigen::Index k = 0; k < base[i].basis().cols(); ++k) {
          source.push_back(base[i].basis().col(k));
        }
      } else {
        source = base[i].rays();
      }
      std::vector<cvec> product = {cvec::Ones(1)};
      for (int k = 0; k < n; ++k) {
        std::vector<cvec> next;
        for (const auto& prefix : product) {
          for (const auto& r : source) next.push_back(kron(prefix, r));
        }
        if (next.size() > 64) {
          throw Error(ErrorCode::BudgetExceeded, "ensemble expansion too large");
        }
        product = std::move(next);
      }
      pairs.push_back({Attribute::ray_set(big, std::move(product), "", tol.tau_ray),
                       Attribute::single_ray(big, basis_vector(big, static_cast<int>(i)), "",
                                             tol.tau_ray)});
    }
    return Task(std::move(pairs), tol);
  };
  return family;
}

double ensemble_residual(const TaskFamily& family, int n, const Tolerances& tol) {
  if (family.shape != TaskFamily::Shape::EnsembleDistinguish) {
    throw Error(ErrorCode::PreconditionFailed, "residuals exist for ensemble families only");
  }
  double c = 0.0;
  const auto& base = family.base;
  if (base.front().classical_kind()) {
    for (size_t i = 0; i < base.size(); ++i) {
      for (size_t j = i + 1; j < base.size(); ++j) {
        if (!attributes_disjoint(base[i], base[j], tol)) c = 1.0;
      }
    }
  } else {
    for (size_t i = 0; i < base.size(); ++i) {
      for (size_t j = i + 1; j < base.size(); ++j) {
        for (const auto& ra : attribute_input_rays(base[i])) {
          for (const auto& rb : attribute_input_rays(base[j])) {
            c = std::max(c, std::abs(overlap(ra, rb)));
          }
        }
      }
    }
    c = std::min(c, 1.0);
  }
  return std::pow(c, n);
}

Verdict limit_verdict(const TaskFamily& family, const OracleConfig& cfg) {
  if (family.shape == TaskFamily::Shape::EnsembleDistinguish) {
    const double c = ensemble_residual(family, 1, cfg.tol);
    Verdict v;
    for (int n = 1; n <= std::max(1, cfg.n_probe); ++n) {
      v.probe_residuals.push_back(std::pow(c, n));
    }
    if (c >= 1.0 - cfg.tol.tau_ray) {
      v.kind = VerdictKind::Impossible;
      v.certificate = Certificate{CertificateKind::DefectLowerBound,
                                  "the distinguishing defect stays at 1 for every n",
                                  {},
                                  {c}};
      return v;
    }
    if (c <= cfg.tol.tau_gram) {
      // Orthogonal attributes: the single-copy task is already feasible.
      Verdict base;
      if (family.generator) base = possible_with_side_effects(family.generator(1), cfg);
      if (base.kind != VerdictKind::Possible) {
        base = Verdict{};
        base.kind = VerdictKind::Possible;
      }
      base.note = "already possible at n = 1";
      base.probe_residuals = v.probe_residuals;
      return base;
    }
    v.kind = VerdictKind::PossibleInLimit;
    std::ostringstream note;
    note << "defect " << c << "^n decays geometrically";
    v.note = note.str();
    return v;
  }

  if (!family.generator) {
    Verdict v;
    v.kind = VerdictKind::Unknown;
    v.note = "UnrecognizedFamily: no generator to probe";
    return v;
  }
  for (int n = 1; n <= cfg.n_probe; ++n) {
    Task probe = family.generator(n);
    Verdict v = probe.substrate()->classical_kind()
                    ? classical_possible(probe, cfg)
                    : quantum_possible(probe, SideEffects::On, cfg);
    if (v.kind == VerdictKind::Possible) {
      std::ostringstream note;
      note << "possible at n = " << n;
      v.note = note.str();
      return v;
    }
  }
  Verdict v;
  v.kind = VerdictKind::Unknown;
  v.note = "UnrecognizedFamily: probes stayed inconclusive";
  return v;
}

uint64_t task_fingerprint(const Task& task) {
  uint64_t h = 0;
  auto hash_string = [&](const std::string& s) { h = fnv1a(h, s.data(), s.size()); };
  auto hash_attr = [&](const Attribute& a) {
    int body = static_cast<int>(a.body());
    h = fnv1a(h, &body, sizeof body);
    if (a.classical_kind()) {
      for (const auto& s : a.states()) hash_string(s);
      return;
    }
    if (a.body() == Attribute::Body::RaySet) {
      for (const auto& r : a.rays()) {
        for (Eigen::Index i = 0; i < r.size(); ++i) {
          h = hash_double(h, r(i).real());
          h = hash_double(h, r(i).imag());
        }
      }
    } else {
      for (Eigen::Index c = 0; c < a.basis().cols(); ++c) {
        for (Eigen::Index r = 0; r < a.basis().rows(); ++r) {
          h = hash_double(h, a.basis()(r, c).real());
          h = hash_double(h, a.basis()(r, c).imag());
        }
      }
    }
  };
  int kind = task.substrate()->classical_kind() ? 0 : 1;
  int size = task.substrate()->size();
  h = fnv1a(h, &kind, sizeof kind);
  h = fnv1a(h, &size, sizeof size);
  for (const auto& p : task.pairs()) {
    hash_attr(p.input);
    hash_attr(p.output);
  }
  return h;
}

}  // namespace ctk::oracles
