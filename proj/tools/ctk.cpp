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

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "ctk/errors.hpp"
#include "ctk/model_io.hpp"
#include "ctk/report.hpp"
#include "ctk/superinfo.hpp"

namespace {

using ctk::Attribute;
using ctk::SubstratePtr;
using ctk::Variable;
using ctk::oracles::OracleConfig;
using ctk::oracles::Verdict;
using ctk::oracles::VerdictKind;
using ctk::reports::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct Outcome {
  ordered_json body;
  int exit_code = kExitOk;
};

int verdict_exit(const Verdict& v) {
  return v.kind == VerdictKind::Unknown ? kExitUnknown : kExitOk;
}

ctk::models::Model load(const std::string& path, const std::optional<uint64_t>& seed) {
  ctk::models::Model model = ctk::models::load_model(path);
  if (seed) model.oracle.seed = *seed;
  return model;
}

const std::vector<std::string>& section_ids() {
  static const std::vector<std::string> ids = {"8.1", "8.2", "8.3", "8.4",
                                               "8.5", "8.6", "8.7", "8.9"};
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ctk: a finite-model workbench for possibility questions"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::optional<uint64_t> seed;
  bool as_json = false;
  bool as_text = false;
  bool timings = false;
  std::string out_path;
  app.add_option("--seed", seed, "override the search seed");
  app.add_flag("--json", as_json, "emit a JSON report");
  app.add_flag("--text", as_text, "emit a plain-text report (default)");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_flag("--timings", timings, "include wall-clock timings in the report");

  std::function<Outcome()> run;

  std::string model_path, var_name, blank_name, substrate_id;
  std::string section, principle;
  int max_states = 3;
  int budget = 4;

  auto* distinguish = app.add_subcommand("distinguish", "can the members be told apart?");
  distinguish->add_option("model", model_path, "model file")->required();
  distinguish->add_option("variable", var_name, "variable name")->required();
  distinguish->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      Verdict v = ctk::info::is_distinguishable(model.variable(var_name), model.oracle);
      return {ctk::reports::verdict_json(v), verdict_exit(v)};
    };
  });

  auto* clone_check = app.add_subcommand("clone-check", "can the members be copied?");
  clone_check->add_option("model", model_path, "model file")->required();
  clone_check->add_option("variable", var_name, "variable name")->required();
  clone_check->add_option("--blank", blank_name, "prepare the copy from this attribute");
  clone_check->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      const Variable& x = model.variable(var_name);
      auto blanks = ctk::models::preparable_blanks(model, x.substrate(), blank_name);
      Verdict v = ctk::info::is_clonable(x.attributes(), blanks, model.oracle);
      return {ctk::reports::verdict_json(v), verdict_exit(v)};
    };
  });

  auto* info_var = app.add_subcommand("info-var", "is it an information variable?");
  info_var->add_option("model", model_path, "model file")->required();
  info_var->add_option("variable", var_name, "variable name")->required();
  info_var->add_option("--blank", blank_name, "prepare copies from this attribute");
  info_var->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      const Variable& x = model.variable(var_name);
      auto blanks = ctk::models::preparable_blanks(model, x.substrate(), blank_name);
      Verdict v = ctk::info::is_information_variable(x, blanks, model.oracle);
      return {ctk::reports::verdict_json(v), verdict_exit(v)};
    };
  });

  auto* observable = app.add_subcommand("observable", "is it an observable?");
  observable->add_option("model", model_path, "model file")->required();
  observable->add_option("variable", var_name, "variable name")->required();
  observable->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      Verdict v = ctk::info::is_observable(model.variable(var_name), model.oracle);
      return {ctk::reports::verdict_json(v), verdict_exit(v)};
    };
  });

  auto* measure = app.add_subcommand("measure", "build and check the canonical measurer");
  measure->add_option("model", model_path, "model file")->required();
  measure->add_option("variable", var_name, "variable name")->required();
  measure->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      const Variable& x = model.variable(var_name);
      auto spec = ctk::info::canonical_measurer(x, model.oracle.tol);
      Verdict v = ctk::info::is_measurer_of(spec, x, model.oracle);
      ordered_json body;
      body["pointer"] = spec.pointer->id();
      ordered_json marks = ordered_json::array();
      for (const auto& m : spec.pointer_marks) marks.push_back(m.describe());
      body["marks"] = marks;
      body["measures"] = ctk::reports::verdict_json(v);
      return {body, verdict_exit(v)};
    };
  });

  auto* superinfo = app.add_subcommand("superinfo", "look for a superinformation pair");
  superinfo->add_option("model", model_path, "model file")->required();
  superinfo->add_option("--blank", blank_name, "prepare copies from this attribute");
  superinfo->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      std::vector<Variable> candidates;
      for (const auto& name : model.variable_names) {
        candidates.push_back(model.variables.at(name));
      }
      if (candidates.empty()) {
        throw ctk::Error(ctk::ErrorCode::ValidationError,
                         "the model declares no variables");
      }
      auto blanks = ctk::models::preparable_blanks(model, candidates.front().substrate(), blank_name);
      auto report = ctk::superinfo::detect_superinformation(candidates, blanks, model.oracle);
      ordered_json body;
      body["found"] = report.found;
      if (report.found) {
        body["first"] = model.variable_names[static_cast<size_t>(report.first)];
        body["second"] = model.variable_names[static_cast<size_t>(report.second)];
        body["union_check"] = ctk::reports::verdict_json(report.union_check);
      }
      if (!report.note.empty()) body["note"] = report.note;
      return {body, kExitOk};
    };
  });

  auto* theorems = app.add_subcommand("theorems", "verify the superinformation results");
  theorems->add_option("--section", section, "one of 8.1 .. 8.7, 8.9 (default: all)");
  theorems->callback([&] {
    run = [&]() -> Outcome {
      OracleConfig cfg;
      if (seed) cfg.seed = *seed;
      std::vector<std::string> ids =
          section.empty() ? section_ids() : std::vector<std::string>{section};
      ordered_json body = ordered_json::array();
      bool all_hold = true;
      for (const auto& id : ids) {
        auto check = ctk::superinfo::check_theorem(id, cfg);
        all_hold = all_hold && check.holds;
        body.push_back(ctk::reports::theorem_json(check));
      }
      ordered_json wrapped;
      wrapped["sections"] = body;
      wrapped["all_hold"] = all_hold;
      return {wrapped, all_hold ? kExitOk : kExitViolation};
    };
  });

  auto* check = app.add_subcommand("check", "check the principles on sample media");
  check->add_option("--principle", principle, "one of II .. IX (default: all)");
  check->callback([&] {
    run = [&]() -> Outcome {
      OracleConfig cfg;
      if (seed) cfg.seed = *seed;
      std::vector<std::string> ids = principle.empty()
                                         ? ctk::principles::principle_ids()
                                         : std::vector<std::string>{principle};
      ordered_json body = ordered_json::array();
      bool all_hold = true;
      for (const auto& id : ids) {
        auto result = ctk::principles::check_principle(id, cfg);
        all_hold = all_hold && result.holds;
        body.push_back(ctk::reports::principle_json(result));
      }
      ordered_json wrapped;
      wrapped["principles"] = body;
      wrapped["all_hold"] = all_hold;
      return {wrapped, all_hold ? kExitOk : kExitViolation};
    };
  });

  auto* falsify = app.add_subcommand("falsify", "search classical models for a counterexample");
  falsify->add_option("--max-states", max_states, "largest state count to search")
      ->required();
  falsify->add_option("--budget", budget, "refuse searches beyond this state count");
  falsify->callback([&] {
    run = [&]() -> Outcome {
      OracleConfig cfg;
      if (seed) cfg.seed = *seed;
      auto report = ctk::principles::falsify_classical(max_states, budget, cfg);
      return {ctk::reports::falsify_json(report),
              report.counterexample_found ? kExitViolation : kExitOk};
    };
  });

  auto* capacity = app.add_subcommand("capacity", "information capacity of a substrate");
  capacity->add_option("model", model_path, "model file")->required();
  capacity->add_option("substrate", substrate_id, "substrate id (default: first)");
  capacity->callback([&] {
    run = [&]() -> Outcome {
      auto model = load(model_path, seed);
      if (substrate_id.empty()) {
        if (model.substrate_ids.empty()) {
          throw ctk::Error(ctk::ErrorCode::ValidationError,
                           "the model declares no substrates");
        }
        substrate_id = model.substrate_ids.front();
      }
      auto cap = ctk::info::info_capacity(model.substrate(substrate_id), model.oracle);
      int code = kExitOk;
      if (cap.computation.kind == VerdictKind::Unknown ||
          cap.cloning.kind == VerdictKind::Unknown) {
        code = kExitUnknown;
      }
      return {ctk::reports::capacity_json(cap), code};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  try {
    const auto started = std::chrono::steady_clock::now();
    Outcome outcome = run();
    if (timings) {
      const auto elapsed = std::chrono::steady_clock::now() - started;
      outcome.body["elapsed_ms"] =
          std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    }
    std::string rendered = as_json && !as_text
                               ? outcome.body.dump(2) + "\n"
                               : ctk::reports::render_text(outcome.body);
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
      }
      out << rendered;
    }
    return outcome.exit_code;
  } catch (const ctk::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
