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

// Thin bindings: each operation returns its report as a JSON string, the
// Python package decodes it.  Keeps the ABI surface to strings and one
// opaque model handle.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctk/errors.hpp"
#include "ctk/model_io.hpp"
#include "ctk/report.hpp"
#include "ctk/superinfo.hpp"

namespace py = pybind11;

using ctk::Variable;
using ctk::models::Model;
using ctk::oracles::OracleConfig;

namespace {

OracleConfig seeded(const Model& model, std::optional<uint64_t> seed) {
  OracleConfig cfg = model.oracle;
  if (seed) cfg.seed = *seed;
  return cfg;
}

std::string verdict_report(const ctk::oracles::Verdict& v) {
  return ctk::reports::verdict_json(v).dump();
}

}  // namespace

PYBIND11_MODULE(_ctk, m) {
  m.doc() = "finite-model workbench core";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ctk::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<Model>(m, "Model")
      .def_property_readonly("name", [](const Model& model) { return model.name; })
      .def_property_readonly("substrates",
                             [](const Model& model) { return model.substrate_ids; })
      .def_property_readonly("attributes",
                             [](const Model& model) { return model.attribute_names; })
      .def_property_readonly("variables",
                             [](const Model& model) { return model.variable_names; });

  m.def("load_model", &ctk::models::load_model, py::arg("path"));
  m.def("parse_model", &ctk::models::parse_model, py::arg("text"),
        py::arg("origin") = "<memory>");

  m.def(
      "distinguish_json",
      [](const Model& model, const std::string& variable, std::optional<uint64_t> seed) {
        return verdict_report(
            ctk::info::is_distinguishable(model.variable(variable), seeded(model, seed)));
      },
      py::arg("model"), py::arg("variable"), py::arg("seed") = py::none());

  m.def(
      "clone_check_json",
      [](const Model& model, const std::string& variable, const std::string& blank,
         std::optional<uint64_t> seed) {
        const Variable& x = model.variable(variable);
        auto blanks = ctk::models::preparable_blanks(model, x.substrate(), blank);
        return verdict_report(
            ctk::info::is_clonable(x.attributes(), blanks, seeded(model, seed)));
      },
      py::arg("model"), py::arg("variable"), py::arg("blank") = "",
      py::arg("seed") = py::none());

  m.def(
      "info_var_json",
      [](const Model& model, const std::string& variable, const std::string& blank,
         std::optional<uint64_t> seed) {
        const Variable& x = model.variable(variable);
        auto blanks = ctk::models::preparable_blanks(model, x.substrate(), blank);
        return verdict_report(
            ctk::info::is_information_variable(x, blanks, seeded(model, seed)));
      },
      py::arg("model"), py::arg("variable"), py::arg("blank") = "",
      py::arg("seed") = py::none());

  m.def(
      "observable_json",
      [](const Model& model, const std::string& variable, std::optional<uint64_t> seed) {
        return verdict_report(
            ctk::info::is_observable(model.variable(variable), seeded(model, seed)));
      },
      py::arg("model"), py::arg("variable"), py::arg("seed") = py::none());

  m.def(
      "measure_json",
      [](const Model& model, const std::string& variable, std::optional<uint64_t> seed) {
        const Variable& x = model.variable(variable);
        auto spec = ctk::info::canonical_measurer(x, model.oracle.tol);
        return verdict_report(ctk::info::is_measurer_of(spec, x, seeded(model, seed)));
      },
      py::arg("model"), py::arg("variable"), py::arg("seed") = py::none());

  m.def(
      "superinfo_json",
      [](const Model& model, const std::string& blank, std::optional<uint64_t> seed) {
        std::vector<Variable> candidates;
        for (const auto& name : model.variable_names) {
          candidates.push_back(model.variables.at(name));
        }
        if (candidates.empty()) {
          throw ctk::Error(ctk::ErrorCode::ValidationError,
                           "the model declares no variables");
        }
        auto blanks = ctk::models::preparable_blanks(
            model, candidates.front().substrate(), blank);
        auto report = ctk::superinfo::detect_superinformation(candidates, blanks,
                                                              seeded(model, seed));
        ctk::reports::ordered_json body;
        body["found"] = report.found;
        if (report.found) {
          body["first"] = model.variable_names[static_cast<size_t>(report.first)];
          body["second"] = model.variable_names[static_cast<size_t>(report.second)];
        }
        if (!report.note.empty()) body["note"] = report.note;
        return body.dump();
      },
      py::arg("model"), py::arg("blank") = "", py::arg("seed") = py::none());

  m.def(
      "theorem_json",
      [](const std::string& section, std::optional<uint64_t> seed) {
        OracleConfig cfg;
        if (seed) cfg.seed = *seed;
        return ctk::reports::theorem_json(ctk::superinfo::check_theorem(section, cfg))
            .dump();
      },
      py::arg("section"), py::arg("seed") = py::none());

  m.def(
      "principle_json",
      [](const std::string& principle, std::optional<uint64_t> seed) {
        OracleConfig cfg;
        if (seed) cfg.seed = *seed;
        return ctk::reports::principle_json(
                   ctk::principles::check_principle(principle, cfg))
            .dump();
      },
      py::arg("principle"), py::arg("seed") = py::none());

  m.def(
      "falsify_json",
      [](int max_states, int budget) {
        return ctk::reports::falsify_json(
                   ctk::principles::falsify_classical(max_states, budget))
            .dump();
      },
      py::arg("max_states"), py::arg("budget") = 4);

  m.def(
      "capacity_json",
      [](const Model& model, const std::string& substrate, std::optional<uint64_t> seed) {
        std::string id = substrate;
        if (id.empty()) {
          if (model.substrate_ids.empty()) {
            throw ctk::Error(ctk::ErrorCode::ValidationError,
                             "the model declares no substrates");
          }
          id = model.substrate_ids.front();
        }
        return ctk::reports::capacity_json(
                   ctk::info::info_capacity(model.substrate(id), seeded(model, seed)))
            .dump();
      },
      py::arg("model"), py::arg("substrate") = "", py::arg("seed") = py::none());
}
