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

#ifndef CTK_PRINCIPLES_HPP
#define CTK_PRINCIPLES_HPP

#include "ctk/superinfo.hpp"

namespace ctk::principles {

struct PrincipleResult {
  std::string id;
  bool holds = false;
  std::vector<std::pair<std::string, std::string>> facts;
};

/// The recognized principle ids, in order.
const std::vector<std::string>& principle_ids();

/// Checks one principle ("II" .. "IX") on the built-in sample media.
PrincipleResult check_principle(const std::string& id, const oracles::OracleConfig& cfg = {});

struct FalsifyReport {
  int max_states = 0;
  long long variables_checked = 0;
  long long union_pairs_checked = 0;
  bool counterexample_found = false;
  std::string counterexample;
};

/// Exhaustive search over classical models with up to `max_states` states:
/// every partition of every nonempty subset becomes a variable, and each is
/// screened for separability, closure, measurability, and the absence of
/// superinformation. Throws BudgetExceeded when `max_states` exceeds
/// `budget`.
FalsifyReport falsify_classical(int max_states, int budget = 4,
                                const oracles::OracleConfig& cfg = {});

}  // namespace ctk::principles

#endif
