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

#ifndef CTK_REPORT_HPP
#define CTK_REPORT_HPP

#include <json.hpp>

#include "ctk/info.hpp"
#include "ctk/principles.hpp"

namespace ctk::reports {

using ordered_json = nlohmann::ordered_json;

/// Rounds to `digits` significant decimal digits.  Every floating value in a
/// report goes through this, so reruns with the same seed are byte-identical.
double round_significant(double x, int digits = 12);

ordered_json verdict_json(const oracles::Verdict& v);
ordered_json theorem_json(const superinfo::TheoremCheck& check);
ordered_json principle_json(const principles::PrincipleResult& result);
ordered_json falsify_json(const principles::FalsifyReport& report);
ordered_json capacity_json(const info::InfoCapacity& cap);

/// Flat "key: value" rendering for terminals; nested objects indent two spaces.
std::string render_text(const ordered_json& j);

}  // namespace ctk::reports

#endif  // CTK_REPORT_HPP
