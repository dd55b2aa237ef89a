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

#include "ctk/errors.hpp"
#include "ctk/principles.hpp"

using namespace ctk;
using namespace ctk::principles;

TEST_CASE("the recognized principles are listed in order") {
  const auto& ids = principle_ids();
  std::vector<std::string> expected = {"II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
  CHECK(ids == expected);
}

TEST_CASE("every principle passes on the sample media") {
  for (const auto& id : principle_ids()) {
    CAPTURE(id);
    PrincipleResult result = check_principle(id);
    CHECK(result.id == id);
    CHECK(result.holds);
    CHECK_FALSE(result.facts.empty());
  }
}

TEST_CASE("unknown principle ids are rejected") {
  CHECK_THROWS_AS(check_principle("I"), Error);
  CHECK_THROWS_AS(check_principle("X"), Error);
  CHECK_THROWS_AS(check_principle(""), Error);
}

TEST_CASE("the classical sweep finds no counterexample") {
  FalsifyReport two = falsify_classical(2);
  CHECK(two.max_states == 2);
  CHECK(two.variables_checked == 4);
  CHECK(two.union_pairs_checked == 0);
  CHECK_FALSE(two.counterexample_found);
  CHECK(two.counterexample.empty());

  FalsifyReport three = falsify_classical(3);
  CHECK(three.variables_checked == 18);
  CHECK(three.union_pairs_checked == 0);
  CHECK_FALSE(three.counterexample_found);

  // counts are cumulative over the state-count ladder: Bell(1)..Bell(4) sums
  // to 69 partitions, and the only unions of disjoint full-support variables
  // on four states are the three pairings of complementary two-subsets
  FalsifyReport four = falsify_classical(4);
  CHECK(four.variables_checked == 69);
  CHECK(four.union_pairs_checked == 3);
  CHECK_FALSE(four.counterexample_found);
}

TEST_CASE("the sweep guards its budget and its floor") {
  CHECK_THROWS_AS(falsify_classical(1), Error);
  CHECK_THROWS_AS(falsify_classical(0), Error);
  CHECK_THROWS_AS(falsify_classical(5), Error);
  CHECK_THROWS_AS(falsify_classical(5, 4), Error);
  FalsifyReport lifted = falsify_classical(3, 3);
  CHECK(lifted.variables_checked == 18);
}
