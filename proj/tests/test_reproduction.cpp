// Copyright 2026 The narrowband Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "error.hpp"
#include "reproduction.hpp"
#include "test_support.hpp"

using namespace narrowband;
using namespace narrowband::testing;

TEST_CASE("reproduced table") {
  const auto rows = reproduce_table();
  REQUIRE(rows.size() == 16);
  const auto table = reference_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].subfamily == table[i].subfamily);
    CHECK(rows[i].net_rotation == table[i].net_rotation());
  }
  const ReproducedRow &t1 = rows[0];
  REQUIRE(t1.subfamily == Subfamily::time_minimal);
  CHECK_NEAR(t1.net_rotation, kPi / 4, 1e-15);
  CHECK_NEAR(t1.pulse_area, 5.7055, 5e-4);

  const ReproducedRow &e7 = rows[14];
  REQUIRE(e7.subfamily == Subfamily::error_minimal);
  CHECK_NEAR(e7.net_rotation, 7 * kPi / 4, 1e-15);
  CHECK_NEAR(e7.infidelity_coeff, 13.3445, 5e-4);

  CHECK(objective_for(Subfamily::time_minimal) == Objective::area);
  CHECK(objective_for(Subfamily::error_minimal) == Objective::infidelity);
}

TEST_CASE("every reference row verifies") {
  for (const RowReport &r : verify_reference_table()) {
    INFO("row " << r.index << " worst " << r.worst_field << " delta "
                << r.max_delta << " " << r.error);
    CHECK(r.pass);
    CHECK(r.error.empty());
    CHECK(r.max_delta <= kTableTolerance);
    // 4 optimizer fields, 5 angles, area, and the phases that were printed.
    CHECK(r.fields.size() >= 10);
  }
}

TEST_CASE("a tighter tolerance exposes table rounding") {
  VerifyOptions strict;
  strict.tolerance = 1e-6;
  int failures = 0;
  for (const RowReport &r : verify_reference_table(strict))
    failures += r.pass ? 0 : 1;
  CHECK(failures > 0);
}

TEST_CASE("the printed sk1 phase sign fails verification") {
  VerifyOptions printed;
  printed.seed = Sk1Convention::as_printed;
  for (const RowReport &r : verify_reference_table(printed)) {
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.error.empty());
  }
}

TEST_CASE("verify rejects a bad index") {
  CHECK_THROWS_AS(verify_row(16), Error);
}
