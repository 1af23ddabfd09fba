// Copyright 2026 The scsp Authors.
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


#include <cmath>
#include <set>

#include "doctest.h"
#include "scsp/oracle.hpp"

namespace scsp {
namespace {

GeneralRelation pb(Direction d) { return atom_region({Calculus::kProjectionBased, d}); }

Sector eighths(long lo, long hi) {
  return *Sector::make(Angle::pi_fraction(lo, 8), Angle::pi_fraction(hi, 8), true, true);
}

TEST_CASE("witness sampling") {
  const Network mixed = from_constraints(3, {{0, 1, unite(pb(Direction::kNo), pb(Direction::kSo))},
                                             {1, 2, pb(Direction::kNo)},
                                             {0, 2, pb(Direction::kSo)}});
  const std::optional<Witness> w = sample_witness(mixed, {});
  REQUIRE(w.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(sat(mixed.at(i, j), w->points[i], w->points[j]));
  }

  const Network contradiction = from_constraints(2, {{0, 1, pb(Direction::kNo)}, {0, 1, pb(Direction::kSo)}});
  OracleBudget small;
  small.samples = 2000;
  CHECK_FALSE(sample_witness(contradiction, small).has_value());
  CHECK(sample_witness(Network(1), small).has_value());
}

TEST_CASE("sampling is deterministic under a seed") {
  const Network net = from_constraints(2, {{0, 1, pb(Direction::kNE)}});
  OracleBudget budget;
  budget.seed = 9;
  const Witness a = *sample_witness(net, budget);
  const Witness b = *sample_witness(net, budget);
  CHECK(a.points[0].x == b.points[0].x);
  CHECK(a.points[1].y == b.points[1].y);
}

TEST_CASE("vector-sum directions") {
  OracleBudget budget;
  budget.samples = 20000;
  const double width = 0.01;
  const CompositionSample hull = compose_oracle(eighths(0, 2), eighths(2, 4), budget, width);
  CHECK(*hull.bins.begin() == 0);
  CHECK(*hull.bins.rbegin() >= static_cast<long long>(kPi / 2 / width) - 1);
  CHECK(*hull.bins.rbegin() <= static_cast<long long>(kPi / 2 / width));
  CHECK(hull.bins.size() > 140);
  CHECK_FALSE(hull.equality_seen);

  const CompositionSample same = compose_oracle(eighths(0, 0), eighths(0, 0), budget);
  CHECK(same.bins == std::set<long long>{0});

  const CompositionSample opposite = compose_oracle(eighths(0, 0), eighths(8, 8), budget, width);
  CHECK(opposite.equality_seen);
  CHECK(opposite.bins == std::set<long long>{0, static_cast<long long>(std::floor(kPi / width))});
}

TEST_CASE("table check") {
  OracleBudget budget;
  budget.grid_extent = 2;
  for (Calculus c : {Calculus::kConeShaped, Calculus::kProjectionBased}) {
    const TableReport report = table_check(c, budget);
    CHECK(report.triples_checked == 25 * 25 * 25);
    CHECK(report.violations.empty());
  }
  budget.samples = 0;
  const TableReport vacuous = table_check(Calculus::kProjectionBased, budget);
  CHECK(vacuous.triples_checked == 0);
  CHECK(vacuous.violations.empty());
}

}  // namespace
}  // namespace scsp
