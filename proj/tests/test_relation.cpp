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


#include <stdexcept>

#include "doctest.h"
#include "scsp/oracle.hpp"
#include "scsp/relation.hpp"
#include "support.hpp"

namespace scsp {
namespace {

Sector sector(long lo_k, long hi_k, long m, bool lc = true, bool hc = true) {
  return *Sector::make(Angle::pi_fraction(lo_k, m), Angle::pi_fraction(hi_k, m), lc, hc);
}

GeneralRelation rel(const Sector& s) { return GeneralRelation::of(s); }

BasicRelation basic(const Sector& s) { return BasicRelation::of(s); }

AlgebraOptions logical_and_rule() {
  AlgebraOptions o;
  o.boundary = BoundaryRule::kLogicalAnd;
  return o;
}

bool near_relation(const GeneralRelation& r, Angle a, double tol) {
  for (const Sector& s : r.sectors()) {
    if (sector_contains(s, a)) return true;
    if (angular_distance(s.lo(), a) < tol || angular_distance(a, s.lo()) < tol) return true;
    if (angular_distance(s.hi(), a) < tol || angular_distance(a, s.hi()) < tol) return true;
  }
  return false;
}

TEST_CASE("converse") {
  CHECK(converse(GeneralRelation::equality()) == GeneralRelation::equality());
  CHECK(converse(rel(sector(0, 1, 2))) == rel(sector(2, 3, 2)));
  const GeneralRelation mixed(true, {sector(1, 3, 8, false, true), sector(7, 7, 8)});
  CHECK(converse(converse(mixed)) == mixed);
}

TEST_CASE("basic relations reject wide sectors") {
  CHECK_THROWS_AS(BasicRelation::of(sector(0, 3, 2)), std::invalid_argument);
  CHECK_NOTHROW(BasicRelation::of(sector(0, 1, 1)));
}

TEST_CASE("composition with equality is the identity") {
  const Sector north = sector(3, 5, 8);
  CHECK(compose_basic(BasicRelation::equality(), basic(north)) == rel(north));
  CHECK(compose_basic(basic(north), BasicRelation::equality()) == rel(north));
  CHECK(compose_basic(BasicRelation::equality(), BasicRelation::equality()) ==
        GeneralRelation::equality());
}

TEST_CASE("composition hull, logical-and closedness rule") {
  const GeneralRelation r =
      compose_basic(basic(sector(0, 1, 4)), basic(sector(1, 2, 4)), logical_and_rule());
  CHECK(r == rel(sector(0, 1, 2)));
}

TEST_CASE("composition hull, exact closedness rule") {
  CHECK(compose_basic(basic(sector(0, 1, 4)), basic(sector(1, 2, 4))) ==
        rel(sector(0, 1, 2, false, false)));
  CHECK(compose_basic(basic(sector(0, 0, 1)), basic(sector(0, 0, 1))) == rel(sector(0, 0, 1)));
  CHECK(compose_basic(basic(sector(0, 1, 4)), basic(sector(0, 0, 1))) ==
        rel(sector(0, 1, 4, true, false)));
  CHECK(compose_basic(basic(sector(0, 1, 4)), basic(sector(0, 1, 4))) == rel(sector(0, 1, 4)));
  CHECK(compose_basic(basic(sector(0, 1, 4, false, true)), basic(sector(0, 1, 4))) ==
        rel(sector(0, 1, 4, false, true)));
}

TEST_CASE("composition across a half-turn") {
  const GeneralRelation r = compose_basic(basic(sector(0, 1, 1)), basic(sector(0, 0, 1)));
  CHECK(r == GeneralRelation(true, {sector(0, 1, 1)}));
  const GeneralRelation opposite = compose_basic(basic(sector(0, 0, 1)), basic(sector(1, 1, 1)));
  CHECK(opposite == GeneralRelation(true, {sector(0, 0, 1), sector(1, 1, 1)}));
  AlgebraOptions no_eq;
  no_eq.emit_equality = false;
  CHECK_FALSE(compose_basic(basic(sector(0, 0, 1)), basic(sector(1, 1, 1)), no_eq).has_equality());
}

TEST_CASE("composition becomes universal") {
  CHECK(compose_basic(basic(sector(0, 1, 2)), basic(sector(4, 7, 4))).is_universal());
  CHECK(compose_basic(basic(sector(0, 1, 2)), basic(sector(4, 7, 4)), logical_and_rule()).is_universal());
}

TEST_CASE("general composition") {
  testing::Gen gen(3);
  for (int i = 0; i < 50; ++i) {
    GeneralRelation r = gen.general();
    if (r.is_empty()) continue;
    CHECK(compose(GeneralRelation::universal(), r).is_universal());
    CHECK(compose(GeneralRelation::empty(), r).is_empty());
  }
  const GeneralRelation eq_east(true, {sector(0, 0, 1)});
  CHECK(compose(eq_east, GeneralRelation::equality()) == eq_east);
}

TEST_CASE("intersection") {
  CHECK(intersect_basic(basic(sector(0, 1, 1)), basic(sector(1, 2, 1))) ==
        GeneralRelation(false, {sector(0, 0, 1), sector(1, 1, 1)}));
  CHECK(intersect_basic(basic(sector(0, 1, 2)), basic(sector(1, 3, 4, true, false))) ==
        rel(sector(1, 2, 4)));
  CHECK(intersect(rel(sector(1, 1, 2)), rel(sector(3, 3, 2))).is_empty());
  CHECK(intersect(GeneralRelation(true, {}), GeneralRelation(true, {})) ==
        GeneralRelation::equality());
  // A sector never contains its apex.
  CHECK(intersect_basic(BasicRelation::equality(), basic(sector(0, 1, 2))).is_empty());
  testing::Gen gen(5);
  for (int i = 0; i < 200; ++i) {
    const GeneralRelation r = gen.general();
    CHECK(intersect(r, GeneralRelation::universal()) == r);
    CHECK(intersect(r, r) == r);
  }
}

TEST_CASE("point satisfaction") {
  CHECK(sat(rel(sector(1, 1, 2)), {0, 1}, {0, 0}));
  CHECK(sat(rel(sector(0, 1, 2, false, false)), {1, 1}, {0, 0}));
  CHECK_FALSE(sat(GeneralRelation::equality(), {0, 0}, {0, 1}));
  CHECK(sat(GeneralRelation::equality(), {2, 3}, {2, 3}));
  CHECK_FALSE(sat(rel(sector(0, 1, 2)), {0, 0}, {0, 0}));
  CHECK(sat(GeneralRelation::universal(), {0, 0}, {0, 0}));
}

TEST_CASE("canonical form") {
  // Touching pieces with compatible bounds merge.
  const GeneralRelation merged(false, {sector(0, 1, 4, true, false), sector(1, 2, 4)});
  CHECK(merged == rel(sector(0, 1, 2)));
  CHECK(merged.sectors().size() == 1);
  // A gap at one excluded ray stays split.
  const GeneralRelation split(false, {sector(0, 1, 4, true, false), sector(1, 2, 4, false, true)});
  CHECK(split.sectors().size() == 2);
  CHECK(GeneralRelation(true, {Sector::full()}).is_universal());
  CHECK_FALSE(GeneralRelation(false, {Sector::full()}).is_universal());
}

TEST_CASE("converse and satisfaction agree on random pairs") {
  testing::Gen gen(11);
  for (int i = 0; i < 10000; ++i) {
    const GeneralRelation r = gen.general();
    const Point b = gen.point();
    const Point a = gen.coin() ? gen.place(r, b) : gen.point();
    REQUIRE(sat(r, a, b) == sat(converse(r), b, a));
    REQUIRE(converse(converse(r)) == r);
  }
}

TEST_CASE("composition is sound on constructed triples") {
  testing::Gen gen(13);
  int premises = 0;
  for (int i = 0; i < 10000; ++i) {
    const GeneralRelation r = gen.general();
    const GeneralRelation s = gen.general();
    const Point c = gen.point();
    const Point b = gen.place(s, c);
    const Point a = gen.place(r, b);
    if (!sat(r, a, b) || !sat(s, b, c)) continue;
    ++premises;
    INFO("r = ", r.debug_string(), ", s = ", s.debug_string());
    REQUIRE(sat(compose(r, s), a, c));
  }
  CHECK(premises > 3000);
}

TEST_CASE("intersection and union are pointwise") {
  testing::Gen gen(17);
  for (int i = 0; i < 10000; ++i) {
    const GeneralRelation r = gen.general();
    const GeneralRelation s = gen.general();
    const Point b = gen.point();
    const Point a = gen.place(gen.coin() ? r : s, b);
    INFO("r = ", r.debug_string(), ", s = ", s.debug_string());
    REQUIRE(sat(intersect(r, s), a, b) == (sat(r, a, b) && sat(s, a, b)));
    REQUIRE(sat(unite(r, s), a, b) == (sat(r, a, b) || sat(s, a, b)));
  }
}

TEST_CASE("normalization is idempotent and disjuncts partition") {
  testing::Gen gen(19);
  for (int i = 0; i < 5000; ++i) {
    const GeneralRelation r = gen.general();
    const GeneralRelation again(r.has_equality(), r.sectors());
    REQUIRE(again == r);
    REQUIRE(again.sectors().size() == r.sectors().size());
    for (std::size_t k = 0; k < r.sectors().size(); ++k) {
      REQUIRE(again.sectors()[k].same_as(r.sectors()[k]));
    }
    const std::vector<BasicRelation> parts = r.disjuncts(kPi);
    const Point b = gen.point();
    const Point a = gen.place(r, b);
    int hits = 0;
    for (const BasicRelation& p : parts) hits += sat(p, a, b) ? 1 : 0;
    REQUIRE(hits == (sat(r, a, b) ? 1 : 0));
  }
}

TEST_CASE("universal hull subsumes the inequality condition") {
  testing::Gen gen(23);
  int triggered = 0;
  for (int i = 0; i < 20000; ++i) {
    const Sector r = gen.basic_sector();
    const Sector s = gen.basic_sector();
    const double b1 = angular_distance(r.lo(), r.hi());
    const double a2 = angular_distance(r.lo(), s.lo());
    const double b2 = angular_distance(r.lo(), s.hi());
    const bool wraps = angular_distance(r.lo(), s.lo()) + s.span() >= kTwoPi;
    const double e = 1e-9;
    const bool narrow = b1 + e < a2 && a2 + e < b1 + kPi && b2 > b1 + kPi + e && !wraps;
    if (!narrow) continue;
    ++triggered;
    INFO("r = ", r.debug_string(), ", s = ", s.debug_string());
    REQUIRE(compose_basic(basic(r), basic(s)).is_universal());
  }
  CHECK(triggered > 100);
}

TEST_CASE("composition agrees with the vector-sum oracle") {
  OracleBudget budget;
  budget.samples = 20000;
  testing::Gen gen(29);
  for (int i = 0; i < 200; ++i) {
    const Sector r = gen.basic_sector();
    const Sector s = gen.basic_sector();
    const GeneralRelation composed = compose_basic(basic(r), basic(s));
    const CompositionSample sample = compose_oracle(r, s, budget, 1e-6);
    INFO("r = ", r.debug_string(), ", s = ", s.debug_string());
    for (long long bin : sample.bins) {
      REQUIRE(near_relation(composed, sample.bin_angle(bin), 2e-6));
    }
    if (sample.equality_seen) REQUIRE(composed.has_equality());
  }
}

TEST_CASE("hull interiors are realized") {
  OracleBudget budget;
  budget.samples = 40000;
  const double width = 0.01;
  const std::vector<std::pair<Sector, Sector>> pairs = {
      {sector(0, 1, 4), sector(1, 2, 4)},
      {sector(3, 5, 8), sector(1, 3, 8)},
      {sector(15, 1, 8), sector(6, 7, 8)},
  };
  for (const auto& [r, s] : pairs) {
    const GeneralRelation composed = compose_basic(basic(r), basic(s));
    REQUIRE(composed.sectors().size() == 1);
    const Sector hull = composed.sectors().front();
    const CompositionSample sample = compose_oracle(r, s, budget, width);
    const long long bins = static_cast<long long>(hull.span() / width);
    for (long long k = 2; k + 2 < bins; ++k) {
      const double theta = Angle(hull.lo().radians() + k * width).radians();
      CHECK(sample.bins.count(static_cast<long long>(std::floor(theta / width))) == 1);
    }
  }
}

}  // namespace
}  // namespace scsp
