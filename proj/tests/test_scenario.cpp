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


#include "doctest.h"
#include "scsp/scenario.hpp"
#include "scsp/search.hpp"
#include "support.hpp"

namespace scsp {
namespace {

GeneralRelation sector(long lo, long hi, long m, bool lc = true, bool hc = true) {
  return GeneralRelation::of(
      *Sector::make(Angle::pi_fraction(lo, m), Angle::pi_fraction(hi, m), lc, hc));
}

TEST_CASE("relation literals") {
  CHECK(parse_relation("eq").relation == GeneralRelation::equality());
  CHECK(parse_relation("universal").relation.is_universal());
  CHECK(parse_relation("empty").relation.is_empty());
  CHECK(parse_relation("sector(0,pi/2)").relation == sector(0, 1, 2));
  CHECK(parse_relation(" sector( 3*pi/8 , 5*pi/8 )[co] ").relation == sector(3, 5, 8, true, false));
  CHECK(parse_relation("sector(-pi/4,pi/4)[oo]").relation == sector(7, 1, 4, false, false));
  CHECK(parse_relation("sector(0.5,1.5)").relation ==
        GeneralRelation::of(*Sector::make(Angle(0.5), Angle(1.5), true, true)));
  CHECK(parse_relation("cs:No[co]").relation == sector(3, 5, 8, true, false));
  CHECK(parse_relation("pb:NE").relation == sector(0, 1, 2));
  CHECK(parse_relation("pb:No[oc]").relation.is_empty());
  CHECK(parse_relation("pb:No | pb:So").relation ==
        GeneralRelation(false, {*Sector::make(Angle(kPi / 2), Angle(kPi / 2), true, true),
                                *Sector::make(Angle(3 * kPi / 2), Angle(3 * kPi / 2), true, true)}));
}

TEST_CASE("literal origins") {
  CHECK(parse_relation("cs:No | cs:NE").origin == ConstraintOrigin::kConeShaped);
  CHECK(parse_relation("cs:No | eq").origin == ConstraintOrigin::kConeShaped);
  CHECK(parse_relation("pb:So").origin == ConstraintOrigin::kProjectionBased);
  CHECK(parse_relation("pb:So | cs:No").origin == ConstraintOrigin::kQuantitative);
  CHECK(parse_relation("pb:So | sector(0,pi)").origin == ConstraintOrigin::kQuantitative);
  CHECK(parse_relation("eq").origin == ConstraintOrigin::kQuantitative);
}

TEST_CASE("literal errors carry a column") {
  auto column_of = [](const char* text) -> std::size_t {
    try {
      parse_relation(text);
    } catch (const ParseError& e) {
      return e.column();
    }
    return 0;
  };
  CHECK(column_of("sector(0,pi/2") == 14);
  CHECK(column_of("cs:Up") == 4);
  CHECK(column_of("eq | foo") == 6);
  CHECK(column_of("sector(0,3*pi/2)") == 1);
  CHECK(column_of("sector(0,pi)[xy]") == 14);
  CHECK(column_of("eq eq") == 4);
}

TEST_CASE("angle printing") {
  CHECK(format_angle(Angle(0.0)) == "0");
  CHECK(format_angle(Angle(kPi)) == "pi");
  CHECK(format_angle(Angle::pi_fraction(1, 2)) == "pi/2");
  CHECK(format_angle(Angle::pi_fraction(15, 8)) == "15*pi/8");
  CHECK(format_angle(Angle(1.0)) == "1");
  CHECK(format_angle(Angle(0.3)) == "0.29999999999999999");
}

TEST_CASE("printed relations parse back") {
  testing::Gen gen(79);
  for (int i = 0; i < 3000; ++i) {
    const GeneralRelation r = gen.general();
    const std::string text = format_relation(r);
    INFO(text);
    REQUIRE(parse_relation(text).relation == r);
  }
  CHECK(format_relation(GeneralRelation::universal()) == "universal");
  CHECK(format_relation(GeneralRelation::empty()) == "empty");
  CHECK(format_relation(unite(sector(0, 1, 2, true, false), GeneralRelation::equality())) ==
        "eq | sector(0,pi/2)[co]");
}

TEST_CASE("scenario files") {
  const Problem p = parse_scenario(
      "# three points\n"
      "points A B\n"
      "points C\n"
      "A B pb:No | pb:So   # disjunction\n"
      "\n"
      "at C sector(0,pi/2)[oo]\n");
  REQUIRE(p.names == std::vector<std::string>{kOriginName, "A", "B", "C"});
  REQUIRE(p.constraints.size() == 2);
  CHECK(p.constraints[0].from == 1);
  CHECK(p.constraints[0].to == 2);
  CHECK(p.constraints[0].origin == ConstraintOrigin::kProjectionBased);
  CHECK(p.constraints[1].from == 3);
  CHECK(p.constraints[1].to == 0);
  CHECK(p.constraints[1].relation == sector(0, 1, 2, false, false));

  const Problem plain = parse_scenario("points A B\nA B eq\n");
  CHECK(plain.names == std::vector<std::string>{"A", "B"});
}

TEST_CASE("scenario errors carry line and column") {
  auto where = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_scenario(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(where("points A A\n") == std::pair<std::size_t, std::size_t>{1, 10});
  CHECK(where("points A B\nA C eq\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(where("points A B\n\nA B sector(0,pi/2\n") == std::pair<std::size_t, std::size_t>{3, 18});
  CHECK(where("points __origin\n") == std::pair<std::size_t, std::size_t>{1, 8});
  CHECK(where("points A\nat\n") == std::pair<std::size_t, std::size_t>{2, 3});
}

}  // namespace
}  // namespace scsp
