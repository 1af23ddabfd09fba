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

// Text formats.
//
// Relation literal: disjuncts separated by '|', each one of
//   eq | universal | empty
//   cs:<Atom>[flags]        e.g. cs:NE, cs:No[co]
//   pb:<Atom>[flags]        e.g. pb:SW[oo]
//   sector(<lo>,<hi>)[flags]
// Atoms: No NE Ea SE So SW We NW Eq. Flags [cc] [co] [oc] [oo] give the lower
// and upper bound closedness; default [cc]. Angles are decimal radians or
// k*pi/m forms: 0, pi, pi/2, 3*pi/8, -pi/4, 1.25.
//
// Scenario file, one statement per line, '#' starts a comment:
//   points A B C
//   A B pb:No | pb:So       # A relative to B
//   at C sector(0,pi/2)     # C relative to the origin
// Unary statements add the reserved point __origin, pinned at (0, 0).

#ifndef SCSP_SCENARIO_HPP_
#define SCSP_SCENARIO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "scsp/network.hpp"

namespace scsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct RelationLiteral {
  GeneralRelation relation;
  ConstraintOrigin origin = ConstraintOrigin::kQuantitative;
};

// Errors are reported at line 1; columns are 1-based offsets into text.
RelationLiteral parse_relation(std::string_view text);

std::string format_angle(Angle a);
// Sectors wider than pi are printed as two pieces so the output re-parses.
std::string format_relation(const GeneralRelation& r);

Problem parse_scenario(std::string_view text);

}  // namespace scsp

#endif  // SCSP_SCENARIO_HPP_
