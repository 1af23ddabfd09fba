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

// Relation algebra over point pairs in the plane. A relation R(x, y) constrains
// the direction of x as seen from y: x == y (the equality atom) or the angle of
// the vector y->x falls in one of a set of angular sectors. A sector never
// contains the apex, so sector disjuncts entail x != y.

#ifndef SCSP_RELATION_HPP_
#define SCSP_RELATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "scsp/angle.hpp"

namespace scsp {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

bool points_coincide(Point a, Point b);

// How compose_basic closes the bounds of a hull result.
enum class BoundaryRule {
  // A hull bound is closed iff that direction is actually realizable.
  kExact,
  // Lower (upper) bound closed iff both operands' lower (upper) bounds are.
  kLogicalAnd,
};

struct AlgebraOptions {
  // Add the equality atom to a composition when x == z is realizable.
  bool emit_equality = true;
  BoundaryRule boundary = BoundaryRule::kExact;
};

// Equality, or a single sector of span at most pi.
class BasicRelation {
 public:
  static BasicRelation equality() { return BasicRelation(std::nullopt); }
  // Throws std::invalid_argument when the sector spans more than pi.
  static BasicRelation of(const Sector& s);

  bool is_equality() const { return !sector_.has_value(); }
  // Precondition: !is_equality().
  const Sector& sector() const { return *sector_; }

 private:
  explicit BasicRelation(std::optional<Sector> s) : sector_(std::move(s)) {}
  std::optional<Sector> sector_;
};

// Canonical disjunction: optional equality plus pairwise disjoint,
// non-touching sectors sorted by lower bound.
class GeneralRelation {
 public:
  GeneralRelation() = default;  // the empty relation
  GeneralRelation(bool has_equality, const std::vector<Sector>& sectors);

  static GeneralRelation empty() { return {}; }
  static GeneralRelation universal();
  static GeneralRelation equality() { return GeneralRelation(true, {}); }
  static GeneralRelation of(const Sector& s) { return GeneralRelation(false, {s}); }
  static GeneralRelation of(const BasicRelation& b);

  bool has_equality() const { return has_equality_; }
  const std::vector<Sector>& sectors() const { return sectors_; }

  bool is_empty() const { return !has_equality_ && sectors_.empty(); }
  // Full circle plus equality: no information.
  bool is_universal() const;
  // Exactly one disjunct, which is a basic relation.
  bool is_basic() const;

  // Splits every sector wider than max_span at its midpoint (repeatedly) so
  // each piece spans at most max_span; equality comes first when present.
  // The pieces partition the relation.
  std::vector<BasicRelation> disjuncts(double max_span = kPi) const;

  bool operator==(const GeneralRelation& other) const;
  bool subset_of(const GeneralRelation& other) const;

  std::string debug_string() const;

 private:
  bool has_equality_ = false;
  std::vector<Sector> sectors_;
};

// Canonical union of an arbitrary list of sectors.
std::vector<Sector> normalize_sectors(const std::vector<Sector>& sectors);
std::vector<Sector> intersect_sectors(const std::vector<Sector>& a,
                                      const std::vector<Sector>& b);

GeneralRelation converse(const GeneralRelation& r);

// Smallest cyclic sector containing the closures of a and b, or nullopt when
// that choice is ambiguous (a and b are antipodal rays).
std::optional<Sector> angular_hull(const Sector& a, const Sector& b);

// True when some direction t in a has t + pi in b.
bool has_antipodal_pair(const Sector& a, const Sector& b);

GeneralRelation compose_basic(const BasicRelation& r, const BasicRelation& s,
                              const AlgebraOptions& options = {});
GeneralRelation compose(const GeneralRelation& r, const GeneralRelation& s,
                        const AlgebraOptions& options = {});

GeneralRelation intersect_basic(const BasicRelation& r, const BasicRelation& s);
GeneralRelation intersect(const GeneralRelation& r, const GeneralRelation& s);
GeneralRelation unite(const GeneralRelation& r, const GeneralRelation& s);

// r(a, b): a relative to b.
bool sat(const GeneralRelation& r, Point a, Point b);
bool sat(const BasicRelation& r, Point a, Point b);

}  // namespace scsp

#endif  // SCSP_RELATION_HPP_
