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

// Random generators shared by the property tests and the acceptance suite.

#ifndef SCSP_TESTS_SUPPORT_HPP_
#define SCSP_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>
#include <vector>

#include "scsp/calculus.hpp"
#include "scsp/relation.hpp"

namespace scsp::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  // Multiples of pi/8 half the time so bounds line up with atom boundaries
  // and integer-grid directions.
  Angle angle() {
    if (coin()) return Angle::pi_fraction(integer(0, 15), 8);
    return Angle(uniform(0.0, kTwoPi));
  }

  double span() {
    switch (integer(0, 3)) {
      case 0: return 0.0;
      case 1: return kPi * integer(1, 8) / 8.0;
      default: return uniform(0.0, kPi);
    }
  }

  // A sector of span at most pi. Singletons are always closed; a half-turn
  // gets any flags.
  Sector basic_sector() {
    const double s = span();
    if (s == 0.0) return Sector::ray(angle());
    return *Sector::from_span(angle(), s, coin(), coin());
  }

  BasicRelation basic() {
    if (integer(0, 7) == 0) return BasicRelation::equality();
    return BasicRelation::of(basic_sector());
  }

  // Zero to three sectors, wider than pi after union now and then.
  GeneralRelation general() {
    if (integer(0, 19) == 0) return GeneralRelation::universal();
    std::vector<Sector> sectors;
    const int count = integer(0, 3);
    for (int i = 0; i < count; ++i) sectors.push_back(basic_sector());
    return GeneralRelation(integer(0, 3) == 0, sectors);
  }

  Point grid_point(int extent = 4) {
    return {static_cast<double>(integer(-extent, extent)),
            static_cast<double>(integer(-extent, extent))};
  }

  Point real_point(double extent = 4.0) {
    return {uniform(-extent, extent), uniform(-extent, extent)};
  }

  Point point() { return coin() ? grid_point() : real_point(); }

  // A direction in a relation's sectors, hitting closed bounds exactly now and
  // then; nullopt if the pick fell on an excluded bound.
  std::optional<double> direction_in(const Sector& s) {
    switch (integer(0, 4)) {
      case 0:
        if (!s.lo_closed()) return std::nullopt;
        return s.lo().radians();
      case 1:
        if (!s.hi_closed()) return std::nullopt;
        return s.lo().radians() + s.span();
      default: {
        const double off = uniform(0.0, 1.0) * s.span();
        if ((off == 0.0 && !s.lo_closed()) || (off == s.span() && !s.hi_closed())) {
          return std::nullopt;
        }
        return s.lo().radians() + off;
      }
    }
  }

  // A point placed relative to b by a random disjunct of r.
  Point place(const GeneralRelation& r, Point b) {
    const std::vector<BasicRelation> parts = r.disjuncts(kPi);
    if (parts.empty()) return point();
    const BasicRelation& pick = parts[static_cast<std::size_t>(integer(0, static_cast<int>(parts.size()) - 1))];
    if (pick.is_equality()) return b;
    const std::optional<double> theta = direction_in(pick.sector());
    if (!theta) return point();
    const double m = coin() ? integer(1, 4) : uniform(0.1, 4.0);
    return {b.x + m * std::cos(*theta), b.y + m * std::sin(*theta)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace scsp::testing

#endif  // SCSP_TESTS_SUPPORT_HPP_
