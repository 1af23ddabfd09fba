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

// Brute-force validators. They share nothing with the solver beyond sat()
// and the atom regions, so they can cross-check it.

#ifndef SCSP_ORACLE_HPP_
#define SCSP_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "scsp/calculus.hpp"
#include "scsp/network.hpp"
#include "scsp/search.hpp"

namespace scsp {

struct OracleBudget {
  std::size_t samples = 100000;
  int grid_extent = 4;
  std::uint64_t seed = 1;
};

// Rejection sampling: the first half of the budget draws integer points in
// [-extent, extent]^2, the rest uniform reals in the same box. A missing
// result is inconclusive.
std::optional<Witness> sample_witness(const Network& network, const OracleBudget& budget);

struct CompositionSample {
  double bin_width = 0.0;
  std::set<long long> bins;  // direction / bin_width, floored
  bool equality_seen = false;

  Angle bin_angle(long long bin) const {
    return Angle((static_cast<double>(bin) + 0.5) * bin_width);
  }
};

// Directions of u1*m1 + u2*m2 for u1 in r, u2 in s and magnitudes in
// (0, extent]; equality_seen when the sum vanishes.
CompositionSample compose_oracle(const Sector& r, const Sector& s,
                                 const OracleBudget& budget, double bin_width = 0.0);

struct TableViolation {
  Direction first;     // holds for (a, b)
  Direction second;    // holds for (b, c)
  Direction observed;  // holds for (a, c), missing from the table entry
  Point a, b, c;
};

struct TableReport {
  std::size_t triples_checked = 0;
  std::vector<TableViolation> violations;
};

// Enumerates integer triples in [-extent, extent]^2 (at most budget.samples of
// them) and checks each observed atom triple against the derived table.
TableReport table_check(Calculus c, const OracleBudget& budget);

}  // namespace scsp

#endif  // SCSP_ORACLE_HPP_
