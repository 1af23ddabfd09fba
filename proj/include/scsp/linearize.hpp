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

// Translation of basic relations into linear inequalities over point
// coordinates. Unknown 2*i is x of point i, unknown 2*i+1 is y of point i.

#ifndef SCSP_LINEARIZE_HPP_
#define SCSP_LINEARIZE_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scsp/network.hpp"
#include "scsp/relation.hpp"

namespace scsp {

enum class Side { kLeft, kRight };

// Point `subject` lies in the left/right half-plane of the directed line
// through point `reference` at `angle`; open or closed.
struct HalfPlane {
  std::size_t subject = 0;
  std::size_t reference = 0;
  Angle angle;
  Side side = Side::kLeft;
  bool closed = true;
};

enum class RowRelation { kLess, kLessEqual, kEqual };

// sum(coefficient * unknown) <rel> rhs
struct LinearRow {
  std::vector<std::pair<std::size_t, double>> terms;
  RowRelation relation = RowRelation::kLessEqual;
  double rhs = 0.0;

  bool strict() const { return relation == RowRelation::kLess; }
  double evaluate(std::span<const double> values) const;
  // Strict rows need a margin of at least `strict_margin`.
  bool holds(std::span<const double> values, double tolerance,
             double strict_margin) const;
};

struct LinearSystem {
  std::size_t unknowns = 0;
  std::vector<LinearRow> rows;
};

inline std::size_t x_unknown(std::size_t point) { return 2 * point; }
inline std::size_t y_unknown(std::size_t point) { return 2 * point + 1; }

// Half-planes whose intersection is exactly {X : s(X, Y)}. The lower bound
// gives the left half-plane at lo, the upper bound the right half-plane at hi.
// When both bounds are closed the apex is cut off by the open half-plane
// facing the middle direction. Throws std::invalid_argument for a sector that
// has no such form (span above pi, or span pi with a closed bound).
std::vector<HalfPlane> sector_halfplanes(const Sector& s, std::size_t subject,
                                         std::size_t reference);

// Unit-norm row: Left is cos(a)*(yX-yY) - sin(a)*(xX-xY) >= 0 (> when open);
// Right is the reverse.
LinearRow halfplane_to_row(const HalfPlane& h);

// xX - xY <= 0, xY - xX <= 0, yX - yY <= 0, yY - yX <= 0.
std::vector<LinearRow> equality_rows(std::size_t subject, std::size_t reference);

std::vector<LinearRow> basic_to_rows(const BasicRelation& b, std::size_t subject,
                                     std::size_t reference);

// Every off-diagonal entry must be basic or universal (universal entries add
// no rows). Throws std::invalid_argument otherwise.
LinearSystem bsp_to_lp(const Network& scenario);

// "c1*xA + c2*yA + c3*xB + c4*yB <= 0"
std::string format_row(const LinearRow& row, const std::vector<std::string>& names);

}  // namespace scsp

#endif  // SCSP_LINEARIZE_HPP_
