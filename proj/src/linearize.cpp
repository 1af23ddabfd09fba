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

#include "scsp/linearize.hpp"

#include <algorithm>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace scsp {

double LinearRow::evaluate(std::span<const double> values) const {
  double sum = 0.0;
  for (const auto& [unknown, coefficient] : terms) sum += coefficient * values[unknown];
  return sum;
}

bool LinearRow::holds(std::span<const double> values, double tolerance,
                      double strict_margin) const {
  const double lhs = evaluate(values);
  switch (relation) {
    case RowRelation::kLess:
      return lhs <= rhs - strict_margin;
    case RowRelation::kLessEqual:
      return lhs <= rhs + tolerance;
    case RowRelation::kEqual:
      return std::abs(lhs - rhs) <= tolerance;
  }
  return false;
}

std::vector<HalfPlane> sector_halfplanes(const Sector& s, std::size_t subject,
                                         std::size_t reference) {
  const double eps = eps_angle();
  if (s.span() > kPi + eps) {
    throw std::invalid_argument("sector wider than pi is not a basic relation: " +
                                s.debug_string());
  }
  const bool half_turn = s.span() >= kPi - eps;
  if (half_turn && (s.lo_closed() || s.hi_closed())) {
    throw std::invalid_argument(
        "half-turn sector with a closed bound is not convex; split it first: " +
        s.debug_string());
  }
  std::vector<HalfPlane> out;
  out.push_back({subject, reference, s.lo(), Side::kLeft, s.lo_closed()});
  out.push_back({subject, reference, s.hi(), Side::kRight, s.hi_closed()});
  if (s.lo_closed() && s.hi_closed()) {
    out.push_back({subject, reference, s.midpoint() + kPi / 2.0, Side::kRight, false});
  }
  return out;
}

LinearRow halfplane_to_row(const HalfPlane& h) {
  // cross(u(angle), X - Y) scaled to a unit coefficient vector.
  const double scale = 1.0 / std::sqrt(2.0);
  auto snap = [](double v) { return std::abs(v) < 1e-15 ? 0.0 : v; };
  const double c = snap(std::cos(h.angle.radians())) * scale;
  const double s = snap(std::sin(h.angle.radians())) * scale;
  // Left: -cross <(=) 0. Right: cross <(=) 0.
  const double sign = h.side == Side::kLeft ? -1.0 : 1.0;
  LinearRow row;
  row.terms = {{x_unknown(h.subject), -s * sign},
               {y_unknown(h.subject), c * sign},
               {x_unknown(h.reference), s * sign},
               {y_unknown(h.reference), -c * sign}};
  std::erase_if(row.terms, [](const auto& term) { return term.second == 0.0; });
  row.relation = h.closed ? RowRelation::kLessEqual : RowRelation::kLess;
  row.rhs = 0.0;
  return row;
}

std::vector<LinearRow> equality_rows(std::size_t subject, std::size_t reference) {
  const double u = 1.0 / std::sqrt(2.0);
  auto row = [&](std::size_t plus, std::size_t minus) {
    LinearRow r;
    r.terms = {{plus, u}, {minus, -u}};
    r.relation = RowRelation::kLessEqual;
    return r;
  };
  return {row(x_unknown(subject), x_unknown(reference)),
          row(x_unknown(reference), x_unknown(subject)),
          row(y_unknown(subject), y_unknown(reference)),
          row(y_unknown(reference), y_unknown(subject))};
}

std::vector<LinearRow> basic_to_rows(const BasicRelation& b, std::size_t subject,
                                     std::size_t reference) {
  if (b.is_equality()) return equality_rows(subject, reference);
  std::vector<LinearRow> rows;
  for (const HalfPlane& h : sector_halfplanes(b.sector(), subject, reference)) {
    rows.push_back(halfplane_to_row(h));
  }
  return rows;
}

LinearSystem bsp_to_lp(const Network& scenario) {
  LinearSystem system;
  system.unknowns = 2 * scenario.size();
  for (std::size_t i = 0; i < scenario.size(); ++i) {
    for (std::size_t j = i + 1; j < scenario.size(); ++j) {
      const GeneralRelation& r = scenario.at(i, j);
      if (r.is_universal()) continue;
      if (!r.is_basic()) {
        throw std::invalid_argument("edge (" + scenario.names()[i] + ", " +
                                    scenario.names()[j] +
                                    ") is not basic: " + r.debug_string());
      }
      const BasicRelation b = r.has_equality() ? BasicRelation::equality()
                                               : BasicRelation::of(r.sectors().front());
      for (LinearRow& row : basic_to_rows(b, i, j)) system.rows.push_back(std::move(row));
    }
  }
  return system;
}

std::string format_row(const LinearRow& row, const std::vector<std::string>& names) {
  std::ostringstream os;
  os.precision(12);
  auto terms = row.terms;
  std::sort(terms.begin(), terms.end());
  bool first = true;
  for (const auto& [unknown, coefficient] : terms) {
    if (coefficient == 0.0) continue;
    if (first) {
      os << coefficient;
    } else {
      os << (coefficient < 0 ? " - " : " + ") << std::abs(coefficient);
    }
    os << '*' << (unknown % 2 == 0 ? 'x' : 'y') << names[unknown / 2];
    first = false;
  }
  if (first) os << '0';
  switch (row.relation) {
    case RowRelation::kLess:
      os << " < ";
      break;
    case RowRelation::kLessEqual:
      os << " <= ";
      break;
    case RowRelation::kEqual:
      os << " = ";
      break;
  }
  os << row.rhs;
  return os.str();
}

}  // namespace scsp
