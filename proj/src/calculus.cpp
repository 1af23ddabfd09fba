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

#include "scsp/calculus.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace scsp {

namespace {

// Indexed by Direction (Eq excluded), in eighths of pi.
constexpr std::array<EighthBounds, 8> kConeBounds = {{
    {3, 5},    // No
    {1, 3},    // NE
    {15, 1},   // Ea
    {13, 15},  // SE
    {11, 13},  // So
    {9, 11},   // SW
    {7, 9},    // We
    {5, 7},    // NW
}};

constexpr std::array<EighthBounds, 8> kProjectionBounds = {{
    {4, 4},    // No
    {0, 4},    // NE
    {0, 0},    // Ea
    {12, 0},   // SE
    {12, 12},  // So
    {8, 12},   // SW
    {8, 8},    // We
    {4, 8},    // NW
}};

constexpr std::array<std::string_view, 9> kDirectionNames = {
    "No", "NE", "Ea", "SE", "So", "SW", "We", "NW", "Eq"};

int index(Direction d) { return static_cast<int>(d); }

}  // namespace

std::string_view calculus_name(Calculus c) {
  return c == Calculus::kConeShaped ? "cs" : "pb";
}

std::string_view direction_name(Direction d) { return kDirectionNames[index(d)]; }

std::optional<Direction> parse_direction(std::string_view name) {
  for (Direction d : kAllDirections) {
    if (direction_name(d) == name) return d;
  }
  return std::nullopt;
}

std::string atom_name(Atom a) {
  std::string out(direction_name(a.name));
  out += '_';
  out += calculus_name(a.calculus);
  return out;
}

EighthBounds atom_bounds(Atom a) {
  if (a.name == Direction::kEq) throw std::logic_error("Eq has no sector bounds");
  return a.calculus == Calculus::kConeShaped ? kConeBounds[index(a.name)]
                                              : kProjectionBounds[index(a.name)];
}

GeneralRelation atom_to_sector(Atom a, bool lo_closed, bool hi_closed) {
  if (a.name == Direction::kEq) return GeneralRelation::equality();
  const EighthBounds b = atom_bounds(a);
  const std::optional<Sector> s = Sector::make(
      Angle::pi_fraction(b.lo, 8), Angle::pi_fraction(b.hi, 8), lo_closed, hi_closed);
  if (!s) return GeneralRelation::empty();
  return GeneralRelation::of(*s);
}

GeneralRelation atom_region(Atom a) {
  if (a.name == Direction::kEq) return GeneralRelation::equality();
  if (a.calculus == Calculus::kConeShaped) return atom_to_sector(a, true, false);
  const EighthBounds b = atom_bounds(a);
  const bool ray = b.lo == b.hi;
  return atom_to_sector(a, ray, ray);
}

Atom atom_converse(Atom a) {
  if (a.name == Direction::kEq) return a;
  return {a.calculus, static_cast<Direction>((index(a.name) + 4) % 8)};
}

Atom atom_of(Calculus c, Point a, Point b) {
  if (points_coincide(a, b)) return {c, Direction::kEq};
  for (Direction d : kAllDirections) {
    if (d == Direction::kEq) continue;
    if (sat(atom_region({c, d}), a, b)) return {c, d};
  }
  throw std::logic_error("atom regions do not cover the plane");
}

QualitativeRelation QualitativeRelation::of(Atom a) {
  return QualitativeRelation(a.calculus, static_cast<Mask>(1u << index(a.name)));
}

QualitativeRelation QualitativeRelation::of(Calculus c,
                                            std::initializer_list<Direction> ds) {
  Mask m = 0;
  for (Direction d : ds) m |= static_cast<Mask>(1u << index(d));
  return QualitativeRelation(c, m);
}

int QualitativeRelation::size() const { return std::popcount(mask_); }

std::vector<Atom> QualitativeRelation::atoms() const {
  std::vector<Atom> out;
  for (Direction d : kAllDirections) {
    if (contains(d)) out.push_back({calculus_, d});
  }
  return out;
}

std::string QualitativeRelation::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Atom& a : atoms()) {
    if (!first) os << ", ";
    os << direction_name(a.name);
    first = false;
  }
  os << '}';
  return os.str();
}

QualitativeRelation qualitative_converse(const QualitativeRelation& r) {
  QualitativeRelation::Mask m = 0;
  for (const Atom& a : r.atoms()) {
    m |= static_cast<QualitativeRelation::Mask>(1u << index(atom_converse(a).name));
  }
  return QualitativeRelation(r.calculus(), m);
}

QualitativeRelation qualitative_intersect(const QualitativeRelation& r,
                                          const QualitativeRelation& s) {
  if (r.calculus() != s.calculus()) {
    throw std::logic_error("intersecting relations of different calculi");
  }
  return QualitativeRelation(r.calculus(), r.mask() & s.mask());
}

QualitativeRelation covering_atoms(Calculus c, const GeneralRelation& r) {
  QualitativeRelation::Mask m = 0;
  if (r.has_equality()) m |= static_cast<QualitativeRelation::Mask>(1u << index(Direction::kEq));
  for (Direction d : kAllDirections) {
    if (d == Direction::kEq) continue;
    if (!intersect_sectors(atom_region({c, d}).sectors(), r.sectors()).empty()) {
      m |= static_cast<QualitativeRelation::Mask>(1u << index(d));
    }
  }
  return QualitativeRelation(c, m);
}

GeneralRelation region_of(const QualitativeRelation& r) {
  GeneralRelation out;
  for (const Atom& a : r.atoms()) out = unite(out, atom_region(a));
  return out;
}

CompositionTable CompositionTable::derive(Calculus c, const AlgebraOptions& options) {
  CompositionTable table(c);
  for (Direction r : kAllDirections) {
    for (Direction s : kAllDirections) {
      const GeneralRelation composed =
          compose(atom_region({c, r}), atom_region({c, s}), options);
      table.entries_[index(r)][index(s)] = covering_atoms(c, composed).mask();
    }
  }
  return table;
}

QualitativeRelation CompositionTable::entry(Direction r, Direction s) const {
  return QualitativeRelation(calculus_, entries_[index(r)][index(s)]);
}

std::string CompositionTable::to_text() const {
  std::ostringstream os;
  for (Direction r : kAllDirections) {
    for (Direction s : kAllDirections) {
      os << direction_name(r) << " o " << direction_name(s) << " = "
         << entry(r, s).to_string() << '\n';
    }
  }
  return os.str();
}

const CompositionTable& composition_table(Calculus c) {
  static const CompositionTable cone = CompositionTable::derive(Calculus::kConeShaped);
  static const CompositionTable projection =
      CompositionTable::derive(Calculus::kProjectionBased);
  return c == Calculus::kConeShaped ? cone : projection;
}

QualitativeRelation qualitative_compose(const QualitativeRelation& r,
                                        const QualitativeRelation& s) {
  if (r.calculus() != s.calculus()) {
    throw std::logic_error("composing relations of different calculi");
  }
  const CompositionTable& table = composition_table(r.calculus());
  QualitativeRelation::Mask m = 0;
  for (const Atom& a : r.atoms()) {
    for (const Atom& b : s.atoms()) m |= table.entry(a.name, b.name).mask();
  }
  return QualitativeRelation(r.calculus(), m);
}

}  // namespace scsp
