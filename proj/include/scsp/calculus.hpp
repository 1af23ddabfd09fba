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

// Frank's cardinal direction calculi: cone-shaped (cs) and projection-based
// (pb). Each has eight directional atoms and Eq.
//
// Atom regions ("tiles") follow a fixed closedness convention so that the
// nine atoms partition the plane around the reference point:
//   cs: every cone is closed at its lower bound and open at its upper bound;
//   pb: the four axis rays are closed singletons, the quadrants are open.

#ifndef SCSP_CALCULUS_HPP_
#define SCSP_CALCULUS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scsp/relation.hpp"

namespace scsp {

enum class Calculus { kConeShaped, kProjectionBased };

enum class Direction : std::uint8_t { kNo, kNE, kEa, kSE, kSo, kSW, kWe, kNW, kEq };

inline constexpr std::array<Direction, 9> kAllDirections = {
    Direction::kNo, Direction::kNE, Direction::kEa, Direction::kSE, Direction::kSo,
    Direction::kSW, Direction::kWe, Direction::kNW, Direction::kEq};

struct Atom {
  Calculus calculus;
  Direction name;
  bool operator==(const Atom&) const = default;
};

std::string_view calculus_name(Calculus c);  // "cs" / "pb"
std::string_view direction_name(Direction d);  // "No", "NE", ...
std::optional<Direction> parse_direction(std::string_view name);
std::string atom_name(Atom a);  // "No_cs"

// Table bounds of a directional atom in eighths of pi: <lo*pi/8, hi*pi/8>.
struct EighthBounds {
  int lo;
  int hi;
};
EighthBounds atom_bounds(Atom a);  // precondition: a.name != kEq

// The quantitative translation of <i a >j: {e} for Eq, the empty relation for
// a zero-span atom with an open bound, otherwise the single sector.
GeneralRelation atom_to_sector(Atom a, bool lo_closed, bool hi_closed);

// Region of the atom under the tiling convention.
GeneralRelation atom_region(Atom a);

Atom atom_converse(Atom a);

// The atom holding for the pair (a relative to b).
Atom atom_of(Calculus c, Point a, Point b);

// A set of atoms of one calculus, as a bitmask over Direction.
class QualitativeRelation {
 public:
  using Mask = std::uint16_t;
  static constexpr Mask kAllMask = 0x1FF;

  explicit QualitativeRelation(Calculus c, Mask mask = 0)
      : calculus_(c), mask_(mask & kAllMask) {}
  static QualitativeRelation universal(Calculus c) { return QualitativeRelation(c, kAllMask); }
  static QualitativeRelation of(Atom a);
  static QualitativeRelation of(Calculus c, std::initializer_list<Direction> ds);

  Calculus calculus() const { return calculus_; }
  Mask mask() const { return mask_; }
  bool empty() const { return mask_ == 0; }
  bool is_universal() const { return mask_ == kAllMask; }
  bool contains(Direction d) const { return (mask_ >> static_cast<int>(d)) & 1u; }
  int size() const;
  std::vector<Atom> atoms() const;

  bool operator==(const QualitativeRelation&) const = default;

  std::string to_string() const;  // "{No, NE}"

 private:
  Calculus calculus_;
  Mask mask_;
};

QualitativeRelation qualitative_converse(const QualitativeRelation& r);
QualitativeRelation qualitative_intersect(const QualitativeRelation& r,
                                          const QualitativeRelation& s);

// Smallest set of atoms whose regions cover the relation.
QualitativeRelation covering_atoms(Calculus c, const GeneralRelation& r);
// Union of the atom regions.
GeneralRelation region_of(const QualitativeRelation& r);

// Composition table derived from the quantitative composition of atom
// regions. entry(r, s) lists every atom that can hold between x and z given
// r(x, y) and s(y, z).
class CompositionTable {
 public:
  static CompositionTable derive(Calculus c, const AlgebraOptions& options = {});

  Calculus calculus() const { return calculus_; }
  QualitativeRelation entry(Direction r, Direction s) const;

  // One line per atom pair: "No o NE = {NE, No}".
  std::string to_text() const;

 private:
  explicit CompositionTable(Calculus c) : calculus_(c) {}

  Calculus calculus_;
  std::array<std::array<QualitativeRelation::Mask, 9>, 9> entries_{};
};

// Cached tables, derived once with default options.
const CompositionTable& composition_table(Calculus c);

// Throws std::logic_error on a calculus mismatch.
QualitativeRelation qualitative_compose(const QualitativeRelation& r,
                                        const QualitativeRelation& s);

}  // namespace scsp

#endif  // SCSP_CALCULUS_HPP_
