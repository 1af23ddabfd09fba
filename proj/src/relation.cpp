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

#include "scsp/relation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace scsp {

namespace {

// The circle cut at a sorted set of endpoints e_0 < ... < e_{k-1} into 2k
// elementary pieces: the point e_i (piece 2i) and the open arc
// (e_i, e_{i+1}) (piece 2i+1). Every input sector is a union of pieces, so
// set operations reduce to boolean operations on piece membership.
class Atomization {
 public:
  explicit Atomization(std::vector<Angle> endpoints) {
    std::sort(endpoints.begin(), endpoints.end(),
              [](Angle a, Angle b) { return a.radians() < b.radians(); });
    const double merge = 2.0 * eps_angle();
    for (Angle e : endpoints) {
      if (!cuts_.empty() && e.radians() - cuts_.back().radians() <= merge) continue;
      cuts_.push_back(e);
    }
    if (cuts_.size() > 1 &&
        angular_distance(cuts_.back(), cuts_.front()) <= merge) {
      cuts_.pop_back();
    }
  }

  std::size_t piece_count() const { return 2 * cuts_.size(); }

  // Representative angle of a piece: the cut itself, or the arc midpoint.
  Angle sample(std::size_t piece) const {
    const std::size_t i = piece / 2;
    if (piece % 2 == 0) return cuts_[i];
    return cuts_[i] + arc_length(i) / 2.0;
  }

  std::vector<Sector> rebuild(const std::vector<bool>& covered) const {
    const std::size_t n = piece_count();
    std::vector<Sector> out;
    if (n == 0) return out;
    std::size_t first_gap = n;
    for (std::size_t p = 0; p < n; ++p) {
      if (!covered[p]) {
        first_gap = p;
        break;
      }
    }
    if (first_gap == n) return {Sector::full()};

    std::size_t run_start = 0;
    std::size_t run_length = 0;
    for (std::size_t step = 1; step <= n; ++step) {
      const std::size_t p = (first_gap + step) % n;
      if (covered[p]) {
        if (run_length == 0) run_start = p;
        ++run_length;
        continue;
      }
      if (run_length > 0) {
        out.push_back(make_run(run_start, (run_start + run_length - 1) % n,
                               run_length));
        run_length = 0;
      }
    }
    std::sort(out.begin(), out.end(), [](const Sector& a, const Sector& b) {
      return a.lo().radians() < b.lo().radians();
    });
    return out;
  }

 private:
  double arc_length(std::size_t i) const {
    if (cuts_.size() == 1) return kTwoPi;
    return angular_distance(cuts_[i], cuts_[(i + 1) % cuts_.size()]);
  }

  Sector make_run(std::size_t first, std::size_t last,
                  std::size_t length) const {
    const std::size_t k = cuts_.size();
    const Angle lo = cuts_[first / 2];
    const bool lo_closed = first % 2 == 0;
    const Angle hi = last % 2 == 0 ? cuts_[last / 2] : cuts_[(last / 2 + 1) % k];
    const bool hi_closed = last % 2 == 0;
    double span = angular_distance(lo, hi);
    const bool single_point = length == 1 && first % 2 == 0;
    if (!single_point && span <= eps_angle()) span = kTwoPi;
    return *Sector::from_span(lo, span, lo_closed, hi_closed);
  }

  std::vector<Angle> cuts_;
};

void add_endpoints(const std::vector<Sector>& sectors, std::vector<Angle>& out) {
  for (const Sector& s : sectors) {
    out.push_back(s.lo());
    if (!s.is_full()) out.push_back(s.hi());
  }
}

bool any_contains(const std::vector<Sector>& sectors, Angle a) {
  return std::any_of(sectors.begin(), sectors.end(),
                     [a](const Sector& s) { return sector_contains(s, a); });
}

std::vector<Sector> combine(const std::vector<Sector>& a,
                            const std::vector<Sector>& b,
                            const std::function<bool(bool, bool)>& op) {
  std::vector<Angle> endpoints;
  add_endpoints(a, endpoints);
  add_endpoints(b, endpoints);
  Atomization atoms(std::move(endpoints));
  std::vector<bool> covered(atoms.piece_count());
  for (std::size_t p = 0; p < covered.size(); ++p) {
    const Angle at = atoms.sample(p);
    covered[p] = op(any_contains(a, at), any_contains(b, at));
  }
  return atoms.rebuild(covered);
}

// Pieces of at most max_span, split at midpoints; they partition s.
void split_into(const Sector& s, double max_span, std::vector<Sector>& out) {
  if (s.span() <= max_span + eps_angle()) {
    out.push_back(s);
    return;
  }
  const double half = s.span() / 2.0;
  const bool upper_closed = s.is_full() ? false : s.hi_closed();
  split_into(*Sector::from_span(s.lo(), half, s.lo_closed(), true), max_span,
             out);
  split_into(*Sector::from_span(s.lo() + half, half, false, upper_closed),
             max_span, out);
}

}  // namespace

bool points_coincide(Point a, Point b) {
  const double scale =
      std::max({1.0, std::abs(a.x), std::abs(a.y), std::abs(b.x), std::abs(b.y)});
  const double tol = 1e-9 * scale;
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

BasicRelation BasicRelation::of(const Sector& s) {
  if (!s.is_basic()) {
    throw std::invalid_argument("basic relation requires a sector of span <= pi: " +
                                s.debug_string());
  }
  return BasicRelation(s);
}

GeneralRelation::GeneralRelation(bool has_equality,
                                 const std::vector<Sector>& sectors)
    : has_equality_(has_equality), sectors_(normalize_sectors(sectors)) {}

GeneralRelation GeneralRelation::universal() {
  return GeneralRelation(true, {Sector::full()});
}

GeneralRelation GeneralRelation::of(const BasicRelation& b) {
  if (b.is_equality()) return equality();
  return of(b.sector());
}

bool GeneralRelation::is_universal() const {
  return has_equality_ && sectors_.size() == 1 && sectors_.front().is_full();
}

bool GeneralRelation::is_basic() const {
  if (sectors_.empty()) return has_equality_;
  return !has_equality_ && sectors_.size() == 1 && sectors_.front().is_basic();
}

std::vector<BasicRelation> GeneralRelation::disjuncts(double max_span) const {
  std::vector<BasicRelation> out;
  if (has_equality_) out.push_back(BasicRelation::equality());
  std::vector<Sector> pieces;
  for (const Sector& s : sectors_) split_into(s, std::min(max_span, kPi), pieces);
  for (const Sector& s : pieces) out.push_back(BasicRelation::of(s));
  return out;
}

bool GeneralRelation::operator==(const GeneralRelation& other) const {
  if (has_equality_ != other.has_equality_) return false;
  if (sectors_.size() != other.sectors_.size()) return false;
  for (std::size_t i = 0; i < sectors_.size(); ++i) {
    if (!sectors_[i].same_as(other.sectors_[i])) return false;
  }
  return true;
}

bool GeneralRelation::subset_of(const GeneralRelation& other) const {
  return intersect(*this, other) == *this;
}

std::string GeneralRelation::debug_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  if (has_equality_) {
    os << 'e';
    first = false;
  }
  for (const Sector& s : sectors_) {
    if (!first) os << ", ";
    os << s.debug_string();
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Sector> normalize_sectors(const std::vector<Sector>& sectors) {
  return combine(sectors, {}, [](bool a, bool) { return a; });
}

std::vector<Sector> intersect_sectors(const std::vector<Sector>& a,
                                      const std::vector<Sector>& b) {
  if (a.empty() || b.empty()) return {};
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

GeneralRelation converse(const GeneralRelation& r) {
  std::vector<Sector> flipped;
  flipped.reserve(r.sectors().size());
  for (const Sector& s : r.sectors()) flipped.push_back(antipode(s));
  return GeneralRelation(r.has_equality(), flipped);
}

std::optional<Sector> angular_hull(const Sector& a, const Sector& b) {
  if (a.is_full() || b.is_full()) return Sector::full();
  const double eps = eps_angle();

  // `second` starts `offset` radians into the closure of `first`.
  auto overlapping = [&](const Sector& first, const Sector& second,
                         double offset) {
    const double end = std::max(first.span(), offset + second.span());
    if (end >= kTwoPi - eps) return Sector::full();
    return *Sector::from_span(first.lo(), end, true, true);
  };

  const double a_to_b = angular_distance(a.lo(), b.lo());
  if (a_to_b <= a.span() + eps) return overlapping(a, b, a_to_b);
  const double b_to_a = angular_distance(b.lo(), a.lo());
  if (b_to_a <= b.span() + eps) return overlapping(b, a, b_to_a);

  const double gap_after_a = a_to_b - a.span();
  const double gap_after_b = b_to_a - b.span();
  if (std::abs(gap_after_a - gap_after_b) <= eps) {
    // Two equal gaps: wider than a half-turn hull either way, or exactly two
    // antipodal rays.
    if (kTwoPi - gap_after_a > kPi + eps) return Sector::full();
    return std::nullopt;
  }
  if (gap_after_a > gap_after_b) {
    return *Sector::from_span(b.lo(), kTwoPi - gap_after_a, true, true);
  }
  return *Sector::from_span(a.lo(), kTwoPi - gap_after_b, true, true);
}

bool has_antipodal_pair(const Sector& a, const Sector& b) {
  return !intersect_sectors({antipode(a)}, {b}).empty();
}

GeneralRelation compose_basic(const BasicRelation& r, const BasicRelation& s,
                              const AlgebraOptions& options) {
  if (r.is_equality()) return GeneralRelation::of(s);
  if (s.is_equality()) return GeneralRelation::of(r);

  const Sector& first = r.sector();
  const Sector& second = s.sector();
  const bool equality =
      options.emit_equality && has_antipodal_pair(first, second);

  const std::optional<Sector> hull = angular_hull(first, second);
  if (!hull) {
    // Opposite rays: the sum stays on their common line.
    return GeneralRelation(equality, {first, second});
  }
  if (hull->span() > kPi + eps_angle()) {
    return GeneralRelation(equality, {Sector::full()});
  }

  const Angle lo = hull->lo();
  const Angle hi = hull->hi();
  bool lo_closed = false;
  bool hi_closed = false;
  if (options.boundary == BoundaryRule::kLogicalAnd) {
    lo_closed = first.lo_closed() && second.lo_closed();
    hi_closed = first.hi_closed() && second.hi_closed();
  } else if (hull->span() >= kPi - eps_angle()) {
    // Half-plane hull: a boundary ray is reached by two vectors along it, or
    // by two opposite vectors on the boundary line.
    const bool r_lo = sector_contains(first, lo);
    const bool r_hi = sector_contains(first, hi);
    const bool s_lo = sector_contains(second, lo);
    const bool s_hi = sector_contains(second, hi);
    const bool opposite = (r_lo && s_hi) || (r_hi && s_lo);
    lo_closed = (r_lo && s_lo) || opposite;
    hi_closed = (r_hi && s_hi) || opposite;
  } else {
    lo_closed = sector_contains(first, lo) && sector_contains(second, lo);
    hi_closed = sector_contains(first, hi) && sector_contains(second, hi);
  }
  const std::optional<Sector> result =
      Sector::from_span(lo, hull->span(), lo_closed, hi_closed);
  if (!result) return GeneralRelation(equality, {});
  return GeneralRelation(equality, {*result});
}

GeneralRelation compose(const GeneralRelation& r, const GeneralRelation& s,
                        const AlgebraOptions& options) {
  if (r.is_empty() || s.is_empty()) return GeneralRelation::empty();

  bool equality = r.has_equality() && s.has_equality();
  std::vector<Sector> sectors;
  if (r.has_equality()) {
    sectors.insert(sectors.end(), s.sectors().begin(), s.sectors().end());
  }
  if (s.has_equality()) {
    sectors.insert(sectors.end(), r.sectors().begin(), r.sectors().end());
  }

  std::vector<Sector> left;
  std::vector<Sector> right;
  for (const Sector& piece : r.sectors()) split_into(piece, kPi, left);
  for (const Sector& piece : s.sectors()) split_into(piece, kPi, right);
  for (const Sector& a : left) {
    for (const Sector& b : right) {
      const GeneralRelation part =
          compose_basic(BasicRelation::of(a), BasicRelation::of(b), options);
      equality = equality || part.has_equality();
      sectors.insert(sectors.end(), part.sectors().begin(),
                     part.sectors().end());
    }
  }
  return GeneralRelation(equality, sectors);
}

GeneralRelation intersect_basic(const BasicRelation& r, const BasicRelation& s) {
  if (r.is_equality() && s.is_equality()) return GeneralRelation::equality();
  // Sectors exclude their apex, so equality and a sector never meet.
  if (r.is_equality() || s.is_equality()) return GeneralRelation::empty();
  return GeneralRelation(false, intersect_sectors({r.sector()}, {s.sector()}));
}

GeneralRelation intersect(const GeneralRelation& r, const GeneralRelation& s) {
  return GeneralRelation(r.has_equality() && s.has_equality(),
                         intersect_sectors(r.sectors(), s.sectors()));
}

GeneralRelation unite(const GeneralRelation& r, const GeneralRelation& s) {
  std::vector<Sector> all = r.sectors();
  all.insert(all.end(), s.sectors().begin(), s.sectors().end());
  return GeneralRelation(r.has_equality() || s.has_equality(), all);
}

bool sat(const GeneralRelation& r, Point a, Point b) {
  if (points_coincide(a, b)) return r.has_equality();
  return any_contains(r.sectors(), direction_of(a.x - b.x, a.y - b.y));
}

bool sat(const BasicRelation& r, Point a, Point b) {
  return sat(GeneralRelation::of(r), a, b);
}

}  // namespace scsp
