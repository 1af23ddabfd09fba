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

#include "scsp/angle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace scsp {

Tolerance& tolerance() {
  static Tolerance instance;
  return instance;
}

double Angle::normalize(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi - eps_angle()) r = 0.0;
  return r;
}

double angular_distance(Angle a, Angle b) {
  double d = b.radians() - a.radians();
  if (d < 0.0) d += kTwoPi;
  if (d >= kTwoPi) d -= kTwoPi;
  return d;
}

bool angles_close(Angle a, Angle b) {
  const double d = angular_distance(a, b);
  return std::min(d, kTwoPi - d) <= eps_angle();
}

Angle direction_of(double dx, double dy) { return Angle(std::atan2(dy, dx)); }

std::optional<Sector> Sector::make(Angle lo, Angle hi, bool lo_closed,
                                   bool hi_closed) {
  double span = angular_distance(lo, hi);
  if (span <= eps_angle() || span >= kTwoPi - eps_angle()) span = 0.0;
  return from_span(lo, span, lo_closed, hi_closed);
}

std::optional<Sector> Sector::from_span(Angle lo, double span, bool lo_closed,
                                        bool hi_closed) {
  const double eps = eps_angle();
  if (span < -eps || span > kTwoPi + eps) return std::nullopt;
  if (span <= eps) {
    if (!(lo_closed && hi_closed)) return std::nullopt;
    return Sector(lo, 0.0, true, true);
  }
  if (span >= kTwoPi - eps) {
    if (lo_closed || hi_closed) return full();
    return Sector(lo, kTwoPi, false, false);
  }
  return Sector(lo, span, lo_closed, hi_closed);
}

Sector Sector::full() { return Sector(Angle(0.0), kTwoPi, true, true); }

bool Sector::is_full() const {
  return span_ >= kTwoPi && (lo_closed_ || hi_closed_);
}

bool Sector::same_as(const Sector& other) const {
  if (is_full() || other.is_full()) return is_full() && other.is_full();
  return angles_close(lo_, other.lo_) &&
         std::abs(span_ - other.span_) <= eps_angle() &&
         lo_closed_ == other.lo_closed_ && hi_closed_ == other.hi_closed_;
}

std::string Sector::debug_string() const {
  std::ostringstream os;
  os << (lo_closed_ ? '[' : '(') << lo_.radians() << ", " << hi().radians()
     << (hi_closed_ ? ']' : ')');
  if (span_ >= kTwoPi) os << "~full";
  return os.str();
}

bool sector_contains(const Sector& s, Angle a) {
  if (s.is_full()) return true;
  if (angles_close(a, s.lo())) return s.lo_closed();
  if (angles_close(a, s.hi())) return s.hi_closed();
  return angular_distance(s.lo(), a) < s.span();
}

Sector antipode(const Sector& s) {
  if (s.is_full()) return s;
  return *Sector::from_span(s.lo() + kPi, s.span(), s.lo_closed(),
                            s.hi_closed());
}

}  // namespace scsp
