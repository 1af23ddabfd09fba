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

#ifndef SCSP_ANGLE_HPP_
#define SCSP_ANGLE_HPP_

#include <numbers>
#include <optional>
#include <string>

namespace scsp {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Process-wide numeric tolerances. Set once at startup (the CLI does this from
// --eps-angle / --eps-strict) before any concurrent use.
struct Tolerance {
  double angle = 1e-9;   // absolute, on angle comparisons
  double strict = 1e-7;  // LP margin threshold for strict rows
};

Tolerance& tolerance();

inline double eps_angle() { return tolerance().angle; }

// An angle in [0, 2pi). Construction normalizes; values within eps_angle()
// below 2pi snap to 0.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : value_(normalize(radians)) {}

  // k*pi/m, computed once.
  static Angle pi_fraction(long k, long m) {
    return Angle(static_cast<double>(k) * kPi / static_cast<double>(m));
  }

  double radians() const { return value_; }

  Angle operator+(double delta) const { return Angle(value_ + delta); }
  Angle operator-(double delta) const { return Angle(value_ - delta); }

  static double normalize(double radians);

 private:
  double value_ = 0.0;
};

// Length of the anticlockwise walk from a to b, in [0, 2pi).
double angular_distance(Angle a, Angle b);

// True when a and b are within eps_angle() of each other on the circle.
bool angles_close(Angle a, Angle b);

// Direction of the vector (dx, dy), measured anticlockwise from +x.
Angle direction_of(double dx, double dy);

// A cyclic angular interval <lo, lo+span> with independently open or closed
// bounds. span lies in [0, 2pi]; span == 2pi closed-closed is the full circle
// and span == 2pi open-open is the circle minus the single ray at lo. The
// empty sector is never represented: factories return std::nullopt instead.
class Sector {
 public:
  // <lo, hi> walking anticlockwise from lo to hi, so lo > hi wraps through 0.
  // lo == hi gives the singleton ray, which is empty unless both bounds are
  // closed.
  static std::optional<Sector> make(Angle lo, Angle hi, bool lo_closed,
                                    bool hi_closed);
  static std::optional<Sector> from_span(Angle lo, double span, bool lo_closed,
                                         bool hi_closed);
  static Sector full();
  static Sector ray(Angle at) { return *make(at, at, true, true); }

  Angle lo() const { return lo_; }
  Angle hi() const { return lo_ + span_; }
  double span() const { return span_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

  bool is_full() const;
  // Usable as a basic relation: span at most pi.
  bool is_basic() const { return span_ <= kPi + eps_angle(); }
  bool is_singleton() const { return span_ <= eps_angle(); }

  // Anticlockwise middle of the sector.
  Angle midpoint() const { return lo_ + span_ / 2.0; }

  // Tolerant structural equality (bounds within eps_angle(), same flags).
  bool same_as(const Sector& other) const;

  std::string debug_string() const;

 private:
  Sector(Angle lo, double span, bool lo_closed, bool hi_closed)
      : lo_(lo), span_(span), lo_closed_(lo_closed), hi_closed_(hi_closed) {}

  Angle lo_;
  double span_ = 0.0;
  bool lo_closed_ = true;
  bool hi_closed_ = true;
};

bool sector_contains(const Sector& s, Angle a);

// Both bounds shifted by pi; closedness and span preserved.
Sector antipode(const Sector& s);

}  // namespace scsp

#endif  // SCSP_ANGLE_HPP_
