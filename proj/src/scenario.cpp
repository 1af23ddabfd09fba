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

#include "scsp/scenario.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "scsp/search.hpp"

namespace scsp {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column_base)
      : text_(text), line_(line), base_(column_base) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  std::size_t column() const { return base_ + pos_; }
  std::size_t position() const { return pos_; }
  void rewind(std::size_t pos) { pos_ = pos; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column(), message);
  }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    throw ParseError(line_, base_ + pos, message);
  }

  // Digits and a decimal point/exponent: the longest prefix from_chars takes.
  std::optional<double> number() {
    skip_space();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) return std::nullopt;
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// decimal | [-][k*]pi[/m]
Angle parse_angle(Cursor& in) {
  const std::size_t start = in.position();
  const bool negative = in.accept('-');
  double factor = 1.0;
  const std::size_t after_sign = in.position();
  std::optional<double> leading = in.number();
  if (leading) {
    if (!in.accept('*')) {
      return Angle(negative ? -*leading : *leading);
    }
    factor = *leading;
  } else {
    in.rewind(after_sign);
  }
  const std::size_t word_at = in.position();
  if (in.word() != "pi") in.fail_at(word_at, "expected an angle");
  double divisor = 1.0;
  if (in.accept('/')) {
    const std::optional<double> m = in.number();
    if (!m || *m == 0.0) in.fail("expected a non-zero divisor after '/'");
    divisor = *m;
  }
  if (!std::isfinite(factor)) in.fail_at(start, "angle is not finite");
  return Angle((negative ? -factor : factor) * kPi / divisor);
}

struct Flags {
  bool lo_closed = true;
  bool hi_closed = true;
};

Flags parse_flags(Cursor& in) {
  Flags flags;
  if (!in.accept('[')) return flags;
  const std::size_t at = in.position();
  const std::string_view w = in.word();
  if (w.size() != 2 || (w[0] != 'c' && w[0] != 'o') || (w[1] != 'c' && w[1] != 'o')) {
    in.fail_at(at, "bound flags must be one of cc, co, oc, oo");
  }
  flags.lo_closed = w[0] == 'c';
  flags.hi_closed = w[1] == 'c';
  in.expect(']');
  return flags;
}

enum class DisjunctKind { kEquality, kCone, kProjection, kSector, kOther };

GeneralRelation parse_disjunct(Cursor& in, DisjunctKind& kind) {
  in.skip_space();
  const std::size_t at = in.position();
  const std::string_view head = in.word();
  if (head == "eq") {
    kind = DisjunctKind::kEquality;
    return GeneralRelation::equality();
  }
  if (head == "universal") {
    kind = DisjunctKind::kOther;
    return GeneralRelation::universal();
  }
  if (head == "empty") {
    kind = DisjunctKind::kOther;
    return GeneralRelation::empty();
  }
  if (head == "cs" || head == "pb") {
    in.expect(':');
    const std::size_t atom_at = in.position();
    const std::optional<Direction> d = parse_direction(in.word());
    if (!d) in.fail_at(atom_at, "unknown atom (expected No NE Ea SE So SW We NW Eq)");
    const Flags flags = parse_flags(in);
    const Calculus c = head == "cs" ? Calculus::kConeShaped : Calculus::kProjectionBased;
    kind = c == Calculus::kConeShaped ? DisjunctKind::kCone : DisjunctKind::kProjection;
    return atom_to_sector({c, *d}, flags.lo_closed, flags.hi_closed);
  }
  if (head == "sector") {
    in.expect('(');
    const Angle lo = parse_angle(in);
    in.expect(',');
    const Angle hi = parse_angle(in);
    in.expect(')');
    const Flags flags = parse_flags(in);
    if (angular_distance(lo, hi) > kPi + eps_angle()) {
      in.fail_at(at, "sector spans more than pi");
    }
    kind = DisjunctKind::kSector;
    const std::optional<Sector> s = Sector::make(lo, hi, flags.lo_closed, flags.hi_closed);
    return s ? GeneralRelation::of(*s) : GeneralRelation::empty();
  }
  in.fail_at(at, head.empty() ? "expected a relation" : "unknown relation '" + std::string(head) + "'");
}

RelationLiteral parse_relation_at(std::string_view text, std::size_t line, std::size_t column_base) {
  Cursor in(text, line, column_base);
  RelationLiteral out;
  bool cone = false;
  bool projection = false;
  bool other = false;
  do {
    DisjunctKind kind = DisjunctKind::kOther;
    out.relation = unite(out.relation, parse_disjunct(in, kind));
    cone |= kind == DisjunctKind::kCone;
    projection |= kind == DisjunctKind::kProjection;
    other |= kind == DisjunctKind::kSector || kind == DisjunctKind::kOther;
  } while (in.accept('|'));
  if (!in.done()) in.fail("unexpected trailing input");
  if (!other && cone && !projection) out.origin = ConstraintOrigin::kConeShaped;
  if (!other && projection && !cone) out.origin = ConstraintOrigin::kProjectionBased;
  return out;
}

}  // namespace

RelationLiteral parse_relation(std::string_view text) { return parse_relation_at(text, 1, 1); }

std::string format_angle(Angle a) {
  const double v = a.radians();
  if (v == 0.0) return "0";
  for (long m = 1; m <= 64; ++m) {
    const double k = v * static_cast<double>(m) / kPi;
    const double rounded = std::round(k);
    if (std::abs(k - rounded) > 1e-9) continue;
    const long ki = static_cast<long>(rounded);
    if (ki == 0) return "0";
    std::string out = ki == 1 ? "pi" : std::to_string(ki) + "*pi";
    if (m != 1) out += "/" + std::to_string(m);
    return out;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string format_relation(const GeneralRelation& r) {
  if (r.is_empty()) return "empty";
  if (r.is_universal()) return "universal";
  std::vector<std::string> parts;
  for (const BasicRelation& b : r.disjuncts(kPi)) {
    if (b.is_equality()) {
      parts.emplace_back("eq");
      continue;
    }
    const Sector& s = b.sector();
    std::string text = "sector(" + format_angle(s.lo()) + "," + format_angle(s.hi()) + ")[";
    text += s.lo_closed() ? 'c' : 'o';
    text += s.hi_closed() ? 'c' : 'o';
    text += ']';
    parts.push_back(std::move(text));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " | ";
    out += parts[i];
  }
  return out;
}

Problem parse_scenario(std::string_view text) {
  struct Pending {
    std::size_t line;
    std::size_t from_column;
    std::string from;
    std::size_t to_column;
    std::string to;  // empty for unary
    RelationLiteral literal;
  };
  std::vector<std::string> declared;
  std::map<std::string, std::size_t> seen;
  std::vector<Pending> pending;
  bool unary = false;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::size_t comment = line.find('#');
    if (comment != std::string_view::npos) line = line.substr(0, comment);

    Cursor in(line, line_no, 1);
    if (!in.done()) {
      const std::size_t head_at = in.position();
      const std::string head(in.word());
      if (head.empty()) in.fail_at(head_at, "expected a statement");
      if (head == "points" || head == "point") {
        while (!in.done()) {
          const std::size_t at = in.position();
          const std::string name(in.word());
          if (name.empty()) in.fail("expected a point name");
          if (name == kOriginName) in.fail_at(at, "point name __origin is reserved");
          if (seen.count(name)) in.fail_at(at, "point '" + name + "' declared twice");
          seen[name] = declared.size();
          declared.push_back(name);
        }
      } else if (head == "at") {
        Pending p;
        p.line = line_no;
        p.from_column = in.column();
        p.from = std::string(in.word());
        if (p.from.empty()) in.fail("expected a point name after 'at'");
        in.skip_space();
        const std::size_t rel_at = in.position();
        p.literal = parse_relation_at(line.substr(rel_at), line_no, rel_at + 1);
        unary = true;
        pending.push_back(std::move(p));
      } else {
        Pending p;
        p.line = line_no;
        p.from_column = head_at + 1;
        p.from = head;
        p.to_column = in.column() + 1;
        p.to = std::string(in.word());
        if (p.to.empty()) in.fail("expected a second point name");
        in.skip_space();
        const std::size_t rel_at = in.position();
        p.literal = parse_relation_at(line.substr(rel_at), line_no, rel_at + 1);
        pending.push_back(std::move(p));
      }
    }
    start = end + 1;
  }

  Problem problem;
  const std::size_t offset = unary ? 1 : 0;
  if (unary) problem.names.push_back(kOriginName);
  problem.names.insert(problem.names.end(), declared.begin(), declared.end());
  auto resolve = [&](const std::string& name, std::size_t line, std::size_t column) {
    const auto it = seen.find(name);
    if (it == seen.end()) throw ParseError(line, column, "undeclared point '" + name + "'");
    return it->second + offset;
  };
  for (const Pending& p : pending) {
    TaggedConstraint c;
    c.from = resolve(p.from, p.line, p.from_column);
    c.to = p.to.empty() ? 0 : resolve(p.to, p.line, p.to_column);
    c.relation = p.literal.relation;
    c.origin = p.literal.origin;
    problem.constraints.push_back(std::move(c));
  }
  return problem;
}

}  // namespace scsp
