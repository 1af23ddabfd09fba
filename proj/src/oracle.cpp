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

#include "scsp/oracle.hpp"

#include <cmath>
#include <random>

namespace scsp {

std::optional<Witness> sample_witness(const Network& network, const OracleBudget& budget) {
  const std::size_t n = network.size();
  std::mt19937_64 rng(budget.seed);
  const int extent = std::max(1, budget.grid_extent);
  std::uniform_int_distribution<int> grid(-extent, extent);
  std::uniform_real_distribution<double> real(-extent, extent);

  Witness w;
  w.names = network.names();
  w.points.resize(n);
  for (std::size_t sample = 0; sample < budget.samples; ++sample) {
    const bool on_grid = sample < budget.samples / 2 || budget.samples == 1;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      w.points[i] = on_grid ? Point{static_cast<double>(grid(rng)), static_cast<double>(grid(rng))}
                            : Point{real(rng), real(rng)};
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = sat(network.at(i, j), w.points[i], w.points[j]);
      }
    }
    if (ok) return w;
  }
  return std::nullopt;
}

CompositionSample compose_oracle(const Sector& r, const Sector& s,
                                 const OracleBudget& budget, double bin_width) {
  CompositionSample out;
  out.bin_width = bin_width > 0.0 ? bin_width : eps_angle();
  std::mt19937_64 rng(budget.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int extent = std::max(1, budget.grid_extent);
  std::uniform_int_distribution<int> grid_magnitude(1, extent);

  // A direction in the sector; closed bounds are hit exactly now and then.
  auto direction_in = [&](const Sector& sector) -> std::optional<double> {
    const double pick = unit(rng);
    double offset = 0.0;
    if (sector.is_singleton()) {
      offset = 0.0;
    } else if (pick < 0.1) {
      if (!sector.lo_closed()) return std::nullopt;
      offset = 0.0;
    } else if (pick < 0.2) {
      if (!sector.hi_closed()) return std::nullopt;
      offset = sector.span();
    } else {
      offset = unit(rng) * sector.span();
      if (offset == 0.0 || offset == sector.span()) return std::nullopt;
    }
    return sector.lo().radians() + offset;
  };

  for (std::size_t sample = 0; sample < budget.samples; ++sample) {
    const auto t1 = direction_in(r);
    const auto t2 = direction_in(s);
    if (!t1 || !t2) continue;
    const bool on_grid = sample % 2 == 0;
    const double m1 = on_grid ? grid_magnitude(rng) : extent * (1.0 - unit(rng));
    const double m2 = on_grid ? grid_magnitude(rng) : extent * (1.0 - unit(rng));
    const double x = m1 * std::cos(*t1) + m2 * std::cos(*t2);
    const double y = m1 * std::sin(*t1) + m2 * std::sin(*t2);
    if (std::hypot(x, y) <= 1e-9 * (m1 + m2)) {
      out.equality_seen = true;
      continue;
    }
    const double angle = direction_of(x, y).radians();
    out.bins.insert(static_cast<long long>(std::floor(angle / out.bin_width)));
  }
  return out;
}

TableReport table_check(Calculus c, const OracleBudget& budget) {
  TableReport report;
  const CompositionTable& table = composition_table(c);
  const int e = budget.grid_extent;
  std::vector<Point> grid;
  for (int x = -e; x <= e; ++x) {
    for (int y = -e; y <= e; ++y) grid.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  // Atom of every ordered pair, computed once.
  const std::size_t g = grid.size();
  std::vector<Direction> atom(g * g);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) atom[i * g + j] = atom_of(c, grid[i], grid[j]).name;
  }
  for (std::size_t a = 0; a < g; ++a) {
    for (std::size_t b = 0; b < g; ++b) {
      for (std::size_t cc = 0; cc < g; ++cc) {
        if (report.triples_checked >= budget.samples) return report;
        ++report.triples_checked;
        const Direction first = atom[a * g + b];
        const Direction second = atom[b * g + cc];
        const Direction observed = atom[a * g + cc];
        if (!table.entry(first, second).contains(observed)) {
          report.violations.push_back({first, second, observed, grid[a], grid[b], grid[cc]});
        }
      }
    }
  }
  return report;
}

}  // namespace scsp
