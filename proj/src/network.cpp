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

#include "scsp/network.hpp"

#include <deque>
#include <stdexcept>

namespace scsp {

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("P" + std::to_string(i));
  return names;
}

// Queue-driven propagation shared by the quantitative and qualitative
// networks. When edge (i, j) changes, every triangle through it is revised:
// (i, k) via i-j-k and (k, j) via k-i-j. Converse entries are maintained by
// the network's set().
template <typename Net, typename Compose, typename Intersect, typename Skip>
PathConsistencyResult propagate(Net& net, Compose compose_fn,
                                Intersect intersect_fn, Skip skip) {
  PathConsistencyResult result;
  const std::size_t n = net.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (net.at(i, j).empty_relation()) {
        result.empty_edge = Edge{i, j};
        return result;
      }
    }
  }

  std::deque<Edge> queue;
  std::vector<char> queued(n * n, 0);
  auto push = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (!queued[i * n + j]) {
      queued[i * n + j] = 1;
      queue.push_back({i, j});
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) push(i, j);
  }

  // target <- target & (left o right)
  auto revise = [&](std::size_t ti, std::size_t tj, const auto& left,
                    const auto& right) -> bool {
    if (skip(left) || skip(right)) return true;
    const auto& current = net.at(ti, tj);
    auto refined = intersect_fn(current, compose_fn(left, right));
    ++result.revisions;
    if (refined == current) return true;
    net.set(ti, tj, refined);
    if (refined.empty_relation()) {
      result.empty_edge = Edge{ti, tj};
      return false;
    }
    push(ti, tj);
    return true;
  };

  while (!queue.empty()) {
    const Edge e = queue.front();
    queue.pop_front();
    queued[e.from * n + e.to] = 0;
    const std::size_t i = e.from;
    const std::size_t j = e.to;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      if (!revise(i, k, net.at(i, j), net.at(j, k))) return result;
      if (!revise(k, j, net.at(k, i), net.at(i, j))) return result;
    }
  }
  return result;
}

// Adapters giving both relation types the same surface.
struct QuantEntry {
  GeneralRelation r;
  bool empty_relation() const { return r.is_empty(); }
  bool operator==(const QuantEntry& o) const { return r == o.r; }
};

}  // namespace

Network::Network(std::size_t n) : Network(default_names(n)) {}

Network::Network(std::vector<std::string> names)
    : n_(names.size()),
      names_(std::move(names)),
      matrix_(n_ * n_, GeneralRelation::universal()) {
  for (std::size_t i = 0; i < n_; ++i) matrix_[i * n_ + i] = GeneralRelation::equality();
}

void Network::set(std::size_t i, std::size_t j, const GeneralRelation& r) {
  matrix_[i * n_ + j] = r;
  if (i != j) {
    matrix_[j * n_ + i] = converse(r);
  }
}

bool Network::constrain(std::size_t i, std::size_t j, const GeneralRelation& r) {
  const GeneralRelation refined = intersect(at(i, j), r);
  if (refined == at(i, j)) return false;
  set(i, j, refined);
  return true;
}

bool Network::is_scenario() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_basic()) return false;
    }
  }
  return true;
}

std::optional<Edge> Network::first_empty() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (at(i, j).is_empty()) return Edge{i, j};
    }
  }
  return std::nullopt;
}

bool Network::well_formed() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (!(at(i, i) == GeneralRelation::equality())) return false;
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!(at(i, j) == converse(at(j, i)))) return false;
    }
  }
  return true;
}

Network from_constraints(std::size_t n, const std::vector<Constraint>& constraints) {
  Network net(n);
  for (const Constraint& c : constraints) {
    if (c.from >= n || c.to >= n) {
      throw std::out_of_range("constraint references variable " +
                              std::to_string(std::max(c.from, c.to)) +
                              " in a network of " + std::to_string(n));
    }
    net.constrain(c.from, c.to, c.relation);
  }
  return net;
}

PathConsistencyResult path_consistency(Network& network,
                                       const AlgebraOptions& options) {
  // Thin view so the shared propagation loop can ask for emptiness uniformly.
  struct View {
    Network& net;
    std::size_t size() const { return net.size(); }
    QuantEntry at(std::size_t i, std::size_t j) const { return {net.at(i, j)}; }
    void set(std::size_t i, std::size_t j, const QuantEntry& e) { net.set(i, j, e.r); }
  };
  View view{network};
  return propagate(
      view,
      [&](const QuantEntry& a, const QuantEntry& b) {
        return QuantEntry{compose(a.r, b.r, options)};
      },
      [](const QuantEntry& a, const QuantEntry& b) {
        return QuantEntry{intersect(a.r, b.r)};
      },
      [](const QuantEntry& a) { return a.r.is_universal(); });
}

namespace {

struct QualEntry {
  QualitativeRelation r;
  bool empty_relation() const { return r.empty(); }
  bool operator==(const QualEntry& o) const { return r == o.r; }
};

}  // namespace

QualitativeNetwork::QualitativeNetwork(Calculus c, std::size_t n)
    : calculus_(c), n_(n), matrix_(n * n, QualitativeRelation::universal(c)) {
  for (std::size_t i = 0; i < n_; ++i) {
    matrix_[i * n_ + i] = QualitativeRelation::of({c, Direction::kEq});
  }
}

void QualitativeNetwork::set(std::size_t i, std::size_t j,
                             const QualitativeRelation& r) {
  matrix_[i * n_ + j] = r;
  if (i != j) matrix_[j * n_ + i] = qualitative_converse(r);
}

bool QualitativeNetwork::constrain(std::size_t i, std::size_t j,
                                   const QualitativeRelation& r) {
  const QualitativeRelation refined = qualitative_intersect(at(i, j), r);
  if (refined == at(i, j)) return false;
  set(i, j, refined);
  return true;
}

PathConsistencyResult path_consistency(QualitativeNetwork& network) {
  struct View {
    QualitativeNetwork& net;
    std::size_t size() const { return net.size(); }
    QualEntry at(std::size_t i, std::size_t j) const { return {net.at(i, j)}; }
    void set(std::size_t i, std::size_t j, const QualEntry& e) { net.set(i, j, e.r); }
  };
  View view{network};
  return propagate(
      view,
      [](const QualEntry& a, const QualEntry& b) {
        return QualEntry{qualitative_compose(a.r, b.r)};
      },
      [](const QualEntry& a, const QualEntry& b) {
        return QualEntry{qualitative_intersect(a.r, b.r)};
      },
      [](const QualEntry& a) { return a.r.is_universal(); });
}

PreprocessResult qualitative_preprocess(const Problem& problem) {
  const std::size_t n = problem.names.size();
  PreprocessResult result{std::nullopt,
                          std::nullopt,
                          QualitativeNetwork(Calculus::kConeShaped, n),
                          QualitativeNetwork(Calculus::kProjectionBased, n)};
  for (const TaggedConstraint& c : problem.constraints) {
    if (c.from >= n || c.to >= n) throw std::out_of_range("constraint index out of range");
    if (c.origin == ConstraintOrigin::kConeShaped) {
      result.cone.constrain(c.from, c.to,
                            covering_atoms(Calculus::kConeShaped, c.relation));
      result.had_cone = true;
    } else if (c.origin == ConstraintOrigin::kProjectionBased) {
      result.projection.constrain(
          c.from, c.to, covering_atoms(Calculus::kProjectionBased, c.relation));
      result.had_projection = true;
    }
  }
  if (result.had_cone) {
    const PathConsistencyResult pc = path_consistency(result.cone);
    if (!pc.consistent()) {
      result.refuted_by = Calculus::kConeShaped;
      result.empty_edge = pc.empty_edge;
      return result;
    }
  }
  if (result.had_projection) {
    const PathConsistencyResult pc = path_consistency(result.projection);
    if (!pc.consistent()) {
      result.refuted_by = Calculus::kProjectionBased;
      result.empty_edge = pc.empty_edge;
    }
  }
  return result;
}

Network quantitative_network(const Problem& problem, const PreprocessResult* refined) {
  Network net(problem.names);
  const std::size_t n = problem.names.size();
  for (const TaggedConstraint& c : problem.constraints) {
    if (c.from >= n || c.to >= n) throw std::out_of_range("constraint index out of range");
    net.constrain(c.from, c.to, c.relation);
  }
  if (refined != nullptr && refined->consistent()) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (refined->had_cone && !refined->cone.at(i, j).is_universal()) {
          net.constrain(i, j, region_of(refined->cone.at(i, j)));
        }
        if (refined->had_projection && !refined->projection.at(i, j).is_universal()) {
          net.constrain(i, j, region_of(refined->projection.at(i, j)));
        }
      }
    }
  }
  return net;
}

}  // namespace scsp
