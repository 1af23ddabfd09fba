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

#include "scsp/search.hpp"

#include <algorithm>

#include "scsp/linearize.hpp"
#include "scsp/simplex.hpp"

namespace scsp {

namespace {

// Branch pieces stay a little narrower than a half-turn so that every leaf
// sector is a convex cone.
double branch_span_limit() { return kPi - 4.0 * eps_angle(); }

struct Frame {
  Network network;
  Edge edge;
  std::vector<BasicRelation> options;
  std::size_t next = 0;
};

std::optional<Edge> pick_edge(const Network& net, EdgeOrdering ordering) {
  std::optional<Edge> best;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    for (std::size_t j = i + 1; j < net.size(); ++j) {
      if (settled(net.at(i, j))) continue;
      if (ordering == EdgeOrdering::kFirstUnlabeled) return Edge{i, j};
      const std::size_t size = net.at(i, j).disjuncts(branch_span_limit()).size();
      if (!best || size < best_size) {
        best = Edge{i, j};
        best_size = size;
      }
    }
  }
  return best;
}

Witness make_witness(const Network& net, const std::vector<double>& v) {
  Witness w;
  w.names = net.names();
  w.points.resize(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    w.points[i] = {v[x_unknown(i)], v[y_unknown(i)]};
  }
  const auto origin = std::find(w.names.begin(), w.names.end(), kOriginName);
  if (origin != w.names.end()) {
    const Point shift = w.points[static_cast<std::size_t>(origin - w.names.begin())];
    for (Point& p : w.points) {
      p.x -= shift.x;
      p.y -= shift.y;
    }
  }
  return w;
}

}  // namespace

bool witness_satisfies(const Network& network, const Witness& witness) {
  for (std::size_t i = 0; i < network.size(); ++i) {
    for (std::size_t j = 0; j < network.size(); ++j) {
      if (!sat(network.at(i, j), witness.points[i], witness.points[j])) return false;
    }
  }
  return true;
}

bool settled(const GeneralRelation& r) {
  if (r.is_universal()) return true;
  if (r.sectors().empty()) return r.has_equality();
  return !r.has_equality() && r.sectors().size() == 1 &&
         r.sectors().front().span() <= branch_span_limit() + eps_angle();
}

std::vector<BasicRelation> branch_options(const GeneralRelation& r,
                                          DisjunctOrdering ordering) {
  std::vector<BasicRelation> options = r.disjuncts(branch_span_limit());
  if (ordering == DisjunctOrdering::kWidestFirst) {
    std::stable_sort(options.begin(), options.end(),
                     [](const BasicRelation& a, const BasicRelation& b) {
                       if (a.is_equality() != b.is_equality()) return a.is_equality();
                       if (a.is_equality()) return false;
                       return a.sector().span() > b.sector().span();
                     });
  }
  return options;
}

SearchResult consistent(const Network& network, const SearchConfig& config) {
  SearchResult result;
  std::vector<Frame> stack;

  // Runs one node: path consistency, then either a leaf decision or a new
  // frame. Returns true when a consistent leaf was found.
  auto expand = [&](Network net) -> bool {
    ++result.stats.nodes;
    if (!path_consistency(net, config.algebra).consistent()) return false;
    const std::optional<Edge> edge = pick_edge(net, config.edge_ordering);
    if (edge) {
      std::vector<BasicRelation> options =
          branch_options(net.at(edge->from, edge->to), config.disjunct_ordering);
      stack.push_back(Frame{std::move(net), *edge, std::move(options), 0});
      return false;
    }
    ++result.stats.leaves;
    if (config.on_leaf) config.on_leaf(net);
    if (!config.lp_at_leaves) {
      result.scenario = std::move(net);
      return true;
    }
    ++result.stats.lp_calls;
    const LpResult lp = check_feasible(bsp_to_lp(net));
    if (!lp.feasible()) {
      ++result.stats.lp_rejections;
      return false;
    }
    Witness witness = make_witness(net, *lp.witness);
    if (!witness_satisfies(network, witness)) {
      throw NumericalInstability("LP witness violates the input network");
    }
    result.witness = std::move(witness);
    result.scenario = std::move(net);
    return true;
  };

  if (expand(network)) {
    result.satisfiable = true;
    return result;
  }
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == top.options.size()) {
      stack.pop_back();
      continue;
    }
    Network child = top.network;
    child.set(top.edge.from, top.edge.to, GeneralRelation::of(top.options[top.next++]));
    if (expand(std::move(child))) {
      result.satisfiable = true;
      return result;
    }
  }
  return result;
}

PipelineResult solve_pipeline(const Problem& problem, const SearchConfig& config) {
  PipelineResult out;
  const PreprocessResult qualitative = qualitative_preprocess(problem);
  if (!qualitative.consistent()) {
    out.refuted_at_step = 1;
    out.refuting_calculus = qualitative.refuted_by;
    out.empty_edge = qualitative.empty_edge;
    return out;
  }

  Network net = quantitative_network(problem, &qualitative);
  const PathConsistencyResult pc = path_consistency(net, config.algebra);
  if (!pc.consistent()) {
    out.refuted_at_step = 2;
    out.empty_edge = pc.empty_edge;
    return out;
  }

  SearchResult search = consistent(net, config);
  out.stats = search.stats;
  if (!search.satisfiable) {
    out.refuted_at_step = 3;
    return out;
  }
  out.satisfiable = true;
  out.scenario = std::move(search.scenario);
  out.witness = std::move(search.witness);
  return out;
}

}  // namespace scsp
