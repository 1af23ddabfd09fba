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

// Backtracking scenario search: path consistency at every node, branching on
// the basic disjuncts of one unsettled edge, and an LP feasibility check at
// the leaves.

#ifndef SCSP_SEARCH_HPP_
#define SCSP_SEARCH_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scsp/network.hpp"

namespace scsp {

// Name of the variable pinned at (0, 0) when unary constraints are present.
inline constexpr const char* kOriginName = "__origin";

enum class EdgeOrdering { kFirstUnlabeled, kSmallestDomain };
enum class DisjunctOrdering { kInputOrder, kWidestFirst };

struct SearchConfig {
  EdgeOrdering edge_ordering = EdgeOrdering::kFirstUnlabeled;
  DisjunctOrdering disjunct_ordering = DisjunctOrdering::kInputOrder;
  bool lp_at_leaves = true;
  AlgebraOptions algebra;
  // Called on every leaf reached (after path consistency), before the LP.
  std::function<void(const Network&)> on_leaf;
};

struct Witness {
  std::vector<std::string> names;
  std::vector<Point> points;
};

// Does every entry of the network hold at the witness?
bool witness_satisfies(const Network& network, const Witness& witness);

struct SearchStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t lp_calls = 0;
  std::size_t lp_rejections = 0;
};

struct SearchResult {
  bool satisfiable = false;
  std::optional<Network> scenario;
  // Absent when LP at leaves is disabled.
  std::optional<Witness> witness;
  SearchStats stats;
};

// An edge needs no branching when it is universal, {e}, or a single sector
// narrower than a half-turn.
bool settled(const GeneralRelation& r);

// Basic pieces a search node branches over, in the configured order.
std::vector<BasicRelation> branch_options(const GeneralRelation& r,
                                          DisjunctOrdering ordering);

SearchResult consistent(const Network& network, const SearchConfig& config = {});

struct PipelineResult {
  bool satisfiable = false;
  // 0 when satisfiable; otherwise 1 (qualitative), 2 (quantitative path
  // consistency) or 3 (search).
  int refuted_at_step = 0;
  std::optional<Calculus> refuting_calculus;
  std::optional<Edge> empty_edge;
  std::optional<Network> scenario;
  std::optional<Witness> witness;
  SearchStats stats;
};

// Qualitative preprocessing, quantitative path consistency, then search.
PipelineResult solve_pipeline(const Problem& problem, const SearchConfig& config = {});

}  // namespace scsp

#endif  // SCSP_SEARCH_HPP_
