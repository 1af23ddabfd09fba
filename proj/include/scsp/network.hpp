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

#ifndef SCSP_NETWORK_HPP_
#define SCSP_NETWORK_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "scsp/calculus.hpp"
#include "scsp/relation.hpp"

namespace scsp {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const Edge&) const = default;
};

struct Constraint {
  std::size_t from = 0;
  std::size_t to = 0;
  GeneralRelation relation;
};

// Constraint matrix over n point variables. Entry (i, j) constrains point i
// relative to point j. Diagonal entries start as {e}; set() keeps (j, i) equal
// to the converse of (i, j).
class Network {
 public:
  explicit Network(std::size_t n);
  explicit Network(std::vector<std::string> names);

  std::size_t size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }

  const GeneralRelation& at(std::size_t i, std::size_t j) const {
    return matrix_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, const GeneralRelation& r);
  // Intersects r into entry (i, j). Returns true when the entry changed.
  bool constrain(std::size_t i, std::size_t j, const GeneralRelation& r);

  // Every off-diagonal entry basic or universal.
  bool is_scenario() const;
  std::optional<Edge> first_empty() const;
  // Diagonal and converse properties.
  bool well_formed() const;

 private:
  std::size_t n_;
  std::vector<std::string> names_;
  std::vector<GeneralRelation> matrix_;
};

// Throws std::out_of_range on a bad index. A constraint with from == to is
// intersected into the diagonal.
Network from_constraints(std::size_t n, const std::vector<Constraint>& constraints);

struct PathConsistencyResult {
  std::optional<Edge> empty_edge;  // set when an entry became empty
  std::size_t revisions = 0;

  bool consistent() const { return !empty_edge.has_value(); }
};

// Refines the network in place to the path-consistent fixpoint of
// B_ij <- B_ij & (B_ik o B_kj), stopping at the first empty entry.
PathConsistencyResult path_consistency(Network& network,
                                       const AlgebraOptions& options = {});

// A constraint matrix over one qualitative calculus.
class QualitativeNetwork {
 public:
  QualitativeNetwork(Calculus c, std::size_t n);

  Calculus calculus() const { return calculus_; }
  std::size_t size() const { return n_; }
  const QualitativeRelation& at(std::size_t i, std::size_t j) const {
    return matrix_[i * n_ + j];
  }
  void set(std::size_t i, std::size_t j, const QualitativeRelation& r);
  bool constrain(std::size_t i, std::size_t j, const QualitativeRelation& r);

 private:
  Calculus calculus_;
  std::size_t n_;
  std::vector<QualitativeRelation> matrix_;
};

PathConsistencyResult path_consistency(QualitativeNetwork& network);

// Where a constraint came from: a literal of one calculus, or a quantitative
// sector constraint.
enum class ConstraintOrigin { kConeShaped, kProjectionBased, kQuantitative };

struct TaggedConstraint {
  std::size_t from = 0;
  std::size_t to = 0;
  GeneralRelation relation;
  ConstraintOrigin origin = ConstraintOrigin::kQuantitative;
};

struct Problem {
  std::vector<std::string> names;
  std::vector<TaggedConstraint> constraints;
};

struct PreprocessResult {
  std::optional<Calculus> refuted_by;
  std::optional<Edge> empty_edge;
  // Refined networks; only meaningful for calculi that had constraints.
  QualitativeNetwork cone;
  QualitativeNetwork projection;
  bool had_cone = false;
  bool had_projection = false;

  bool consistent() const { return !refuted_by.has_value(); }
};

// Path consistency run separately on the cs and pb components with the
// derived composition tables.
PreprocessResult qualitative_preprocess(const Problem& problem);

// Quantitative network of all constraints, tightened by the refined
// qualitative relations of a consistent preprocessing run.
Network quantitative_network(const Problem& problem,
                             const PreprocessResult* refined = nullptr);

}  // namespace scsp

#endif  // SCSP_NETWORK_HPP_
