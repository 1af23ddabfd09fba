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

#ifndef SCSP_SIMPLEX_HPP_
#define SCSP_SIMPLEX_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scsp/linearize.hpp"

namespace scsp {

// Raised when the simplex exceeds its iteration cap.
class NumericalInstability : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

// maximize objective . x  subject to  rows, x >= 0.
struct LpProblem {
  struct Row {
    std::vector<double> coefficients;  // one per variable
    Sense sense = Sense::kLessEqual;
    double rhs = 0.0;
  };

  std::size_t variables = 0;
  std::vector<double> objective;
  std::vector<Row> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  std::vector<double> x;
  std::size_t pivots = 0;
};

// Two-phase dense-tableau simplex with Bland's rule.
LpSolution solve_lp(const LpProblem& problem, std::size_t iteration_cap = 200000);

enum class Feasibility { kFeasible, kInfeasible };

struct LpResult {
  Feasibility status = Feasibility::kInfeasible;
  std::optional<std::vector<double>> witness;
  double margin = 0.0;  // optimal slack on strict rows, capped at 1

  bool feasible() const { return status == Feasibility::kFeasible; }
};

// Max-margin feasibility: maximize t subject to a.v + t <= b for strict rows,
// a.v <= b (or =) for the rest, and t <= 1. Feasible iff the optimal t
// exceeds tolerance().strict; the optimal v is the witness. When every rhs
// is zero the coordinates are also boxed to |v_k| <= 1, which leaves the
// verdict unchanged and keeps the witness well scaled.
LpResult check_feasible(const LinearSystem& system);

}  // namespace scsp

#endif  // SCSP_SIMPLEX_HPP_
