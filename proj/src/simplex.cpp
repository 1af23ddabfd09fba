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

#include "scsp/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>
#include <limits>

namespace scsp {

namespace {

constexpr double kPivotTolerance = 1e-8;
constexpr double kCostTolerance = 1e-10;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t columns)
      : columns_(columns), a_(rows, std::vector<double>(columns, 0.0)), b_(rows, 0.0),
        basis_(rows, 0), allowed_(columns, true), origin_(rows) {
    for (std::size_t i = 0; i < rows; ++i) origin_[i] = i;
  }

  std::vector<std::vector<double>>& a() { return a_; }
  std::vector<double>& b() { return b_; }
  std::vector<std::size_t>& basis() { return basis_; }
  std::vector<bool>& allowed() { return allowed_; }
  std::size_t pivots() const { return pivots_; }
  // Original row index of each tableau row.
  const std::vector<std::size_t>& origin() const { return origin_; }

  // Maximizes cost . x from the current basic feasible solution. Returns false
  // when unbounded.
  bool optimize(const std::vector<double>& cost, std::size_t cap) {
    const std::size_t m = b_.size();
    std::vector<double> reduced(columns_);
    while (true) {
      if (pivots_ >= cap) {
        throw NumericalInstability("simplex iteration cap reached");
      }
      for (std::size_t j = 0; j < columns_; ++j) {
        double z = 0.0;
        for (std::size_t i = 0; i < m; ++i) z += cost[basis_[i]] * a_[i][j];
        reduced[j] = cost[j] - z;
      }
      // Bland: lowest-index improving column.
      std::size_t entering = columns_;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (allowed_[j] && !is_basic(j) && reduced[j] > kCostTolerance) {
          entering = j;
          break;
        }
      }
      if (entering == columns_) return true;

      // Entries this small relative to the column are treated as zero;
      // pivoting on them amplifies rounding without bound.
      double column_scale = 1.0;
      for (std::size_t i = 0; i < m; ++i) column_scale = std::max(column_scale, std::abs(a_[i][entering]));
      const double threshold = kPivotTolerance * column_scale;
      std::size_t leaving = m;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (a_[i][entering] <= threshold) continue;
        const double ratio = b_[i] / a_[i][entering];
        if (leaving == m || ratio < best_ratio - 1e-12 ||
            (std::abs(ratio - best_ratio) <= 1e-12 && basis_[i] < basis_[leaving])) {
          best_ratio = ratio;
          leaving = i;
        }
      }
      if (leaving == m) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t row, std::size_t column) {
    const double p = a_[row][column];
    for (double& v : a_[row]) v /= p;
    b_[row] /= p;
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (i == row) continue;
      const double factor = a_[i][column];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < columns_; ++j) a_[i][j] -= factor * a_[row][j];
      b_[i] -= factor * b_[row];
      if (std::abs(b_[i]) < 1e-13) b_[i] = 0.0;
    }
    basis_[row] = column;
    ++pivots_;
  }

  void drop_row(std::size_t row) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(row));
    b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(row));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(row));
    origin_.erase(origin_.begin() + static_cast<std::ptrdiff_t>(row));
  }

 private:
  bool is_basic(std::size_t column) const {
    for (std::size_t v : basis_) {
      if (v == column) return true;
    }
    return false;
  }

  std::size_t columns_;
  std::vector<std::vector<double>> a_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::vector<std::size_t> origin_;
  std::size_t pivots_ = 0;
};

// Solves B y = rhs by Gaussian elimination with partial pivoting, where B
// holds the given columns of `matrix` restricted to `rows`. Empty on a
// numerically singular basis.
std::optional<std::vector<double>> solve_basis(const std::vector<std::vector<double>>& matrix,
                                               const std::vector<double>& rhs,
                                               const std::vector<std::size_t>& rows,
                                               const std::vector<std::size_t>& basis) {
  const std::size_t k = rows.size();
  std::vector<std::vector<double>> m(k, std::vector<double>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = matrix[rows[i]][basis[j]];
    m[i][k] = rhs[rows[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t best = c;
    for (std::size_t i = c + 1; i < k; ++i) {
      if (std::abs(m[i][c]) > std::abs(m[best][c])) best = i;
    }
    if (std::abs(m[best][c]) < 1e-12) return std::nullopt;
    std::swap(m[c], m[best]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == c || m[i][c] == 0.0) continue;
      const double f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<double> y(k);
  for (std::size_t i = 0; i < k; ++i) y[i] = m[i][k] / m[i][i];
  return y;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem, std::size_t iteration_cap) {
  const std::size_t n = problem.variables;
  const std::size_t m = problem.rows.size();

  // Flip rows to non-negative right-hand sides.
  std::vector<LpProblem::Row> rows = problem.rows;
  for (LpProblem::Row& row : rows) {
    row.coefficients.resize(n, 0.0);
    if (row.rhs < 0.0) {
      for (double& c : row.coefficients) c = -c;
      row.rhs = -row.rhs;
      if (row.sense == Sense::kLessEqual) {
        row.sense = Sense::kGreaterEqual;
      } else if (row.sense == Sense::kGreaterEqual) {
        row.sense = Sense::kLessEqual;
      }
    }
  }

  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const LpProblem::Row& row : rows) {
    if (row.sense != Sense::kEqual) ++slack_count;
    if (row.sense != Sense::kLessEqual) ++artificial_count;
  }
  const std::size_t first_slack = n;
  const std::size_t first_artificial = n + slack_count;
  const std::size_t columns = first_artificial + artificial_count;

  Tableau tableau(m, columns);
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (std::size_t i = 0; i < m; ++i) {
    const LpProblem::Row& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) tableau.a()[i][j] = row.coefficients[j];
    tableau.b()[i] = row.rhs;
    switch (row.sense) {
      case Sense::kLessEqual:
        tableau.a()[i][next_slack] = 1.0;
        tableau.basis()[i] = next_slack++;
        break;
      case Sense::kGreaterEqual:
        tableau.a()[i][next_slack++] = -1.0;
        tableau.a()[i][next_artificial] = 1.0;
        tableau.basis()[i] = next_artificial++;
        break;
      case Sense::kEqual:
        tableau.a()[i][next_artificial] = 1.0;
        tableau.basis()[i] = next_artificial++;
        break;
    }
  }

  const std::vector<std::vector<double>> original = tableau.a();
  const std::vector<double> original_rhs = tableau.b();

  LpSolution solution;
  if (artificial_count > 0) {
    std::vector<double> phase_one(columns, 0.0);
    for (std::size_t j = first_artificial; j < columns; ++j) phase_one[j] = -1.0;
    tableau.optimize(phase_one, iteration_cap);
    double infeasibility = 0.0;
    for (std::size_t i = 0; i < tableau.b().size(); ++i) {
      if (tableau.basis()[i] >= first_artificial) infeasibility += tableau.b()[i];
    }
    if (infeasibility > 1e-9) {
      solution.status = LpStatus::kInfeasible;
      solution.pivots = tableau.pivots();
      return solution;
    }
    // Drive zero-level artificials out of the basis; drop redundant rows.
    for (std::size_t i = 0; i < tableau.b().size();) {
      if (tableau.basis()[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t replacement = columns;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (std::abs(tableau.a()[i][j]) > kPivotTolerance) {
          replacement = j;
          break;
        }
      }
      if (replacement == columns) {
        tableau.drop_row(i);
      } else {
        tableau.pivot(i, replacement);
        ++i;
      }
    }
    for (std::size_t j = first_artificial; j < columns; ++j) tableau.allowed()[j] = false;
  }

  std::vector<double> cost(columns, 0.0);
  for (std::size_t j = 0; j < n && j < problem.objective.size(); ++j) {
    cost[j] = problem.objective[j];
  }
  const bool bounded = tableau.optimize(cost, iteration_cap);
  solution.pivots = tableau.pivots();
  if (!bounded) {
    solution.status = LpStatus::kUnbounded;
    return solution;
  }
  solution.status = LpStatus::kOptimal;
  solution.x.assign(n, 0.0);
  // Basic values are recomputed from the original rows; the tableau's copy
  // carries the rounding of every pivot.
  std::vector<double> basic = tableau.b();
  if (const auto exact = solve_basis(original, original_rhs, tableau.origin(), tableau.basis())) {
    if (std::all_of(exact->begin(), exact->end(), [](double v) { return v > -1e-9; })) {
      basic = *exact;
    }
  }
  for (std::size_t i = 0; i < basic.size(); ++i) {
    if (tableau.basis()[i] < n) solution.x[tableau.basis()[i]] = std::max(0.0, basic[i]);
  }
  for (std::size_t j = 0; j < n; ++j) solution.value += cost[j] * solution.x[j];
  return solution;
}

namespace {
constexpr double kCoordinateBox = 1.0;
}  // namespace

LpResult check_feasible(const LinearSystem& system) {
  // Variables: p_k, q_k with v_k = p_k - q_k, then the margin t.
  const std::size_t unknowns = system.unknowns;
  const std::size_t margin = 2 * unknowns;
  LpProblem lp;
  lp.variables = margin + 1;
  lp.objective.assign(lp.variables, 0.0);
  lp.objective[margin] = 1.0;

  bool any_strict = false;
  for (const LinearRow& row : system.rows) {
    LpProblem::Row out;
    out.coefficients.assign(lp.variables, 0.0);
    for (const auto& [unknown, coefficient] : row.terms) {
      out.coefficients[unknown] += coefficient;
      out.coefficients[unknowns + unknown] -= coefficient;
    }
    out.rhs = row.rhs;
    switch (row.relation) {
      case RowRelation::kLess:
        out.coefficients[margin] = 1.0;
        out.sense = Sense::kLessEqual;
        any_strict = true;
        break;
      case RowRelation::kLessEqual:
        out.sense = Sense::kLessEqual;
        break;
      case RowRelation::kEqual:
        out.sense = Sense::kEqual;
        break;
    }
    lp.rows.push_back(std::move(out));
  }
  LpProblem::Row cap;
  cap.coefficients.assign(lp.variables, 0.0);
  cap.coefficients[margin] = 1.0;
  cap.rhs = 1.0;
  lp.rows.push_back(std::move(cap));
  // Homogeneous systems are scale-free, so coordinates can be boxed without
  // changing the verdict. Nearly parallel rows otherwise push the vertex far
  // out, where the tableau loses precision.
  const bool homogeneous = std::all_of(system.rows.begin(), system.rows.end(),
                                       [](const LinearRow& r) { return r.rhs == 0.0; });
  for (std::size_t k = 0; homogeneous && k < unknowns; ++k) {
    LpProblem::Row box;
    box.coefficients.assign(lp.variables, 0.0);
    box.coefficients[k] = 1.0;
    box.coefficients[unknowns + k] = 1.0;
    box.rhs = kCoordinateBox;
    lp.rows.push_back(std::move(box));
  }

  const LpSolution solution = solve_lp(lp);
  LpResult result;
  if (solution.status != LpStatus::kOptimal) return result;

  result.margin = solution.x[margin];
  if (any_strict && result.margin <= tolerance().strict) return result;

  std::vector<double> v(unknowns);
  for (std::size_t k = 0; k < unknowns; ++k) v[k] = solution.x[k] - solution.x[unknowns + k];
  for (const LinearRow& row : system.rows) {
    if (!row.holds(v, 1e-9, tolerance().strict / 2.0)) {
      std::ostringstream msg;
      msg << "simplex witness fails an independent row check (lhs " << row.evaluate(v)
          << ", rhs " << row.rhs << ", margin " << result.margin << ")";
      throw NumericalInstability(msg.str());
    }
  }
  result.status = Feasibility::kFeasible;
  result.witness = std::move(v);
  return result;
}

}  // namespace scsp
