// Copyright 2026 The lppgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "lppgame/errors.h"
#include "lppgame/lp.h"

namespace lppgame {
namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kCostTolerance = 1e-11;
constexpr int kIterationLimit = 100000;

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), cols_(cols), cells_((rows + 1) * (cols + 1), 0.0), basis_(rows, -1) {}

  double& at(int r, int c) { return cells_[r * (cols_ + 1) + c]; }
  double at(int r, int c) const { return cells_[r * (cols_ + 1) + c]; }
  double& rhs(int r) { return at(r, cols_); }
  double rhs(int r) const { return at(r, cols_); }
  // Row `rows_` holds reduced costs in the form c_B B^-1 A_j - c_j, and the
  // current objective value in its rhs slot.
  double& cost(int c) { return at(rows_, c); }
  double objective() const { return at(rows_, cols_); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int basis(int r) const { return basis_[r]; }
  void set_basis(int r, int c) { basis_[r] = c; }

  void Pivot(int pr, int pc) {
    const double inv = 1.0 / at(pr, pc);
    for (int c = 0; c <= cols_; ++c) at(pr, c) *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r <= rows_; ++r) {
      if (r == pr) continue;
      const double factor = at(r, pc);
      if (factor == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= factor * at(pr, c);
      at(r, pc) = 0.0;
    }
    basis_[pr] = pc;
  }

  void SetCosts(const Vector& costs) {
    for (int c = 0; c <= cols_; ++c) at(rows_, c) = 0.0;
    for (int c = 0; c < cols_; ++c) at(rows_, c) = -costs[c];
    for (int r = 0; r < rows_; ++r) {
      const double cb = costs[basis_[r]];
      if (cb == 0.0) continue;
      for (int c = 0; c <= cols_; ++c) at(rows_, c) += cb * at(r, c);
    }
  }

 private:
  int rows_;
  int cols_;
  std::vector<double> cells_;
  std::vector<int> basis_;
};

enum class PhaseResult { kOptimal, kUnbounded };

// Maximizes the costs installed in the tableau with Bland's rule. Columns
// with allowed[c] == false never enter; rows with active[r] == false never
// leave.
PhaseResult RunPhase(Tableau& t, const std::vector<bool>& allowed,
                     const std::vector<bool>& active) {
  for (int iter = 0; iter < kIterationLimit; ++iter) {
    int entering = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (allowed[c] && t.cost(c) < -kCostTolerance) {
        entering = c;
        break;
      }
    }
    if (entering < 0) return PhaseResult::kOptimal;

    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (active[r] && a > kPivotTolerance) {
        best_ratio = std::min(best_ratio, std::max(t.rhs(r), 0.0) / a);
      }
    }
    // Ties on the ratio go to the smallest basic variable index.
    int leaving = -1;
    const double slack = 1e-12 * std::max(1.0, best_ratio);
    for (int r = 0; r < t.rows(); ++r) {
      const double a = t.at(r, entering);
      if (!active[r] || a <= kPivotTolerance) continue;
      if (std::max(t.rhs(r), 0.0) / a > best_ratio + slack) continue;
      if (leaving < 0 || t.basis(r) < t.basis(leaving)) leaving = r;
    }
    if (leaving < 0) return PhaseResult::kUnbounded;
    t.Pivot(leaving, entering);
  }
  throw Error("simplex iteration limit reached");
}

}  // namespace

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution SolveLp(const LinearProgram& lp, double feasibility_tolerance) {
  const int n = lp.variables();
  const int m = lp.rows();
  if (static_cast<int>(lp.rhs.size()) != m) {
    throw DimensionError("LP has " + std::to_string(m) + " constraint rows but " +
                         std::to_string(lp.rhs.size()) + " right-hand sides");
  }
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(lp.constraints[i].size()) != n) {
      throw DimensionError("LP constraint row " + std::to_string(i) + " has " +
                           std::to_string(lp.constraints[i].size()) + " entries, expected " +
                           std::to_string(n));
    }
  }

  // Columns: structural [0, n), slacks [n, n + m), artificials after that.
  int artificials = 0;
  for (double h : lp.rhs) artificials += h < 0 ? 1 : 0;
  const int cols = n + m + artificials;
  Tableau t(m, cols);
  std::vector<bool> is_artificial(cols, false);
  int next_artificial = n + m;
  for (int i = 0; i < m; ++i) {
    const double sign = lp.rhs[i] < 0 ? -1.0 : 1.0;
    for (int j = 0; j < n; ++j) t.at(i, j) = sign * lp.constraints[i][j];
    t.at(i, n + i) = sign;
    t.rhs(i) = sign * lp.rhs[i];
    if (sign < 0) {
      t.at(i, next_artificial) = 1.0;
      is_artificial[next_artificial] = true;
      t.set_basis(i, next_artificial++);
    } else {
      t.set_basis(i, n + i);
    }
  }

  std::vector<bool> active(m, true);
  double scale = 1.0;
  for (double h : lp.rhs) scale = std::max(scale, std::abs(h));

  if (artificials > 0) {
    Vector phase1(cols, 0.0);
    for (int c = 0; c < cols; ++c) phase1[c] = is_artificial[c] ? -1.0 : 0.0;
    t.SetCosts(phase1);
    RunPhase(t, std::vector<bool>(cols, true), active);
    if (t.objective() < -feasibility_tolerance * scale) {
      return LpSolution{LpStatus::kInfeasible, 0.0, {}, {}};
    }
    for (int r = 0; r < m; ++r) {
      if (!is_artificial[t.basis(r)]) continue;
      int pivot_col = -1;
      for (int c = 0; c < cols && pivot_col < 0; ++c) {
        if (!is_artificial[c] && std::abs(t.at(r, c)) > 1e-9) pivot_col = c;
      }
      if (pivot_col < 0) {
        active[r] = false;  // redundant row
        continue;
      }
      t.rhs(r) = 0.0;
      t.Pivot(r, pivot_col);
    }
  }

  std::vector<bool> allowed(cols);
  for (int c = 0; c < cols; ++c) allowed[c] = !is_artificial[c];
  Vector costs(cols, 0.0);
  for (int j = 0; j < n; ++j) costs[j] = lp.objective[j];
  t.SetCosts(costs);
  if (RunPhase(t, allowed, active) == PhaseResult::kUnbounded) {
    return LpSolution{LpStatus::kUnbounded, 0.0, {}, {}};
  }

  LpSolution sol;
  sol.status = LpStatus::kOptimal;
  sol.point.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (active[r] && t.basis(r) < n) sol.point[t.basis(r)] = std::max(t.rhs(r), 0.0);
  }
  for (int i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (int j = 0; j < n; ++j) lhs += lp.constraints[i][j] * sol.point[j];
    if (lhs > lp.rhs[i] + feasibility_tolerance * std::max(1.0, std::abs(lp.rhs[i]))) {
      throw Error("simplex returned a point violating constraint " + std::to_string(i) +
                  " by " + std::to_string(lhs - lp.rhs[i]));
    }
  }
  sol.value = 0.0;
  for (int j = 0; j < n; ++j) sol.value += lp.objective[j] * sol.point[j];
  sol.duals.assign(m, 0.0);
  for (int i = 0; i < m; ++i) sol.duals[i] = t.cost(n + i);
  return sol;
}

std::string DumpLp(const LinearProgram& lp) {
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
  };
  auto vec = [&](const Vector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + num(v[i]);
    return out + "]";
  };
  std::ostringstream out;
  out << "{\n  \"objective\": " << vec(lp.objective) << ",\n  \"constraints\": [";
  for (int i = 0; i < lp.rows(); ++i) {
    out << (i ? ",\n    " : "\n    ") << vec(lp.constraints[i]);
  }
  out << "\n  ],\n  \"rhs\": " << vec(lp.rhs) << "\n}\n";
  return out.str();
}

}  // namespace lppgame
