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

#ifndef LPPGAME_LP_H_
#define LPPGAME_LP_H_

#include <string>

#include "lppgame/model.h"

namespace lppgame {

// maximize objective . x  subject to  constraints x <= rhs,  x >= 0.
struct LinearProgram {
  Vector objective;
  Matrix constraints;
  Vector rhs;

  int variables() const { return static_cast<int>(objective.size()); }
  int rows() const { return static_cast<int>(constraints.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double value = 0.0;
  Vector point;
  // One multiplier per constraint row; only meaningful when optimal.
  Vector duals;
};

// Two-phase dense tableau simplex with Bland's rule, so pivoting is
// deterministic and cannot cycle. An optimal point is checked against the
// constraints before it is returned. Throws DimensionError for inconsistent
// shapes.
LpSolution SolveLp(const LinearProgram& lp, double feasibility_tolerance = 1e-9);

// Debug dump in the same decimal format as instance documents.
std::string DumpLp(const LinearProgram& lp);

}  // namespace lppgame

#endif  // LPPGAME_LP_H_
