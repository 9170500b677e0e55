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

#ifndef LPPGAME_TOLERANCES_H_
#define LPPGAME_TOLERANCES_H_

#include <algorithm>

namespace lppgame {

// Numerical tolerances shared by the LP engine, the game and the oracle.
struct Tolerances {
  // Constraint slack accepted when certifying an LP point.
  double feasibility = 1e-9;
  // Objective and payoff comparisons.
  double value = 1e-7;
  // Resolution of demands, thresholds and "z_i > 0" tests.
  double demand = 1e-9;
  // Relative tolerance for "sum of requests equals the pool".
  double pool_relative = 1e-7;

  double Pool(double pool_size) const {
    return pool_relative * std::max(1.0, pool_size);
  }

  // Scales the game-level tolerances; feasibility is a solver concern and
  // stays fixed.
  Tolerances Scaled(double factor) const {
    Tolerances t = *this;
    t.value *= factor;
    t.demand *= factor;
    t.pool_relative *= factor;
    return t;
  }
};

}  // namespace lppgame

#endif  // LPPGAME_TOLERANCES_H_
