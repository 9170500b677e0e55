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

#ifndef LPPGAME_VALUE_FUNCTION_H_
#define LPPGAME_VALUE_FUNCTION_H_

#include <optional>
#include <vector>

#include "lppgame/lp.h"
#include "lppgame/model.h"
#include "lppgame/tolerances.h"

namespace lppgame {

// The production LP of a coalition holding `pool_amount` units of the pool
// resource: max p.x s.t. A x <= (b^S, pool_amount), x >= 0.
LinearProgram CoalitionLp(const LppInstance& instance, const Coalition& coalition,
                          double pool_amount);

// value(S; z) = max p.x - c_R z over the coalition LP. Always feasible (x = 0).
// Throws DomainError for negative z.
double CoalitionValue(const LppInstance& instance, const Coalition& coalition,
                      double pool_amount);

struct Demand {
  double amount = 0.0;      // d_S, least maximizer of value(S; .)
  double best_value = 0.0;  // v*_S
};

// Two stages: maximize p.x - c_R z jointly over (x, z), then minimize z among
// plans within tolerance.value of that optimum. The stage-two result is
// finished with secant steps along the last linear piece of value(S; .),
// which removes the tolerance-induced shortfall. Coalitions whose optimum
// does not exceed tolerance.value get (0, 0).
Demand OptimalDemand(const LppInstance& instance, const Coalition& coalition,
                     const Tolerances& tolerances = {});

struct DemandProfile {
  std::vector<Demand> blocks;

  double amount(int player) const { return blocks[player].amount; }
  double best_value(int player) const { return blocks[player].best_value; }
  int size() const { return static_cast<int>(blocks.size()); }
  // d(P)
  double Total() const;
};

DemandProfile ComputeDemandProfile(const LppInstance& instance, const Partition& partition,
                                   const Tolerances& tolerances = {});

// inf { z : value(S; z) > target } by bisection on [0, d_S] down to width
// tolerances.demand. Relies on value(S; .) being concave with value(S; 0) = 0,
// hence strictly increasing on [0, d_S]. Returns nullopt when no amount
// reaches strictly above `target` (target >= v*_S).
std::optional<double> ValueThreshold(const LppInstance& instance, const Coalition& coalition,
                                     const Demand& demand, double target,
                                     const Tolerances& tolerances = {});

}  // namespace lppgame

#endif  // LPPGAME_VALUE_FUNCTION_H_
