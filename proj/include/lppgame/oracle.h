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

#ifndef LPPGAME_ORACLE_H_
#define LPPGAME_ORACLE_H_

// Verification routines that do not rely on the equilibrium characterization
// or on the floating-point simplex: exact vertex enumeration for tiny LPs and
// grid scans that evaluate payoffs straight from their definition.

#include <optional>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "lppgame/game.h"
#include "lppgame/model.h"
#include "lppgame/tolerances.h"

namespace lppgame {

using Rational = boost::multiprecision::mpq_rational;

inline constexpr int kMaxOracleProducts = 3;  // g
inline constexpr int kMaxOracleRows = 3;      // q + 1

// value(S; z) by enumerating every basic solution of the coalition LP in
// exact rational arithmetic. Doubles in the instance are converted exactly.
// Throws CapacityError when g > 3 or q + 1 > 3.
Rational ExactCoalitionValue(const LppInstance& instance, const Coalition& coalition,
                             const Rational& pool_amount);
double VertexLpValue(const LppInstance& instance, const Coalition& coalition,
                     double pool_amount);

struct ExactDemand {
  Rational amount;
  Rational best_value;
};

// d_S and v*_S with no tolerances: the maximum of p.x - c_R z over vertices,
// then the least z among vertices of the optimal face.
ExactDemand ExactOptimalDemand(const LppInstance& instance, const Coalition& coalition);

// Per-player deviation grid {0, step, 2 step, ...} inside [0, d_i], plus d_i.
std::vector<double> PlayerGrid(const CoalitionGame& game, int player, double step);

// Definition-level Nash test restricted to grid deviations plus the critical
// request clamp(r - sum of others, 0, d_i).
bool GridNashCheck(const CoalitionGame& game, const StrategyProfile& profile, double step);

inline constexpr int kMaxGridStrongPlayers = 4;
inline constexpr int kMaxGridStrongPoints = 50;

// Joint grid deviations by every nonempty group of players; true iff none
// makes all members better off by more than tolerance.value. Throws
// CapacityError beyond 4 players or 50 grid points per player.
bool GridStrongNashCheck(const CoalitionGame& game, const StrategyProfile& profile,
                         double step);

inline constexpr double kMaxScanProfiles = 1e7;

// Every grid profile that passes GridNashCheck, sorted lexicographically.
// Throws CapacityError when the grid has more than 1e7 profiles. `jobs`
// splits the scan across threads without changing the result.
std::vector<StrategyProfile> GridEquilibriumScan(const CoalitionGame& game, double step,
                                                 int jobs = 1);

inline constexpr int kMaxSuperadditivityProducers = 6;

struct SuperadditivityCounterexample {
  Coalition first;
  Coalition second;
  double first_demand = 0.0;
  double second_demand = 0.0;
  double union_demand = 0.0;
};

// First disjoint pair (S, T) with d_{S u T} < d_S + d_T - tolerance.demand,
// scanning unions in increasing bitmask order.
std::optional<SuperadditivityCounterexample> SuperadditivitySearch(
    const LppInstance& instance, const Tolerances& tolerances = {});

}  // namespace lppgame

#endif  // LPPGAME_ORACLE_H_
