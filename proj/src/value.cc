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
#include <numeric>

#include "lppgame/errors.h"
#include "lppgame/value_function.h"

namespace lppgame {
namespace {

constexpr int kPolishSteps = 3;

// Rows: ordinary resources, then pool row a_pool.x - z <= 0. Variables are
// the products followed by z.
LinearProgram JointLp(const LppInstance& inst, const Coalition& coalition) {
  const int q = inst.resources;
  const Vector bundle = ResourcesOf(inst, coalition);
  LinearProgram lp;
  lp.objective = inst.prices;
  lp.objective.push_back(-inst.pool_price);
  for (int t = 0; t < q; ++t) {
    Vector row = inst.production[t];
    row.push_back(0.0);
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(bundle[t]);
  }
  Vector pool_row = inst.production[q];
  pool_row.push_back(-1.0);
  lp.constraints.push_back(std::move(pool_row));
  lp.rhs.push_back(0.0);
  return lp;
}

}  // namespace

LinearProgram CoalitionLp(const LppInstance& inst, const Coalition& coalition,
                          double pool_amount) {
  if (!(pool_amount >= 0)) throw DomainError("pool amount must be nonnegative");
  LinearProgram lp;
  lp.objective = inst.prices;
  lp.constraints = inst.production;
  lp.rhs = ResourcesOf(inst, coalition);
  lp.rhs.push_back(pool_amount);
  return lp;
}

double CoalitionValue(const LppInstance& inst, const Coalition& coalition,
                      double pool_amount) {
  const LpSolution sol = SolveLp(CoalitionLp(inst, coalition, pool_amount));
  if (sol.status != LpStatus::kOptimal) {
    throw Error("coalition LP is " + ToString(sol.status) +
                "; the instance violates the model assumptions");
  }
  return sol.value - inst.pool_price * pool_amount;
}

Demand OptimalDemand(const LppInstance& inst, const Coalition& coalition,
                     const Tolerances& tol) {
  LinearProgram lp = JointLp(inst, coalition);
  const LpSolution stage1 = SolveLp(lp, tol.feasibility);
  if (stage1.status != LpStatus::kOptimal) {
    throw Error("joint demand LP is " + ToString(stage1.status) +
                "; the instance violates the model assumptions");
  }
  const double best = stage1.value;
  if (best <= tol.value) return Demand{0.0, 0.0};

  const int z_index = inst.products;
  Vector profit_row(lp.variables());
  for (int j = 0; j < lp.variables(); ++j) profit_row[j] = -lp.objective[j];
  lp.constraints.push_back(std::move(profit_row));
  lp.rhs.push_back(-(best - tol.value));
  std::fill(lp.objective.begin(), lp.objective.end(), 0.0);
  lp.objective[z_index] = -1.0;
  const LpSolution stage2 = SolveLp(lp, tol.feasibility);
  if (stage2.status != LpStatus::kOptimal) {
    throw Error("demand minimization LP is " + ToString(stage2.status));
  }

  double z = std::max(stage2.point[z_index], 0.0);
  // The stage-two plan can sit short of the true least maximizer by up to
  // tolerance.value / slope. value(S; .) is linear on the last piece before
  // d_S, so a secant step along it lands on d_S; a chord that crosses a
  // breakpoint has a steeper slope and never overshoots.
  for (int step = 0; step < kPolishSteps; ++step) {
    const double current = CoalitionValue(inst, coalition, z);
    const double gap = best - current;
    if (gap <= 1e-13 * std::max(1.0, std::abs(best))) break;
    const double h = std::min(z, std::max(1e-7, 1e-5 * z));
    if (h <= 0) break;
    const double slope = (current - CoalitionValue(inst, coalition, z - h)) / h;
    if (!(slope > 0)) break;
    const double next = z + gap / slope;
    if (CoalitionValue(inst, coalition, next) > best + tol.value) break;
    z = next;
  }
  return Demand{z, best};
}

double DemandProfile::Total() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0.0,
                         [](double acc, const Demand& d) { return acc + d.amount; });
}

DemandProfile ComputeDemandProfile(const LppInstance& inst, const Partition& partition,
                                   const Tolerances& tol) {
  DemandProfile profile;
  profile.blocks.reserve(partition.size());
  for (const Coalition& s : partition.blocks()) {
    profile.blocks.push_back(OptimalDemand(inst, s, tol));
  }
  return profile;
}

std::optional<double> ValueThreshold(const LppInstance& inst, const Coalition& coalition,
                                     const Demand& demand, double target,
                                     const Tolerances& tol) {
  if (target >= demand.best_value) return std::nullopt;
  // value(S; .) is positive on (0, d_S] whenever v*_S > 0.
  if (target <= 0) return 0.0;
  if (CoalitionValue(inst, coalition, demand.amount) <= target) return std::nullopt;
  double lo = 0.0;  // value(lo) <= target
  double hi = demand.amount;  // value(hi) > target
  while (hi - lo > tol.demand) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (CoalitionValue(inst, coalition, mid) > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace lppgame
