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

#include "lppgame/oracle.h"

#include <algorithm>
#include <cmath>
#include <thread>
#include <unordered_map>

#include "lppgame/errors.h"
#include "lppgame/value_function.h"

namespace lppgame {
namespace {

double Critical(const CoalitionGame& game, int player, double others) {
  return std::clamp(game.pool() - others, 0.0, game.demands().amount(player));
}

std::vector<std::vector<double>> GridValues(const CoalitionGame& game,
                                            const std::vector<std::vector<double>>& grids) {
  std::vector<std::vector<double>> values(grids.size());
  for (std::size_t i = 0; i < grids.size(); ++i) {
    for (double z : grids[i]) values[i].push_back(game.Value(static_cast<int>(i), z));
  }
  return values;
}

}  // namespace

std::vector<double> PlayerGrid(const CoalitionGame& game, int player, double step) {
  if (!(step > 0) || !std::isfinite(step)) throw DomainError("grid step must be positive");
  const double cap = game.demands().amount(player);
  std::vector<double> grid;
  for (long i = 0;; ++i) {
    const double z = static_cast<double>(i) * step;
    if (z >= cap - 1e-12 * std::max(1.0, cap)) break;
    grid.push_back(z);
  }
  grid.push_back(cap);
  return grid;
}

bool GridNashCheck(const CoalitionGame& game, const StrategyProfile& z, double step) {
  const std::vector<double> payoffs = game.Payoffs(z);
  const double total = z.Sum();
  const double limit = game.pool() + game.PoolTolerance();
  const double eps = game.tolerances().value;
  for (int i = 0; i < game.players(); ++i) {
    const double others = total - z[i];
    std::vector<double> candidates = PlayerGrid(game, i, step);
    candidates.push_back(Critical(game, i, others));
    for (double c : candidates) {
      const double deviation = others + c > limit ? 0.0 : game.Value(i, c);
      if (deviation > payoffs[i] + eps) return false;
    }
  }
  return true;
}

bool GridStrongNashCheck(const CoalitionGame& game, const StrategyProfile& z, double step) {
  const int k = game.players();
  if (k > kMaxGridStrongPlayers) {
    throw CapacityError("grid strong Nash check is limited to " +
                        std::to_string(kMaxGridStrongPlayers) + " players");
  }
  const std::vector<double> payoffs = game.Payoffs(z);
  const double total = z.Sum();
  std::vector<std::vector<double>> grids(k);
  for (int i = 0; i < k; ++i) {
    grids[i] = PlayerGrid(game, i, step);
    grids[i].push_back(Critical(game, i, total - z[i]));
    if (static_cast<int>(grids[i].size()) > kMaxGridStrongPoints) {
      throw CapacityError("grid of player " + std::to_string(i + 1) + " has " +
                          std::to_string(grids[i].size()) + " points (limit " +
                          std::to_string(kMaxGridStrongPoints) + ")");
    }
  }
  const std::vector<std::vector<double>> values = GridValues(game, grids);
  const double limit = game.pool() + game.PoolTolerance();
  const double eps = game.tolerances().value;

  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> members;
    double outside = 0.0;
    for (int i = 0; i < k; ++i) {
      if (mask & (1 << i)) members.push_back(i);
      else outside += z[i];
    }
    std::vector<std::size_t> index(members.size(), 0);
    while (true) {
      double sum = outside;
      for (std::size_t m = 0; m < members.size(); ++m) sum += grids[members[m]][index[m]];
      if (sum <= limit) {
        bool all_gain = true;
        for (std::size_t m = 0; m < members.size() && all_gain; ++m) {
          all_gain = values[members[m]][index[m]] > payoffs[members[m]] + eps;
        }
        if (all_gain) return false;
      }
      std::size_t m = 0;
      while (m < members.size() && ++index[m] == grids[members[m]].size()) index[m++] = 0;
      if (m == members.size()) break;
    }
  }
  return true;
}

std::vector<StrategyProfile> GridEquilibriumScan(const CoalitionGame& game, double step,
                                                 int jobs) {
  const int k = game.players();
  std::vector<std::vector<double>> grids(k);
  double profiles = 1.0;
  for (int i = 0; i < k; ++i) {
    grids[i] = PlayerGrid(game, i, step);
    profiles *= static_cast<double>(grids[i].size());
  }
  if (profiles > kMaxScanProfiles) {
    throw CapacityError("grid scan needs " + std::to_string(static_cast<long long>(profiles)) +
                        " profiles, budget is " +
                        std::to_string(static_cast<long long>(kMaxScanProfiles)));
  }
  const std::vector<std::vector<double>> values = GridValues(game, grids);
  const double limit = game.pool() + game.PoolTolerance();
  const double eps = game.tolerances().value;
  const std::size_t first_size = grids[0].size();
  jobs = std::clamp(jobs, 1, static_cast<int>(first_size));

  auto scan_slice = [&](std::size_t begin, std::size_t end,
                        std::vector<StrategyProfile>& out) {
    std::vector<std::unordered_map<double, double>> critical_values(k);
    auto critical_value = [&](int i, double c) {
      auto [it, inserted] = critical_values[i].try_emplace(c, 0.0);
      if (inserted) it->second = game.Value(i, c);
      return it->second;
    };
    std::vector<std::size_t> index(k, 0);
    index[0] = begin;
    while (index[0] < end) {
      double total = 0.0;
      for (int i = 0; i < k; ++i) total += grids[i][index[i]];
      const bool over = total > limit;
      bool equilibrium = true;
      for (int i = 0; i < k && equilibrium; ++i) {
        const double current = over ? 0.0 : values[i][index[i]];
        const double others = total - grids[i][index[i]];
        for (std::size_t g = 0; g < grids[i].size() && equilibrium; ++g) {
          if (others + grids[i][g] <= limit && values[i][g] > current + eps) {
            equilibrium = false;
          }
        }
        const double c = Critical(game, i, others);
        if (equilibrium && others + c <= limit && critical_value(i, c) > current + eps) {
          equilibrium = false;
        }
      }
      if (equilibrium) {
        StrategyProfile z;
        for (int i = 0; i < k; ++i) z.amounts.push_back(grids[i][index[i]]);
        out.push_back(std::move(z));
      }
      int i = k - 1;
      while (i > 0 && ++index[i] == grids[i].size()) index[i--] = 0;
      if (i == 0) ++index[0];
    }
  };

  std::vector<std::vector<StrategyProfile>> found(jobs);
  if (jobs == 1) {
    scan_slice(0, first_size, found[0]);
  } else {
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      const std::size_t begin = first_size * w / jobs;
      const std::size_t end = first_size * (w + 1) / jobs;
      workers.emplace_back(scan_slice, begin, end, std::ref(found[w]));
    }
    for (auto& t : workers) t.join();
  }
  std::vector<StrategyProfile> survivors;
  for (auto& part : found) {
    for (auto& z : part) survivors.push_back(std::move(z));
  }
  std::sort(survivors.begin(), survivors.end());
  return survivors;
}

std::optional<SuperadditivityCounterexample> SuperadditivitySearch(
    const LppInstance& inst, const Tolerances& tol) {
  const int n = inst.producers;
  if (n > kMaxSuperadditivityProducers) {
    throw CapacityError("superadditivity search is limited to n <= " +
                        std::to_string(kMaxSuperadditivityProducers));
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<double> demand(full + 1, 0.0);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    demand[mask] = OptimalDemand(inst, Coalition::FromMask(mask), tol).amount;
  }
  for (std::uint32_t both = 1; both <= full; ++both) {
    const std::uint32_t lowest = both & (~both + 1);
    // S holds the lowest member of the union so each pair is seen once.
    for (std::uint32_t s = (both - 1) & both; s != 0; s = (s - 1) & both) {
      if (!(s & lowest)) continue;
      const std::uint32_t t = both ^ s;
      if (demand[both] < demand[s] + demand[t] - tol.demand) {
        return SuperadditivityCounterexample{Coalition::FromMask(s), Coalition::FromMask(t),
                                             demand[s], demand[t], demand[both]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace lppgame
