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

#include "lppgame/game.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "lppgame/errors.h"

namespace lppgame {
namespace {

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

double StrategyProfile::Sum() const {
  return std::accumulate(amounts.begin(), amounts.end(), 0.0);
}

std::string StrategyProfile::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < amounts.size(); ++i) {
    if (i > 0) out += ", ";
    out += Num(amounts[i]);
  }
  return out + ")";
}

StrategyProfile Deviation::ApplyTo(const StrategyProfile& profile) const {
  StrategyProfile out = profile;
  for (std::size_t i = 0; i < players.size(); ++i) out.amounts[players[i]] = amounts[i];
  return out;
}

std::string Deviation::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < players.size(); ++i) {
    if (i > 0) out += "; ";
    out += "player " + std::to_string(players[i] + 1) + " -> " + Num(amounts[i]) +
           " (payoff " + Num(payoffs_before[i]) + " -> " + Num(payoffs_after[i]) + ")";
  }
  return out;
}

std::string ToString(NashFamily family) {
  switch (family) {
    case NashFamily::kNone:
      return "none";
    case NashFamily::kDemandProfile:
      return "demand-profile";
    case NashFamily::kSumEqualsPool:
      return "sum-equals-r";
    case NashFamily::kComplementEqualityPoint:
      return "complement-equality-point";
    case NashFamily::kComplementsExceedPool:
      return "all-complements-exceed-r";
    case NashFamily::kComplementBoundary:
      return "complement-boundary";
  }
  return "unknown";
}

CoalitionGame::CoalitionGame(LppInstance instance, Partition partition,
                             Tolerances tolerances)
    : instance_(std::move(instance)),
      partition_(std::move(partition)),
      tolerances_(tolerances) {
  if (partition_.producers() != instance_.producers) {
    throw DomainError("partition covers " + std::to_string(partition_.producers()) +
                      " producers but the instance has " +
                      std::to_string(instance_.producers));
  }
  demands_ = ComputeDemandProfile(instance_, partition_, tolerances_);
}

CoalitionGame::CoalitionGame(LppInstance instance, Partition partition,
                             DemandProfile demands, Tolerances tolerances)
    : instance_(std::move(instance)),
      partition_(std::move(partition)),
      demands_(std::move(demands)),
      tolerances_(tolerances) {
  if (partition_.producers() != instance_.producers) {
    throw DomainError("partition does not match the instance");
  }
  if (demands_.size() != partition_.size()) {
    throw DimensionError("demand profile does not match the partition");
  }
}

bool CoalitionGame::IsScarce() const {
  return demands_.Total() > pool() + PoolTolerance();
}

double CoalitionGame::Value(int player, double amount) const {
  return CoalitionValue(instance_, partition_.block(player), std::max(amount, 0.0));
}

StrategyProfile CoalitionGame::DemandStrategy() const {
  StrategyProfile z;
  for (int i = 0; i < players(); ++i) z.amounts.push_back(demands_.amount(i));
  return z;
}

void CoalitionGame::CheckProfile(const StrategyProfile& z) const {
  if (z.size() != players()) {
    throw DomainError("profile has " + std::to_string(z.size()) + " entries for " +
                      std::to_string(players()) + " players");
  }
  for (int i = 0; i < players(); ++i) {
    if (!std::isfinite(z[i]) || z[i] < 0 ||
        z[i] > demands_.amount(i) + tolerances_.demand) {
      throw DomainError("request " + Num(z[i]) + " of player " + std::to_string(i + 1) +
                        " is outside [0, " + Num(demands_.amount(i)) + "]");
    }
  }
}

std::vector<double> CoalitionGame::Payoffs(const StrategyProfile& z) const {
  CheckProfile(z);
  std::vector<double> payoffs(players(), 0.0);
  if (z.Sum() > pool() + PoolTolerance()) return payoffs;
  for (int i = 0; i < players(); ++i) payoffs[i] = Value(i, z[i]);
  return payoffs;
}

BestResponse CoalitionGame::BestReply(int player, const StrategyProfile& z) const {
  if (player < 0 || player >= players()) {
    throw DomainError("player index " + std::to_string(player + 1) + " out of range");
  }
  const double others = z.Sum() - z[player];
  const double cap = pool() - others;
  if (cap <= 0) return BestResponse{0.0, 0.0};
  const double amount = std::min(demands_.amount(player), cap);
  return BestResponse{amount, Value(player, amount)};
}

Deviation CoalitionGame::MakeDeviation(const StrategyProfile& z, std::vector<int> who,
                                       std::vector<double> amounts) const {
  Deviation d;
  d.players = std::move(who);
  d.amounts = std::move(amounts);
  const std::vector<double> before = Payoffs(z);
  const std::vector<double> after = Payoffs(d.ApplyTo(z));
  for (int p : d.players) {
    d.payoffs_before.push_back(before[p]);
    d.payoffs_after.push_back(after[p]);
  }
  return d;
}

bool CoalitionGame::Improves(const StrategyProfile& z, const Deviation& deviation) const {
  const std::vector<double> before = Payoffs(z);
  const std::vector<double> after = Payoffs(deviation.ApplyTo(z));
  for (int p : deviation.players) {
    if (!(after[p] > before[p])) return false;
  }
  return !deviation.players.empty();
}

EquilibriumCheck CoalitionGame::CheckNash(const StrategyProfile& z) const {
  const std::vector<double> payoffs = Payoffs(z);
  for (int j = 0; j < players(); ++j) {
    const BestResponse br = BestReply(j, z);
    if (br.payoff > payoffs[j] + tolerances_.value) {
      return EquilibriumCheck{false, MakeDeviation(z, {j}, {br.amount})};
    }
  }
  return EquilibriumCheck{true, std::nullopt};
}

bool CoalitionGame::MatchesStrictFamily(const StrategyProfile& z) const {
  if (std::abs(z.Sum() - pool()) > PoolTolerance()) return false;
  return std::all_of(z.amounts.begin(), z.amounts.end(),
                     [&](double x) { return x > tolerances_.demand; });
}

std::optional<Deviation> CoalitionGame::NonStrictWitness(const StrategyProfile& z) const {
  const std::vector<double> payoffs = Payoffs(z);
  const double total = z.Sum();
  for (int j = 0; j < players(); ++j) {
    const double d = demands_.amount(j);
    const double step = std::max(tolerances_.demand, d / 1000.0);
    for (double c : {0.0, d, std::max(0.0, z[j] - step), std::min(d, z[j] + step)}) {
      if (c == z[j]) continue;
      const double sum = total - z[j] + c;
      const double payoff = sum > pool() + PoolTolerance() ? 0.0 : Value(j, c);
      if (payoff >= payoffs[j] - tolerances_.value) {
        return MakeDeviation(z, {j}, {c});
      }
    }
  }
  return std::nullopt;
}

EquilibriumCheck CoalitionGame::CheckStrictNash(const StrategyProfile& z) const {
  EquilibriumCheck nash = CheckNash(z);
  if (!nash.holds) return nash;

  bool strict = false;
  if (IsScarce()) {
    strict = MatchesStrictFamily(z);
  } else {
    // Outside the scarce case the only candidate is the demand profile; the
    // boxes forbid upward moves, so it is strict iff a small step down loses.
    const std::vector<double> payoffs = Payoffs(z);
    strict = true;
    for (int i = 0; i < players() && strict; ++i) {
      const double d = demands_.amount(i);
      if (std::abs(z[i] - d) > tolerances_.demand) {
        strict = false;
        break;
      }
      if (d <= 0) continue;
      const double step = std::min(d, std::max(tolerances_.demand, d / 1000.0));
      if (!(Value(i, d - step) < payoffs[i])) strict = false;
    }
  }
  if (strict) return EquilibriumCheck{true, std::nullopt};
  return EquilibriumCheck{false, NonStrictWitness(z)};
}

EquilibriumCheck CoalitionGame::CheckStrongNash(const StrategyProfile& z) const {
  const int k = players();
  if (k > kMaxStrongPlayers) {
    throw CapacityError("strong Nash test is capped at " +
                        std::to_string(kMaxStrongPlayers) + " players");
  }
  EquilibriumCheck nash = CheckNash(z);
  if (!nash.holds) return nash;

  // t_i: least request giving player i strictly more than now. Members of a
  // deviating group need open intervals above their thresholds, hence the
  // slack in the capacity test.
  const std::vector<double> payoffs = Payoffs(z);
  std::vector<std::optional<double>> threshold(k);
  for (int i = 0; i < k; ++i) {
    if (payoffs[i] < demands_.best_value(i) - tolerances_.value) {
      threshold[i] = ValueThreshold(instance_, partition_.block(i), demands_.blocks[i],
                                    payoffs[i], tolerances_);
    }
  }
  const double slack = PoolTolerance() + k * tolerances_.demand;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
    double outside = 0.0, needed = 0.0;
    bool possible = true;
    std::vector<int> members;
    for (int i = 0; i < k && possible; ++i) {
      if (mask & (1u << i)) {
        if (!threshold[i]) possible = false;
        else {
          needed += *threshold[i];
          members.push_back(i);
        }
      } else {
        outside += z[i];
      }
    }
    if (!possible) continue;
    const double free = pool() - outside;
    if (!(needed < free - slack)) continue;

    const double share = (free - needed) / members.size();
    std::vector<double> amounts;
    for (int i : members) amounts.push_back(std::min(demands_.amount(i), *threshold[i] + share));
    Deviation witness = MakeDeviation(z, members, amounts);
    if (!Improves(z, witness)) {
      throw ConsistencyError("joint deviation " + witness.ToString() + " from " +
                             z.ToString() + " does not improve every member");
    }
    return EquilibriumCheck{false, std::move(witness)};
  }
  return EquilibriumCheck{true, std::nullopt};
}

NashFamily CoalitionGame::MatchFamily(const StrategyProfile& z) const {
  CheckProfile(z);
  const int k = players();
  const double r = pool();
  const double eps_r = PoolTolerance();
  if (!IsScarce()) {
    for (int i = 0; i < k; ++i) {
      if (std::abs(z[i] - demands_.amount(i)) > tolerances_.demand) return NashFamily::kNone;
    }
    return NashFamily::kDemandProfile;
  }
  const double total = z.Sum();
  if (std::abs(total - r) <= eps_r) return NashFamily::kSumEqualsPool;
  if (k >= 2) {
    const double point = r / (k - 1);
    bool on_point = true;
    for (int i = 0; i < k && on_point; ++i) {
      on_point = point <= demands_.amount(i) + tolerances_.demand &&
                 std::abs(z[i] - point) <= eps_r;
    }
    if (on_point) return NashFamily::kComplementEqualityPoint;
  }
  bool all_exceed = true, all_reach = true;
  for (int j = 0; j < k; ++j) {
    const double complement = total - z[j];
    all_exceed = all_exceed && complement > r + eps_r;
    all_reach = all_reach && complement >= r - eps_r;
  }
  if (all_exceed) return NashFamily::kComplementsExceedPool;
  if (all_reach) return NashFamily::kComplementBoundary;
  return NashFamily::kNone;
}

double CoalitionGame::MinimumSlope() const {
  double slope = std::numeric_limits<double>::infinity();
  for (int i = 0; i < players(); ++i) {
    const double d = demands_.amount(i);
    if (d <= 0) return 0.0;
    const double h = std::min(d, std::max(1e3 * tolerances_.demand, 1e-6 * d));
    slope = std::min(slope, (Value(i, d) - Value(i, d - h)) / h);
  }
  return slope;
}

bool CoalitionGame::NearCharacterizationBoundary(const StrategyProfile& z) const {
  const double slope = MinimumSlope();
  if (!(slope > 0)) return true;
  const double band = PoolTolerance() + tolerances_.demand + tolerances_.value / slope;
  const double r = pool();
  if (std::abs(demands_.Total() - r) <= players() * band) return true;
  if (!IsScarce()) {
    for (int i = 0; i < players(); ++i) {
      if (std::abs(z[i] - demands_.amount(i)) <= band) return true;
    }
    return false;
  }
  const double total = z.Sum();
  if (std::abs(total - r) <= band) return true;
  for (int j = 0; j < players(); ++j) {
    if (std::abs(total - z[j] - r) <= band) return true;
  }
  return false;
}

EquilibriumReport CoalitionGame::Classify(const StrategyProfile& z) const {
  EquilibriumReport report;
  report.scarce = IsScarce();
  report.payoffs = Payoffs(z);

  EquilibriumCheck nash = CheckNash(z);
  report.is_nash = nash.holds;
  report.nash_witness = std::move(nash.witness);
  EquilibriumCheck strict = CheckStrictNash(z);
  report.is_strict = strict.holds;
  report.strict_witness = std::move(strict.witness);
  EquilibriumCheck strong = CheckStrongNash(z);
  report.is_strong = strong.holds;
  report.strong_witness = std::move(strong.witness);
  report.family = MatchFamily(z);

  const bool characterized = report.family != NashFamily::kNone;
  if (characterized != report.is_nash) {
    if (!NearCharacterizationBoundary(z)) {
      throw ConsistencyError("profile " + z.ToString() + ": best-response test says " +
                             (report.is_nash ? "Nash" : "not Nash") +
                             " but the characterization says family " +
                             ToString(report.family));
    }
    report.tolerance_ambiguous = true;
  }
  if ((report.is_strict && !report.is_strong) || (report.is_strong && !report.is_nash)) {
    throw ConsistencyError("profile " + z.ToString() +
                           " breaks strict => strong => Nash containment");
  }
  return report;
}

EquilibriumSetDescription CoalitionGame::Describe() const {
  EquilibriumSetDescription desc;
  desc.players = players();
  desc.pool = pool();
  desc.pool_tolerance = PoolTolerance();
  desc.total_demand = demands_.Total();
  for (int i = 0; i < players(); ++i) desc.caps.push_back(demands_.amount(i));
  desc.scarce = IsScarce();
  if (!desc.scarce) {
    desc.unique_equilibrium = DemandStrategy();
    return desc;
  }
  const int k = players();
  const double r = pool();
  const double largest = *std::max_element(desc.caps.begin(), desc.caps.end());
  // The best value of sum z - max z over the box is d(P) - max d.
  const double complement_room = desc.total_demand - largest - r;
  desc.sum_slice_nonempty = true;
  desc.strict_family_nonempty = r > tolerances_.demand;
  desc.exceed_box_nonempty = k >= 2 && complement_room > desc.pool_tolerance;
  desc.boundary_nonempty = k >= 2 && complement_room >= -desc.pool_tolerance;
  if (k >= 2) {
    desc.equality_value = r / (k - 1);
    desc.equality_point_feasible = std::all_of(
        desc.caps.begin(), desc.caps.end(),
        [&](double d) { return *desc.equality_value <= d + tolerances_.demand; });
  }
  return desc;
}

}  // namespace lppgame
