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

#ifndef LPPGAME_GAME_H_
#define LPPGAME_GAME_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lppgame/model.h"
#include "lppgame/tolerances.h"
#include "lppgame/value_function.h"

namespace lppgame {

// One pool request per block of the partition, in block order.
struct StrategyProfile {
  std::vector<double> amounts;

  int size() const { return static_cast<int>(amounts.size()); }
  double operator[](int i) const { return amounts[i]; }
  double Sum() const;
  std::string ToString() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile&, const StrategyProfile&) = default;
};

// A concrete deviation: the listed players switch to the listed amounts while
// everyone else keeps their request.
struct Deviation {
  std::vector<int> players;
  std::vector<double> amounts;
  std::vector<double> payoffs_before;
  std::vector<double> payoffs_after;

  StrategyProfile ApplyTo(const StrategyProfile& profile) const;
  std::string ToString() const;
};

struct BestResponse {
  double amount = 0.0;
  double payoff = 0.0;
};

struct EquilibriumCheck {
  bool holds = false;
  // Present whenever `holds` is false.
  std::optional<Deviation> witness;
};

// Which piece of the equilibrium characterization a profile belongs to.
enum class NashFamily {
  kNone,
  kDemandProfile,            // pool suffices: z = (d_1, ..., d_k)
  kSumEqualsPool,            // sum z_i = r
  kComplementEqualityPoint,  // z_i = r / (k - 1) for every i
  kComplementsExceedPool,    // sum_{i != j} z_i > r for every j
  kComplementBoundary,       // sum_{i != j} z_i >= r for every j, some equality
};

std::string ToString(NashFamily family);

struct EquilibriumReport {
  bool scarce = false;
  bool is_nash = false;
  bool is_strict = false;
  bool is_strong = false;
  NashFamily family = NashFamily::kNone;
  std::vector<double> payoffs;
  std::optional<Deviation> nash_witness;
  std::optional<Deviation> strict_witness;
  std::optional<Deviation> strong_witness;
  // The best-response test and the characterization disagreed, but the profile
  // sits within tolerance of a family boundary where neither answer is
  // meaningful at the configured tolerances. The best-response answer is kept.
  bool tolerance_ambiguous = false;
};

struct EquilibriumSetDescription {
  bool scarce = false;
  int players = 0;
  double pool = 0.0;
  double pool_tolerance = 0.0;
  double total_demand = 0.0;
  std::vector<double> caps;  // d_{S_i}

  // Sufficient pool: the demand profile is the only equilibrium.
  std::optional<StrategyProfile> unique_equilibrium;

  // Scarce pool.
  bool sum_slice_nonempty = false;
  bool exceed_box_nonempty = false;
  bool equality_point_feasible = false;
  std::optional<double> equality_value;  // r / (k - 1), k >= 2
  bool boundary_nonempty = false;
  bool strict_family_nonempty = false;

  std::string ToString() const;
};

// The competitive pool-purchase game played by the blocks of a partition.
// Strategy sets are the boxes [0, d_{S_i}]. If the requests exceed the pool
// every player gets nothing; otherwise player i earns value(S_i; z_i).
//
// Immutable after construction; all members are safe to call concurrently.
class CoalitionGame {
 public:
  static constexpr int kMaxStrongPlayers = 12;

  CoalitionGame(LppInstance instance, Partition partition, Tolerances tolerances = {});
  CoalitionGame(LppInstance instance, Partition partition, DemandProfile demands,
                Tolerances tolerances);

  const LppInstance& instance() const { return instance_; }
  const Partition& partition() const { return partition_; }
  const DemandProfile& demands() const { return demands_; }
  const Tolerances& tolerances() const { return tolerances_; }
  int players() const { return partition_.size(); }
  double pool() const { return instance_.pool; }
  double PoolTolerance() const { return tolerances_.Pool(instance_.pool); }
  // d(P) > r beyond tolerance.
  bool IsScarce() const;

  double Value(int player, double amount) const;
  StrategyProfile DemandStrategy() const;

  // Throws DomainError unless every request lies in [0, d_i + tolerance].
  void CheckProfile(const StrategyProfile& profile) const;

  std::vector<double> Payoffs(const StrategyProfile& profile) const;

  // Best reply of `player` to the other entries of `profile` (its own entry is
  // ignored). value(S_j; .) increases strictly up to d_j, so the reply is
  // min(d_j, r - sum of others), or 0 when the others already fill the pool.
  BestResponse BestReply(int player, const StrategyProfile& profile) const;

  EquilibriumCheck CheckNash(const StrategyProfile& profile) const;
  EquilibriumCheck CheckStrictNash(const StrategyProfile& profile) const;
  // Decides whether some group of players has a joint deviation making every
  // member strictly better off. Throws CapacityError above kMaxStrongPlayers.
  EquilibriumCheck CheckStrongNash(const StrategyProfile& profile) const;

  // Arithmetic membership in the equilibrium characterization; no payoffs
  // are evaluated.
  NashFamily MatchFamily(const StrategyProfile& profile) const;
  // sum z_i = r and every z_i > 0 (scarce pool only).
  bool MatchesStrictFamily(const StrategyProfile& profile) const;

  // Runs all three tests, tags the family and cross-checks the best-response
  // answer against the characterization. Throws ConsistencyError when they
  // disagree away from tolerance boundaries, or when strict => strong => Nash
  // fails.
  EquilibriumReport Classify(const StrategyProfile& profile) const;

  EquilibriumSetDescription Describe() const;

  // Re-evaluates the payoffs of a witness: true iff every deviator ends up
  // strictly better than before.
  bool Improves(const StrategyProfile& profile, const Deviation& deviation) const;

 private:
  std::optional<Deviation> NonStrictWitness(const StrategyProfile& profile) const;
  bool NearCharacterizationBoundary(const StrategyProfile& profile) const;
  double MinimumSlope() const;
  Deviation MakeDeviation(const StrategyProfile& profile, std::vector<int> players,
                          std::vector<double> amounts) const;

  LppInstance instance_;
  Partition partition_;
  DemandProfile demands_;
  Tolerances tolerances_;
};

struct FamilySample {
  NashFamily family = NashFamily::kNone;
  bool empty = true;
  std::vector<StrategyProfile> profiles;
};

// Deterministic pseudo-random members of one family of the description.
// kSumEqualsPool uses hit-and-run on the slice {sum z = r} inside the box,
// kComplementsExceedPool and kComplementBoundary sample inside their regions,
// kComplementEqualityPoint and kDemandProfile return their single point.
// Empty families come back with empty == true and no profiles.
FamilySample SampleEquilibria(const EquilibriumSetDescription& description,
                              NashFamily family, int count, std::uint64_t seed);

}  // namespace lppgame

#endif  // LPPGAME_GAME_H_
