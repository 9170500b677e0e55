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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lppgame/errors.h"
#include "lppgame/game.h"
#include "lppgame/generator.h"
#include "lppgame/model.h"
#include "lppgame/oracle.h"
#include "lppgame/value_function.h"

namespace lppgame {
namespace {

constexpr int kInstances = 200;
constexpr int kProfilesPerPair = 1000;
constexpr int kValueInstances = 100;
constexpr int kLpQueries = 1000;
constexpr int kSuperadditivityInstances = 10000;
constexpr int kSeparationInstances = 50;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void Fail(std::string what) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(what));
  }
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

std::string Where(std::uint64_t seed, const Partition& p) {
  return Fmt("seed %llu partition %s", static_cast<unsigned long long>(seed),
             p.ToString().c_str());
}

struct Pair {
  std::uint64_t seed;
  const LppInstance* instance;
  CoalitionGame game;
};

// Instances drawn for the equilibrium criteria, with every partition.
class Corpus {
 public:
  Corpus() {
    GeneratorConfig config;  // n in [1,4], q in [1,3], g in [1,3]
    for (std::uint64_t seed = 0; static_cast<int>(instances_.size()) < kInstances; ++seed) {
      LppInstance inst = GenerateRandomInstance(config, seed);
      if (!Validate(inst).valid()) continue;
      seeds_.push_back(seed);
      instances_.push_back(std::move(inst));
    }
    for (std::size_t i = 0; i < instances_.size(); ++i) {
      for (const Partition& p : EnumeratePartitions(instances_[i].producers)) {
        pairs_.push_back(Pair{seeds_[i], &instances_[i], CoalitionGame(instances_[i], p)});
      }
    }
  }

  const std::vector<Pair>& pairs() const { return pairs_; }
  int instances() const { return static_cast<int>(instances_.size()); }

 private:
  std::vector<std::uint64_t> seeds_;
  std::vector<LppInstance> instances_;
  std::vector<Pair> pairs_;
};

// Demand profile is the unique equilibrium exactly when the pool covers d(P).
Outcome DemandProfileUniqueness(const Corpus& corpus) {
  Outcome out;
  int sufficient = 0, scarce = 0, demand_nash_while_scarce = 0;
  long scanned_survivors = 0;
  for (const Pair& pair : corpus.pairs()) {
    const CoalitionGame& game = pair.game;
    const StrategyProfile d = game.DemandStrategy();
    const double total = game.demands().Total();
    const bool covered = total <= game.pool() + game.PoolTolerance();
    const EquilibriumReport at_d = game.Classify(d);
    if (covered) {
      ++sufficient;
      if (!at_d.is_nash) out.Fail(Where(pair.seed, game.partition()) + ": d not Nash");
      const double step = total / 40.0;
      if (!(step > 0)) continue;
      for (const StrategyProfile& z : GridEquilibriumScan(game, step)) {
        ++scanned_survivors;
        if (z == d) continue;
        if (game.CheckNash(z).holds) {
          out.Fail(Where(pair.seed, game.partition()) + ": second equilibrium " + z.ToString());
        }
      }
    } else {
      ++scarce;
      // Uniqueness fails: some profile on the sum = r slice is an equilibrium
      // different from d.
      const FamilySample s =
          SampleEquilibria(game.Describe(), NashFamily::kSumEqualsPool, 1, pair.seed);
      if (s.empty || s.profiles[0] == d || !game.CheckNash(s.profiles[0]).holds) {
        out.Fail(Where(pair.seed, game.partition()) + ": no equilibrium besides d");
      }
      if (at_d.is_nash) {
        // Possible only when every complement of d reaches r; check it is a
        // real equilibrium against a fine grid.
        ++demand_nash_while_scarce;
        if (!GridNashCheck(game, d, total / 200.0)) {
          out.Fail(Where(pair.seed, game.partition()) + ": d wrongly classified Nash");
        }
      }
    }
  }
  out.detail = Fmt(
      "%d instances, %zu pairs (%d sufficient, %d scarce), %ld grid survivors checked; "
      "d is also Nash on %d scarce pairs where every complement of d reaches r",
      corpus.instances(), corpus.pairs().size(), sufficient, scarce, scanned_survivors,
      demand_nash_while_scarce);
  return out;
}

// Profiles for one scarce pair: family samples, perturbed family samples and
// uniform draws from the box.
std::vector<StrategyProfile> MixedProfiles(const CoalitionGame& game, std::uint64_t seed) {
  const EquilibriumSetDescription desc = game.Describe();
  const int k = game.players();
  std::mt19937_64 rng(seed);
  std::vector<StrategyProfile> family;
  const std::vector<NashFamily> families = {
      NashFamily::kSumEqualsPool, NashFamily::kComplementsExceedPool,
      NashFamily::kComplementEqualityPoint, NashFamily::kComplementBoundary};
  for (std::size_t f = 0; f < families.size(); ++f) {
    const FamilySample s = SampleEquilibria(desc, families[f], kProfilesPerPair / 8, seed + f);
    family.insert(family.end(), s.profiles.begin(), s.profiles.end());
  }
  // Slice points with a zero component.
  const FamilySample slice = SampleEquilibria(desc, NashFamily::kSumEqualsPool, 50, seed + 9);
  for (StrategyProfile z : slice.profiles) {
    if (k < 2) break;
    const int j = std::uniform_int_distribution<int>(0, k - 1)(rng);
    double spill = z.amounts[j];
    z.amounts[j] = 0.0;
    for (int i = 0; i < k && spill > 0; ++i) {
      if (i == j) continue;
      const double add = std::min(spill, game.demands().amount(i) - z.amounts[i]);
      z.amounts[i] += add;
      spill -= add;
    }
    if (spill <= 0) family.push_back(z);
  }

  std::vector<StrategyProfile> out;
  auto uniform_box = [&] {
    StrategyProfile z;
    for (int i = 0; i < k; ++i) {
      z.amounts.push_back(
          std::uniform_real_distribution<double>(0.0, game.demands().amount(i))(rng));
    }
    return z;
  };
  const int third = kProfilesPerPair / 3;
  for (int s = 0; s < third && !family.empty(); ++s) {
    out.push_back(family[s % family.size()]);
  }
  // Perturbations of at least 1e-4 relative to the pool size, well clear of
  // the tolerance band around each family boundary.
  const double scale = std::max(1.0, game.pool());
  for (int s = 0; s < third && !family.empty(); ++s) {
    StrategyProfile z = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
    const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const double size =
        scale * std::pow(10.0, std::uniform_real_distribution<double>(-4.0, -1.0)(rng));
    const double sign = std::bernoulli_distribution(0.5)(rng) ? 1.0 : -1.0;
    z.amounts[i] = std::clamp(z.amounts[i] + sign * size, 0.0, game.demands().amount(i));
    out.push_back(z);
  }
  while (static_cast<int>(out.size()) < kProfilesPerPair) out.push_back(uniform_box());
  return out;
}

struct SampledChecks {
  Outcome characterization;
  Outcome strict;
  Outcome containment;
  long profiles = 0;
  int pairs = 0;
  std::map<NashFamily, long> family_counts;
  long strict_count = 0, strong_count = 0, nash_count = 0;
};

SampledChecks SampledProfileChecks(const Corpus& corpus) {
  SampledChecks out;
  for (const Pair& pair : corpus.pairs()) {
    const CoalitionGame& game = pair.game;
    if (!game.IsScarce()) continue;
    ++out.pairs;
    const double eps_r = game.PoolTolerance();
    const double eps_z = game.tolerances().demand;
    for (const StrategyProfile& z : MixedProfiles(game, pair.seed * 7919 + out.pairs)) {
      ++out.profiles;
      const std::string where = Where(pair.seed, game.partition()) + " z = " + z.ToString();
      const EquilibriumCheck nash = game.CheckNash(z);
      const NashFamily family = game.MatchFamily(z);
      ++out.family_counts[family];
      if (nash.holds != (family != NashFamily::kNone)) {
        out.characterization.Fail(where + Fmt(": best reply says %d, family %s", nash.holds,
                                              ToString(family).c_str()));
      }
      const bool strict = game.CheckStrictNash(z).holds;
      double smallest = *std::min_element(z.amounts.begin(), z.amounts.end());
      const bool on_slice = std::abs(z.Sum() - game.pool()) <= eps_r && smallest > eps_z;
      if (strict != on_slice) {
        out.strict.Fail(where + Fmt(": strict test says %d, slice test %d", strict, on_slice));
      }
      const bool strong = game.CheckStrongNash(z).holds;
      out.nash_count += nash.holds;
      out.strict_count += strict;
      out.strong_count += strong;
      if ((strict && !strong) || (strong && !nash.holds)) {
        out.containment.Fail(where + Fmt(": strict %d strong %d nash %d", strict, strong,
                                         nash.holds));
      }
    }
  }
  out.characterization.detail =
      Fmt("%ld profiles over %d scarce pairs; families: slice %ld, exceed %ld, equality point "
          "%ld, boundary %ld, none %ld",
          out.profiles, out.pairs, out.family_counts[NashFamily::kSumEqualsPool],
          out.family_counts[NashFamily::kComplementsExceedPool],
          out.family_counts[NashFamily::kComplementEqualityPoint],
          out.family_counts[NashFamily::kComplementBoundary],
          out.family_counts[NashFamily::kNone]);
  out.strict.detail = Fmt("%ld profiles, %ld strict", out.profiles, out.strict_count);
  return out;
}

// Strong-but-not-strict and Nash-but-not-strong witnesses on scarce instances.
void Separation(const Corpus& corpus, Outcome& out) {
  std::set<std::uint64_t> weak_strong, nash_only, both;
  for (const Pair& pair : corpus.pairs()) {
    const CoalitionGame& game = pair.game;
    const int k = game.players();
    if (!game.IsScarce() || k < 2 || k > kMaxGridStrongPlayers) continue;
    const std::vector<double>& caps = game.DemandStrategy().amounts;
    const double r = game.pool();

    // (a) a zero component on the slice.
    for (int j = 0; j < k && !weak_strong.count(pair.seed); ++j) {
      StrategyProfile z{std::vector<double>(k, 0.0)};
      double left = r;
      for (int i = 0; i < k; ++i) {
        if (i == j) continue;
        z.amounts[i] = std::min(caps[i], left);
        left -= z.amounts[i];
      }
      if (left > 0) continue;
      const EquilibriumReport rep = game.Classify(z);
      if (rep.is_nash && rep.is_strong && !rep.is_strict) weak_strong.insert(pair.seed);
    }

    // (b) an all-complements-exceed-r profile with a grid-found group deviation.
    const EquilibriumSetDescription desc = game.Describe();
    const FamilySample s = SampleEquilibria(desc, NashFamily::kComplementsExceedPool, 1, 5);
    if (s.empty) continue;
    const StrategyProfile& z = s.profiles[0];
    const double widest = *std::max_element(caps.begin(), caps.end());
    const double step = std::max(widest / (kMaxGridStrongPoints - 3), 1e-12);
    if (step * k > r) continue;  // grid too coarse to fit a joint purchase under r
    const EquilibriumReport rep = game.Classify(z);
    if (!rep.is_nash || rep.is_strong) {
      out.Fail(Where(pair.seed, game.partition()) + ": exceed profile not Nash-only");
      continue;
    }
    if (!GridStrongNashCheck(game, z, step)) nash_only.insert(pair.seed);
    else out.Fail(Where(pair.seed, game.partition()) + ": grid finds no group deviation");
  }
  std::set_intersection(weak_strong.begin(), weak_strong.end(), nash_only.begin(),
                        nash_only.end(), std::inserter(both, both.begin()));
  if (static_cast<int>(both.size()) < kSeparationInstances) {
    out.Fail(Fmt("only %zu scarce instances exhibit both separations", both.size()));
  }
  out.detail += Fmt("; separations: %zu instances strong-not-strict, %zu Nash-not-strong "
                    "(grid-refuted), %zu both",
                    weak_strong.size(), nash_only.size(), both.size());
}

Outcome ValueAnalytics() {
  Outcome out;
  GeneratorConfig config;
  long coalitions = 0;
  for (std::uint64_t seed = 0; seed < kValueInstances; ++seed) {
    const LppInstance inst = GenerateRandomInstance(config, 100000 + seed);
    const Tolerances tol;
    for (unsigned mask = 1; mask < (1u << inst.producers); ++mask) {
      ++coalitions;
      const Coalition s = Coalition::FromMask(mask);
      const std::string where = Fmt("seed %llu S %s", 100000ULL + seed, s.ToString().c_str());
      if (CoalitionValue(inst, s, 0.0) != 0.0) out.Fail(where + ": value at 0 not zero");
      const Demand d = OptimalDemand(inst, s);
      const double top = std::max(1.5 * d.amount, inst.pool);
      std::vector<double> v;
      for (int g = 0; g < 50; ++g) v.push_back(CoalitionValue(inst, s, top * g / 49.0));
      for (int g = 1; g + 1 < 50; ++g) {
        if (2 * v[g] < v[g - 1] + v[g + 1] - tol.value) out.Fail(where + ": not concave");
      }
      if (d.amount > 0) {
        if (!(CoalitionValue(inst, s, d.amount - d.amount / 100) < d.best_value)) {
          out.Fail(where + ": maximum reached below d");
        }
        if (CoalitionValue(inst, s, d.amount + d.amount / 100) > d.best_value + tol.value) {
          out.Fail(where + ": value exceeds v* above d");
        }
      }
    }
  }
  out.detail = Fmt("%d instances, %ld coalitions", kValueInstances, coalitions);
  return out;
}

Outcome LpAgainstRational() {
  Outcome out;
  GeneratorConfig config;
  config.resources = {1, kMaxOracleRows - 1};
  config.products = {1, kMaxOracleProducts};
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (int query = 0; query < kLpQueries; ++query) {
    const LppInstance inst = GenerateRandomInstance(config, 200000 + query);
    const unsigned mask =
        std::uniform_int_distribution<unsigned>(1, (1u << inst.producers) - 1)(rng);
    const Coalition s = Coalition::FromMask(mask);
    const double z = std::uniform_real_distribution<double>(0.0, 1.5 * inst.pool)(rng);
    const double lp = CoalitionValue(inst, s, z);
    const double exact = ExactCoalitionValue(inst, s, Rational(z)).convert_to<double>();
    worst = std::max(worst, std::abs(lp - exact));
    if (std::abs(lp - exact) > 1e-6) {
      out.Fail(Fmt("query %d: lp %.17g exact %.17g", query, lp, exact));
    }
  }
  out.detail = Fmt("%d queries, largest difference %.3g", kLpQueries, worst);
  return out;
}

LppInstance Desk(double pool) {
  LppInstance inst;
  inst.resources = 1;
  inst.products = 1;
  inst.producers = 2;
  inst.production = {{1}, {1}};
  inst.endowments = {{4, 6}};
  inst.prices = {5};
  inst.pool = pool;
  inst.pool_price = 1;
  return inst;
}

Outcome DeskRegression() {
  Outcome out;
  constexpr double kTol = 1e-6;
  auto near = [&](double a, double b) { return std::abs(a - b) <= kTol; };
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.Fail(what);
  };
  const CoalitionGame game(Desk(3), SingletonPartition(2));
  expect(near(game.demands().amount(0), 4) && near(game.demands().amount(1), 6), "demands");
  expect(near(game.demands().best_value(0), 16) && near(game.demands().best_value(1), 24),
         "best values");
  auto z = [](double a, double b) { return StrategyProfile{{a, b}}; };

  EquilibriumReport r = game.Classify(z(1, 2));
  expect(r.is_nash && r.is_strict && r.is_strong, "(1,2) Nash, strict and strong");
  expect(near(r.payoffs[0], 4) && near(r.payoffs[1], 8), "(1,2) payoffs");
  r = game.Classify(z(0, 3));
  expect(r.is_nash && r.is_strong && !r.is_strict, "(0,3) Nash and strong, not strict");
  r = game.Classify(z(3, 3));
  expect(r.is_nash && !r.is_strict && r.family == NashFamily::kComplementEqualityPoint,
         "(3,3) equality point, not strict");
  r = game.Classify(z(2, 2));
  expect(!r.is_nash && r.nash_witness && game.Improves(z(2, 2), *r.nash_witness),
         "(2,2) refuted with a verified witness");

  const CoalitionGame rich(Desk(20), SingletonPartition(2));
  const EquilibriumSetDescription desc = rich.Describe();
  expect(!desc.scarce && desc.unique_equilibrium &&
             near((*desc.unique_equilibrium)[0], 4) && near((*desc.unique_equilibrium)[1], 6),
         "r = 20 unique equilibrium (4,6)");
  const auto survivors = GridEquilibriumScan(rich, 0.5);
  expect(survivors.size() == 1 && near(survivors[0][0], 4) && near(survivors[0][1], 6),
         "r = 20 grid scan");
  out.detail = "I1 with r = 3 and r = 20";
  return out;
}

Outcome NonSuperadditivity() {
  Outcome out;
  GeneratorConfig config;
  config.producers = {2, 4};
  config.resources = {1, kMaxOracleRows - 1};
  config.products = {1, kMaxOracleProducts};
  for (int i = 0; i < kSuperadditivityInstances; ++i) {
    const std::uint64_t seed = 300000 + i;
    const LppInstance inst = GenerateRandomInstance(config, seed);
    const auto found = SuperadditivitySearch(inst);
    if (!found) continue;
    const Rational first = ExactOptimalDemand(inst, found->first).amount;
    const Rational second = ExactOptimalDemand(inst, found->second).amount;
    Coalition united = Coalition::FromMask(found->first.Mask() | found->second.Mask());
    const Rational both = ExactOptimalDemand(inst, united).amount;
    const bool agree = std::abs(first.convert_to<double>() - found->first_demand) <= 1e-6 &&
                       std::abs(second.convert_to<double>() - found->second_demand) <= 1e-6 &&
                       std::abs(both.convert_to<double>() - found->union_demand) <= 1e-6;
    if (!agree || !(both < first + second)) {
      out.Fail(Fmt("seed %llu: rational oracle disagrees", static_cast<unsigned long long>(seed)));
      return out;
    }
    out.detail = Fmt("instance %d of %d (seed %llu): d%s + d%s = %.6g + %.6g > d%s = %.6g", i + 1,
                     kSuperadditivityInstances, static_cast<unsigned long long>(seed),
                     found->first.ToString().c_str(), found->second.ToString().c_str(),
                     found->first_demand, found->second_demand, united.ToString().c_str(),
                     found->union_demand);
    return out;
  }
  out.Fail(Fmt("no counterexample among %d instances", kSuperadditivityInstances));
  return out;
}

bool Report(int number, const char* name, const Outcome& outcome, double seconds) {
  std::printf("criterion %d %-36s %s  (%s; %.1fs)\n", number, name,
              outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str(), seconds);
  for (const auto& f : outcome.failures) std::printf("    failure: %s\n", f.c_str());
  std::fflush(stdout);
  return outcome.pass;
}

template <typename F>
auto Timed(F f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

int RunAll() {
  bool ok = true;
  double t = 0, setup = 0;
  const Corpus corpus = Timed([] { return Corpus(); }, setup);

  Outcome outcome = Timed([&] { return DemandProfileUniqueness(corpus); }, t);
  ok &= Report(1, "[demand profile uniqueness]", outcome, t + setup);

  SampledChecks sampled = Timed([&] { return SampledProfileChecks(corpus); }, t);
  // Criteria 2 to 4 share one pass over the sampled profiles.
  const double sampled_seconds = t;
  ok &= Report(2, "[family test vs best replies]", sampled.characterization, sampled_seconds);
  ok &= Report(3, "[strict test vs slice interior]", sampled.strict, sampled_seconds);
  sampled.containment.detail = Fmt("%ld profiles: %ld Nash, %ld strong, %ld strict",
                                   sampled.profiles, sampled.nash_count, sampled.strong_count,
                                   sampled.strict_count);
  Timed([&] { Separation(corpus, sampled.containment); return 0; }, t);
  ok &= Report(4, "[containment and separation]", sampled.containment, sampled_seconds + t);

  outcome = Timed(ValueAnalytics, t);
  ok &= Report(5, "[value function analytics]", outcome, t);
  outcome = Timed(LpAgainstRational, t);
  ok &= Report(6, "[simplex vs rational vertices]", outcome, t);
  outcome = Timed(DeskRegression, t);
  ok &= Report(7, "[desk instance regression]", outcome, t);
  outcome = Timed(NonSuperadditivity, t);
  ok &= Report(8, "[demand superadditivity fails]", outcome, t);
  std::printf("%s\n", ok ? "all criteria passed" : "some criteria FAILED");
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace lppgame

int main() {
  try {
    return lppgame::RunAll();
  } catch (const std::exception& e) {
    std::printf("acceptance suite aborted: %s\n", e.what());
    return 1;
  }
}
