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
#include <numeric>
#include <random>
#include <sstream>

#include "lppgame/errors.h"
#include "lppgame/game.h"

namespace lppgame {
namespace {

constexpr int kHitAndRunSteps = 8;
constexpr int kBisectionSteps = 60;
constexpr int kMaxBoundaryAttempts = 64;

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string Caps(const std::vector<double>& caps) {
  std::string out = "(";
  for (std::size_t i = 0; i < caps.size(); ++i) out += (i ? ", " : "") + Num(caps[i]);
  return out + ")";
}

// Random walk on { sum z = total } intersected with the box [0, caps]: each
// step moves along a random direction inside the hyperplane, uniformly within
// the chord cut out by the box.
class SliceWalker {
 public:
  SliceWalker(std::vector<double> caps, double total, std::mt19937_64& rng)
      : caps_(std::move(caps)), rng_(rng) {
    const double sum = std::accumulate(caps_.begin(), caps_.end(), 0.0);
    const double scale = sum > 0 ? total / sum : 0.0;
    for (double d : caps_) point_.push_back(d * scale);
  }

  const std::vector<double>& Next() {
    for (int s = 0; s < kHitAndRunSteps; ++s) Step();
    return point_;
  }

 private:
  void Step() {
    const std::size_t k = caps_.size();
    if (k < 2) return;
    std::normal_distribution<double> normal;
    std::vector<double> dir(k);
    for (double& v : dir) v = normal(rng_);
    const double mean = std::accumulate(dir.begin(), dir.end(), 0.0) / k;
    for (double& v : dir) v -= mean;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      if (std::abs(dir[i]) < 1e-14) continue;
      double a = (0.0 - point_[i]) / dir[i];
      double b = (caps_[i] - point_[i]) / dir[i];
      if (a > b) std::swap(a, b);
      lo = std::max(lo, a);
      hi = std::min(hi, b);
    }
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) return;
    const double t = std::uniform_real_distribution<double>(lo, hi)(rng_);
    for (std::size_t i = 0; i < k; ++i) {
      point_[i] = std::clamp(point_[i] + t * dir[i], 0.0, caps_[i]);
    }
  }

  std::vector<double> caps_;
  std::mt19937_64& rng_;
  std::vector<double> point_;
};

double ComplementExcess(const std::vector<double>& z, double pool) {
  const double total = std::accumulate(z.begin(), z.end(), 0.0);
  return total - *std::max_element(z.begin(), z.end()) - pool;
}

}  // namespace

std::string EquilibriumSetDescription::ToString() const {
  std::ostringstream out;
  out << "players k = " << players << ", caps d = " << Caps(caps)
      << ", d(P) = " << Num(total_demand) << ", r = " << Num(pool) << "\n";
  if (!scarce) {
    out << "case: sufficient resource (d(P) <= r)\n";
    out << "unique Nash equilibrium: " << unique_equilibrium->ToString() << "\n";
    return out.str();
  }
  out << "case: scarce resource (d(P) > r)\n";
  out << "Nash equilibria, z in the box [0, d]:\n";
  out << "  [sum-equals-r] sum z_i = " << Num(pool) << "\n";
  out << "  [all-complements-exceed-r] sum_{i!=j} z_i > " << Num(pool) << " for all j: "
      << (exceed_box_nonempty ? "nonempty" : "empty") << "\n";
  if (equality_value) {
    out << "  [complement-equality-point] z_i = r/(k-1) = " << Num(*equality_value) << ": "
        << (equality_point_feasible ? "feasible" : "infeasible (exceeds some d_i)") << "\n";
  } else {
    out << "  [complement-equality-point] empty (k = 1)\n";
  }
  out << "  [complement-boundary] sum_{i!=j} z_i >= " << Num(pool)
      << " for all j with some equality: " << (boundary_nonempty ? "nonempty" : "empty")
      << "\n";
  out << "strict Nash equilibria: sum z_i = " << Num(pool) << " with every z_i > 0"
      << (strict_family_nonempty ? "" : " (empty)") << "\n";
  return out.str();
}

FamilySample SampleEquilibria(const EquilibriumSetDescription& desc, NashFamily family,
                              int count, std::uint64_t seed) {
  if (count < 1) throw DomainError("sample count must be at least 1");
  FamilySample sample;
  sample.family = family;
  std::mt19937_64 rng(seed);
  const int k = desc.players;
  const double r = desc.pool;

  auto emit = [&](std::vector<double> z) {
    sample.profiles.push_back(StrategyProfile{std::move(z)});
  };

  switch (family) {
    case NashFamily::kNone:
      throw DomainError("cannot sample the empty family tag");
    case NashFamily::kDemandProfile:
      if (desc.scarce) return sample;
      emit(desc.unique_equilibrium->amounts);
      break;
    case NashFamily::kSumEqualsPool: {
      if (!desc.scarce || !desc.sum_slice_nonempty) return sample;
      SliceWalker walker(desc.caps, r, rng);
      for (int s = 0; s < count; ++s) emit(walker.Next());
      break;
    }
    case NashFamily::kComplementEqualityPoint:
      if (!desc.scarce || !desc.equality_point_feasible) return sample;
      emit(std::vector<double>(k, *desc.equality_value));
      break;
    case NashFamily::kComplementsExceedPool: {
      if (!desc.scarce || !desc.exceed_box_nonempty) return sample;
      // sum z - max z is concave, so along the segment from the caps (where
      // it is largest) to a uniform box point it stays above any level below
      // its value at the caps on an initial interval.
      const double at_caps = ComplementExcess(desc.caps, r);
      const double level = 0.5 * (at_caps + desc.pool_tolerance);
      for (int s = 0; s < count; ++s) {
        std::vector<double> u(k);
        for (int i = 0; i < k; ++i) {
          u[i] = std::uniform_real_distribution<double>(0.0, desc.caps[i])(rng);
        }
        auto along = [&](double t) {
          std::vector<double> z(k);
          for (int i = 0; i < k; ++i) z[i] = desc.caps[i] + t * (u[i] - desc.caps[i]);
          return z;
        };
        double lo = 0.0, hi = 1.0;
        if (ComplementExcess(along(1.0), r) > level) {
          lo = 1.0;
        } else {
          for (int it = 0; it < kBisectionSteps; ++it) {
            const double mid = 0.5 * (lo + hi);
            (ComplementExcess(along(mid), r) > level ? lo : hi) = mid;
          }
        }
        emit(along(std::uniform_real_distribution<double>(0.0, lo)(rng)));
      }
      break;
    }
    case NashFamily::kComplementBoundary: {
      if (!desc.scarce || !desc.boundary_nonempty) return sample;
      // Pick a player j whose rivals can fill the pool exactly; then j must
      // request at least as much as each rival for their complements to reach r.
      std::vector<int> candidates;
      const double total_caps = desc.total_demand;
      for (int j = 0; j < k; ++j) {
        if (total_caps - desc.caps[j] >= r) candidates.push_back(j);
      }
      const int widest = static_cast<int>(
          std::max_element(desc.caps.begin(), desc.caps.end()) - desc.caps.begin());
      if (candidates.empty()) candidates.push_back(widest);
      for (int s = 0; s < count; ++s) {
        std::vector<double> z;
        for (int attempt = 0; attempt < kMaxBoundaryAttempts && z.empty(); ++attempt) {
          const int j = candidates[std::uniform_int_distribution<int>(
              0, static_cast<int>(candidates.size()) - 1)(rng)];
          std::vector<double> rival_caps;
          for (int i = 0; i < k; ++i) {
            if (i != j) rival_caps.push_back(desc.caps[i]);
          }
          SliceWalker walker(rival_caps, r, rng);
          const std::vector<double>& rivals = walker.Next();
          const double floor = *std::max_element(rivals.begin(), rivals.end());
          if (floor > desc.caps[j]) continue;
          z.assign(k, 0.0);
          for (int i = 0, m = 0; i < k; ++i) {
            if (i != j) z[i] = rivals[m++];
          }
          z[j] = std::uniform_real_distribution<double>(floor, desc.caps[j])(rng);
        }
        if (z.empty()) {
          // Rivals of the widest player scaled onto the slice always fit.
          const double rest = total_caps - desc.caps[widest];
          z.assign(k, 0.0);
          for (int i = 0; i < k; ++i) z[i] = i == widest ? desc.caps[i] : desc.caps[i] * r / rest;
        }
        emit(std::move(z));
      }
      break;
    }
  }
  sample.empty = sample.profiles.empty();
  return sample;
}

}  // namespace lppgame
