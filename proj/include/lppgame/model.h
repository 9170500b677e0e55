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

#ifndef LPPGAME_MODEL_H_
#define LPPGAME_MODEL_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lppgame {

using Vector = std::vector<double>;
// Row-major dense matrix.
using Matrix = std::vector<Vector>;

// A linear production situation with a common-pool resource.
//
// `production` has `resources + 1` rows and `products` columns; the last row
// holds the per-unit pool-resource requirement of each product. Column i of
// `endowments` is producer i's resource bundle. Producers, resources and
// products are indexed from zero in code and from one in user-facing text.
struct LppInstance {
  int resources = 0;  // q
  int products = 0;   // g
  int producers = 0;  // n
  Matrix production;  // A, (q+1) x g
  Matrix endowments;  // B, q x n
  Vector prices;      // p, length g
  double pool = 0.0;  // r
  double pool_price = 0.0;  // c_R

  // Per-unit pool requirement of product j (last row of A).
  double PoolRequirement(int product) const {
    return production[resources][product];
  }

  friend bool operator==(const LppInstance&, const LppInstance&) = default;
};

// A nonempty set of producers, stored sorted and deduplicated so that set
// equality is representation equality.
class Coalition {
 public:
  explicit Coalition(std::vector<int> members);
  static Coalition FromMask(std::uint64_t mask);
  static Coalition Everyone(int producers);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool Contains(int producer) const;
  std::uint64_t Mask() const;
  // "{1,3}" with one-based indices.
  std::string ToString() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<int> members_;
};

// An ordered list of disjoint coalitions covering all producers. Block order
// is the player order of the game.
class Partition {
 public:
  Partition(int producers, std::vector<Coalition> blocks);

  int producers() const { return producers_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Coalition>& blocks() const { return blocks_; }
  const Coalition& block(int i) const { return blocks_[i]; }
  // "1,3|2" with one-based indices.
  std::string ToString() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int producers_;
  std::vector<Coalition> blocks_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;

  bool valid() const { return violations.empty(); }
};

// Reads an instance document (JSON). Checks shapes and nonnegativity only;
// the modelling assumptions are checked by Validate().
LppInstance ParseInstance(std::string_view text);
LppInstance LoadInstance(const std::string& path);

// Keys in the order q, g, n, A, B, p, r, c_R; numbers with 17 significant
// digits so that parsing the output reproduces the instance exactly.
std::string SerializeInstance(const LppInstance& instance);

// Checks the standing assumptions of the model. Coalitions that cannot reach
// a positive profit are reported as warnings.
ValidationReport Validate(const LppInstance& instance);

// b^S: componentwise sum of the members' endowments.
Vector ResourcesOf(const LppInstance& instance, const Coalition& coalition);

inline constexpr int kMaxEnumeratedProducers = 10;

// All set partitions of {0..n-1}, in lexicographic order of their restricted
// growth strings. Blocks are ordered by their smallest member.
std::vector<Partition> EnumeratePartitions(int producers);

// Parses "1,3|2|4,5": blocks separated by '|', one-based members by ','.
Partition ParsePartitionSpec(std::string_view spec, int producers);

// The partition into singletons, in producer order.
Partition SingletonPartition(int producers);

}  // namespace lppgame

#endif  // LPPGAME_MODEL_H_
