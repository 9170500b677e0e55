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

#ifndef LPPGAME_GENERATOR_H_
#define LPPGAME_GENERATOR_H_

#include <cstdint>
#include <string_view>

#include "lppgame/model.h"

namespace lppgame {

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct RealRange {
  double lo = 0.0;
  double hi = 1.0;
};

// Sampling ranges for random instances. Every range is inclusive.
struct GeneratorConfig {
  IntRange producers{1, 4};
  IntRange resources{1, 3};
  IntRange products{1, 3};
  RealRange production{0.5, 5.0};   // ordinary-resource rows of A
  RealRange pool_row{0.5, 3.0};     // last row of A, must allow positive draws
  RealRange endowments{1.0, 10.0};  // nonzero entries of B
  RealRange prices{1.0, 30.0};
  RealRange pool{1.0, 20.0};
  RealRange pool_price{0.1, 2.0};
  // Probability that an entry of A's ordinary rows or of B is zero.
  double zero_probability = 0.3;
  // Sampled reals are rounded to this many decimals (negative: no rounding).
  int decimals = 3;
  // Repair endowments so that every producer alone can make some product,
  // which makes every coalition's maximal profit positive.
  bool ensure_positive_profit = true;
};

// Reads a JSON generator config; missing keys keep their defaults. Ranges are
// two-element arrays.
GeneratorConfig ParseGeneratorConfig(std::string_view text);

// Deterministic in (config, seed). The result satisfies every check in
// Validate() by construction. Throws ConfigError for infeasible ranges.
LppInstance GenerateRandomInstance(const GeneratorConfig& config, std::uint64_t seed);

}  // namespace lppgame

#endif  // LPPGAME_GENERATOR_H_
