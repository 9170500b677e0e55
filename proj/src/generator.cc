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

#include "lppgame/generator.h"

#include <cmath>
#include <random>
#include <string>

#include "json.hpp"
#include "lppgame/errors.h"

namespace lppgame {
namespace {

using nlohmann::json;

constexpr int kMaxPriceDraws = 1000;

void CheckRange(const IntRange& r, int min_lo, const char* name) {
  if (r.lo < min_lo || r.hi < r.lo) {
    throw ConfigError(std::string("invalid range for ") + name);
  }
}

void CheckRange(const RealRange& r, const char* name) {
  if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || r.lo < 0 || r.hi < r.lo) {
    throw ConfigError(std::string("invalid range for ") + name);
  }
}

void CheckConfig(const GeneratorConfig& c) {
  CheckRange(c.producers, 1, "n");
  CheckRange(c.resources, 1, "q");
  CheckRange(c.products, 1, "g");
  CheckRange(c.production, "A");
  CheckRange(c.pool_row, "pool_row");
  CheckRange(c.endowments, "B");
  CheckRange(c.prices, "p");
  CheckRange(c.pool, "r");
  CheckRange(c.pool_price, "c_R");
  if (!(c.production.hi > 0)) throw ConfigError("A range must allow positive entries");
  if (!(c.pool_row.hi > 0)) throw ConfigError("pool_row range must allow positive entries");
  if (!(c.endowments.hi > 0)) throw ConfigError("B range must allow positive entries");
  if (!(c.zero_probability >= 0 && c.zero_probability < 1)) {
    throw ConfigError("zero_probability must lie in [0, 1)");
  }
  // The cheapest pool cost any product can have must stay below the best
  // price, otherwise no draw is profitable.
  if (!(c.prices.hi > std::max(c.pool_row.lo, 0.0) * c.pool_price.lo)) {
    throw ConfigError("price range cannot exceed the pool cost of any product");
  }
}

IntRange ReadIntRange(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() ||
      !v[1].is_number_integer()) {
    throw ParseError(std::string("'") + key + "' must be [lo, hi] integers");
  }
  return {v[0].get<int>(), v[1].get<int>()};
}

RealRange ReadRealRange(const json& v, const char* key) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(std::string("'") + key + "' must be [lo, hi] numbers");
  }
  return {v[0].get<double>(), v[1].get<double>()};
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, int decimals) : rng_(seed), decimals_(decimals) {}

  int Int(IntRange r) { return std::uniform_int_distribution<int>(r.lo, r.hi)(rng_); }

  double Real(RealRange r) {
    return Round(std::uniform_real_distribution<double>(r.lo, r.hi)(rng_));
  }

  // A draw that is strictly positive even after rounding.
  double Positive(RealRange r) {
    const double floor = decimals_ >= 0 ? std::pow(10.0, -decimals_) : 1e-6;
    return std::max(Real({std::max(r.lo, 0.0), r.hi}), floor);
  }

  bool Zero(double probability) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < probability;
  }

  int Index(int size) { return std::uniform_int_distribution<int>(0, size - 1)(rng_); }

 private:
  double Round(double x) const {
    if (decimals_ < 0) return x;
    const double scale = std::pow(10.0, decimals_);
    return std::round(x * scale) / scale;
  }

  std::mt19937_64 rng_;
  int decimals_;
};

}  // namespace

GeneratorConfig ParseGeneratorConfig(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed generator config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("generator config must be a JSON object");
  GeneratorConfig c;
  if (doc.contains("n")) c.producers = ReadIntRange(doc["n"], "n");
  if (doc.contains("q")) c.resources = ReadIntRange(doc["q"], "q");
  if (doc.contains("g")) c.products = ReadIntRange(doc["g"], "g");
  if (doc.contains("A")) c.production = ReadRealRange(doc["A"], "A");
  if (doc.contains("pool_row")) c.pool_row = ReadRealRange(doc["pool_row"], "pool_row");
  if (doc.contains("B")) c.endowments = ReadRealRange(doc["B"], "B");
  if (doc.contains("p")) c.prices = ReadRealRange(doc["p"], "p");
  if (doc.contains("r")) c.pool = ReadRealRange(doc["r"], "r");
  if (doc.contains("c_R")) c.pool_price = ReadRealRange(doc["c_R"], "c_R");
  if (doc.contains("zero_probability")) {
    c.zero_probability = doc["zero_probability"].get<double>();
  }
  if (doc.contains("decimals")) c.decimals = doc["decimals"].get<int>();
  if (doc.contains("ensure_positive_profit")) {
    c.ensure_positive_profit = doc["ensure_positive_profit"].get<bool>();
  }
  CheckConfig(c);
  return c;
}

LppInstance GenerateRandomInstance(const GeneratorConfig& config, std::uint64_t seed) {
  CheckConfig(config);
  Sampler s(seed, config.decimals);

  LppInstance inst;
  inst.producers = s.Int(config.producers);
  inst.resources = s.Int(config.resources);
  inst.products = s.Int(config.products);
  const int q = inst.resources, g = inst.products, n = inst.producers;

  inst.production.assign(q + 1, Vector(g, 0.0));
  for (int j = 0; j < g; ++j) {
    bool uses_input = false;
    for (int t = 0; t < q; ++t) {
      if (!s.Zero(config.zero_probability)) {
        inst.production[t][j] = s.Positive(config.production);
        uses_input = true;
      }
    }
    if (!uses_input) inst.production[s.Index(q)][j] = s.Positive(config.production);
  }

  inst.endowments.assign(q, Vector(n, 0.0));
  for (int t = 0; t < q; ++t) {
    bool held = false;
    for (int i = 0; i < n; ++i) {
      if (!s.Zero(config.zero_probability)) {
        inst.endowments[t][i] = s.Positive(config.endowments);
        held = true;
      }
    }
    if (!held) inst.endowments[t][s.Index(n)] = s.Positive(config.endowments);
  }

  inst.pool_price = s.Real(config.pool_price);
  inst.prices.assign(g, 0.0);
  for (int j = 0; j < g; ++j) {
    bool priced = false;
    for (int draw = 0; draw < kMaxPriceDraws && !priced; ++draw) {
      const double pool_need = s.Positive(config.pool_row);
      const double price = s.Real(config.prices);
      if (price > pool_need * inst.pool_price) {
        inst.production[q][j] = pool_need;
        inst.prices[j] = price;
        priced = true;
      }
    }
    if (!priced) throw ConfigError("could not draw a profitable price");
  }

  if (config.ensure_positive_profit) {
    for (int i = 0; i < n; ++i) {
      bool can_produce = false;
      for (int j = 0; j < g && !can_produce; ++j) {
        bool ok = true;
        for (int t = 0; t < q; ++t) {
          if (inst.production[t][j] > 0 && inst.endowments[t][i] <= 0) ok = false;
        }
        can_produce = ok;
      }
      if (can_produce) continue;
      const int j = s.Index(g);
      for (int t = 0; t < q; ++t) {
        if (inst.production[t][j] > 0 && inst.endowments[t][i] <= 0) {
          inst.endowments[t][i] = s.Positive(config.endowments);
        }
      }
    }
  }

  inst.pool = s.Real(config.pool);
  return inst;
}

}  // namespace lppgame
