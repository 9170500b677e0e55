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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lppgame/errors.h"
#include "lppgame/generator.h"
#include "lppgame/model.h"
#include "test_util.h"

namespace lppgame {
namespace {

using testing::DeskInstance;
using testing::kDeskDocument;

TEST_CASE("parse minimal one-producer document") {
  const LppInstance inst = ParseInstance(
      R"({"q":1,"g":1,"n":1,"A":[[2],[1]],"B":[[3]],"p":[4],"r":1,"c_R":0.5})");
  CHECK(inst.production.size() == 2);
  CHECK(inst.production[0].size() == 1);
  CHECK(inst.endowments == Matrix{{3.0}});
  CHECK(inst.pool_price == 0.5);
}

TEST_CASE("parse desk document") {
  CHECK(ParseInstance(kDeskDocument) == DeskInstance(3.0));
}

TEST_CASE("parse rejects malformed documents") {
  CHECK_THROWS_AS(ParseInstance("{"), ParseError);
  CHECK_THROWS_AS(ParseInstance("[1,2]"), ParseError);
  CHECK_THROWS_AS(ParseInstance(R"({"q":1,"g":1,"n":1,"A":[[1],[1]],"B":[[1]],"p":[1],"r":1})"),
                  ParseError);
  // Three rows of A with q = 1.
  CHECK_THROWS_AS(
      ParseInstance(R"({"q":1,"g":1,"n":1,"A":[[1],[1],[1]],"B":[[1]],"p":[2],"r":1,"c_R":1})"),
      DimensionError);
  CHECK_THROWS_AS(
      ParseInstance(R"({"q":1,"g":1,"n":2,"A":[[1],[1]],"B":[[1]],"p":[2],"r":1,"c_R":1})"),
      DimensionError);
  CHECK_THROWS_AS(
      ParseInstance(R"({"q":1,"g":1,"n":1,"A":[[1],[-1]],"B":[[1]],"p":[2],"r":1,"c_R":1})"),
      ParseError);
  CHECK_THROWS_AS(
      ParseInstance(R"({"q":1,"g":1,"n":1,"A":[[1],[1]],"B":[[1]],"p":[2],"r":-1,"c_R":1})"),
      ParseError);
  CHECK_THROWS_AS(
      ParseInstance(R"({"q":1,"g":1,"n":1,"A":[[1],[1]],"B":[["x"]],"p":[2],"r":1,"c_R":1})"),
      ParseError);
}

TEST_CASE("serialized instances parse back field for field") {
  const GeneratorConfig config = testing::SmallConfig();
  GeneratorConfig raw = config;
  raw.decimals = -1;  // full binary precision
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const LppInstance inst = GenerateRandomInstance(seed % 2 ? config : raw, seed);
    CHECK(ParseInstance(SerializeInstance(inst)) == inst);
  }
}

TEST_CASE("serializer key order and digits") {
  LppInstance inst = DeskInstance();
  inst.pool = 0.1;
  const std::string text = SerializeInstance(inst);
  const char* keys[] = {"\"q\"", "\"g\"", "\"n\"", "\"A\"", "\"B\"", "\"p\"", "\"r\"", "\"c_R\""};
  std::size_t last = 0;
  for (const char* key : keys) {
    const std::size_t at = text.find(key);
    REQUIRE(at != std::string::npos);
    CHECK(at >= last);
    last = at;
  }
  CHECK(text.find("0.10000000000000001") != std::string::npos);
}

TEST_CASE("validate desk instance") {
  const ValidationReport report = Validate(DeskInstance());
  CHECK(report.valid());
  CHECK(report.warnings.empty());
}

TEST_CASE("validate flags each assumption") {
  LppInstance inst = DeskInstance();
  inst.prices[0] = inst.PoolRequirement(0) * inst.pool_price;  // boundary: not profitable
  ValidationReport report = Validate(inst);
  CHECK_FALSE(report.valid());
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].find("not profitable") != std::string::npos);

  inst = DeskInstance();
  inst.endowments = {{0.0, 0.0}};
  report = Validate(inst);
  CHECK_FALSE(report.valid());
  CHECK(report.violations[0].find("resource 1") != std::string::npos);

  inst = DeskInstance();
  inst.production = {{0.0}, {1.0}};
  CHECK_FALSE(Validate(inst).valid());

  inst = DeskInstance();
  inst.production = {{1.0}, {0.0}};
  CHECK_FALSE(Validate(inst).valid());
}

TEST_CASE("validate warns about coalitions without positive profit") {
  // Product needs both resources; producer 1 holds only resource 1, producer 2
  // only resource 2. Only the pair can produce.
  LppInstance inst;
  inst.resources = 2;
  inst.products = 1;
  inst.producers = 2;
  inst.production = {{1.0}, {1.0}, {1.0}};
  inst.endowments = {{3.0, 0.0}, {0.0, 3.0}};
  inst.prices = {4.0};
  inst.pool = 1.0;
  inst.pool_price = 1.0;
  const ValidationReport report = Validate(inst);
  CHECK(report.valid());
  CHECK(report.warnings.size() == 2);
}

TEST_CASE("resources_of") {
  const LppInstance inst = DeskInstance();
  CHECK(ResourcesOf(inst, Coalition({0})) == Vector{4.0});
  CHECK(ResourcesOf(inst, Coalition({0, 1})) == Vector{10.0});
  CHECK_THROWS_AS(ResourcesOf(inst, Coalition({2})), DomainError);
}

TEST_CASE("resources_of is additive over disjoint coalitions") {
  const GeneratorConfig config = testing::SmallConfig();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const LppInstance inst = GenerateRandomInstance(config, seed);
    const std::uint64_t full = (std::uint64_t{1} << inst.producers) - 1;
    for (std::uint64_t s = 1; s <= full; ++s) {
      for (std::uint64_t t = 1; t <= full; ++t) {
        if (s & t) continue;
        const Vector a = ResourcesOf(inst, Coalition::FromMask(s));
        const Vector b = ResourcesOf(inst, Coalition::FromMask(t));
        const Vector u = ResourcesOf(inst, Coalition::FromMask(s | t));
        for (int r = 0; r < inst.resources; ++r) CHECK(u[r] == doctest::Approx(a[r] + b[r]));
      }
    }
  }
}

TEST_CASE("coalitions are canonical") {
  CHECK(Coalition({2, 0, 2}) == Coalition({0, 2}));
  CHECK(Coalition({2, 0}).ToString() == "{1,3}");
  CHECK(Coalition::FromMask(0b101) == Coalition({0, 2}));
  CHECK_THROWS_AS(Coalition(std::vector<int>{}), DomainError);
}

TEST_CASE("enumerate partitions matches Bell numbers") {
  const int bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Partition> all = EnumeratePartitions(n);
    CHECK(static_cast<int>(all.size()) == bell[n]);
    std::set<std::string> distinct;
    for (const Partition& p : all) {
      CHECK(p.producers() == n);  // constructor enforces disjoint cover
      distinct.insert(p.ToString());
    }
    CHECK(distinct.size() == all.size());
  }
  CHECK(EnumeratePartitions(10).size() == 115975);
  CHECK(EnumeratePartitions(1)[0].ToString() == "1");
  CHECK_THROWS_AS(EnumeratePartitions(11), CapacityError);
}

TEST_CASE("partition spec parsing") {
  const Partition p = ParsePartitionSpec("1,3|2", 3);
  CHECK(p.size() == 2);
  CHECK(p.block(0) == Coalition({0, 2}));
  CHECK(p.ToString() == "1,3|2");
  CHECK(ParsePartitionSpec("1,2", 2).size() == 1);
  CHECK_THROWS_AS(ParsePartitionSpec("1,2|2", 2), DomainError);
  CHECK_THROWS_AS(ParsePartitionSpec("1", 2), DomainError);
  CHECK_THROWS_AS(ParsePartitionSpec("1|3", 2), DomainError);
  CHECK_THROWS_AS(ParsePartitionSpec("1||2", 2), ParseError);
  CHECK_THROWS_AS(ParsePartitionSpec("a|2", 2), ParseError);
}

TEST_CASE("generator is deterministic") {
  const GeneratorConfig config;
  CHECK(SerializeInstance(GenerateRandomInstance(config, 0)) ==
        SerializeInstance(GenerateRandomInstance(config, 0)));
  CHECK(SerializeInstance(GenerateRandomInstance(config, 1)) !=
        SerializeInstance(GenerateRandomInstance(config, 0)));
}

TEST_CASE("generated instances validate") {
  GeneratorConfig config;
  config.producers = {1, 4};
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const ValidationReport report = Validate(GenerateRandomInstance(config, seed));
    CHECK(report.valid());
    CHECK(report.warnings.empty());
  }
}

TEST_CASE("generator rejects infeasible configs") {
  GeneratorConfig config;
  config.prices = {0.5, 1.0};
  config.pool_row = {2.0, 3.0};
  config.pool_price = {1.0, 2.0};
  CHECK_THROWS_AS(GenerateRandomInstance(config, 0), ConfigError);
  CHECK_THROWS_AS(ParseGeneratorConfig(R"({"n": [3, 1]})"), ConfigError);
  CHECK_THROWS_AS(ParseGeneratorConfig(R"({"n": 3})"), ParseError);
  CHECK(ParseGeneratorConfig(R"({"n": [2, 2]})").producers.lo == 2);
}

}  // namespace
}  // namespace lppgame
