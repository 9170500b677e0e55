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

#include "lppgame/model.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lppgame/errors.h"

namespace lppgame {
namespace {

using nlohmann::json;

// Largest producer count for which every coalition is checked for positive
// attainable profit.
constexpr int kMaxPositivityCheckProducers = 20;

int ReadCount(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("'") + key + "' must be an integer");
  }
  const auto value = v.get<std::int64_t>();
  if (value < 1 || value > 1000000) {
    throw DimensionError(std::string("'") + key + "' must be a positive count");
  }
  return static_cast<int>(value);
}

double ReadNumber(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where + " must be finite");
  if (x < 0) throw ParseError(where + " must be nonnegative");
  return x;
}

Vector ReadVector(const json& v, std::size_t expected, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array");
  if (v.size() != expected) {
    throw DimensionError(where + " has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(expected));
  }
  Vector out;
  out.reserve(expected);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ReadNumber(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

Matrix ReadMatrix(const json& v, std::size_t rows, std::size_t cols,
                  const std::string& where) {
  if (!v.is_array()) throw ParseError(where + " must be an array of rows");
  if (v.size() != rows) {
    throw DimensionError(where + " has " + std::to_string(v.size()) +
                         " rows, expected " + std::to_string(rows));
  }
  Matrix out;
  out.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    out.push_back(ReadVector(v[i], cols, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string FormatNumber(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

void AppendVector(std::ostringstream& out, const Vector& v) {
  out << '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << FormatNumber(v[i]);
  }
  out << ']';
}

void AppendMatrix(std::ostringstream& out, const Matrix& m) {
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    out << (i > 0 ? ",\n    " : "\n    ");
    AppendVector(out, m[i]);
  }
  out << "\n  ]";
}

// Product j can be made by a bundle iff every ordinary resource it uses is
// present in positive quantity.
bool CanProduceSomething(const LppInstance& inst, const Vector& bundle) {
  for (int j = 0; j < inst.products; ++j) {
    bool ok = true;
    for (int t = 0; t < inst.resources && ok; ++t) {
      if (inst.production[t][j] > 0 && bundle[t] <= 0) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

LppInstance ParseInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance document must be a JSON object");

  LppInstance inst;
  inst.resources = ReadCount(doc, "q");
  inst.products = ReadCount(doc, "g");
  inst.producers = ReadCount(doc, "n");
  for (const char* key : {"A", "B", "p", "r", "c_R"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  }
  inst.production = ReadMatrix(doc["A"], inst.resources + 1, inst.products, "A");
  inst.endowments = ReadMatrix(doc["B"], inst.resources, inst.producers, "B");
  inst.prices = ReadVector(doc["p"], inst.products, "p");
  inst.pool = ReadNumber(doc["r"], "r");
  inst.pool_price = ReadNumber(doc["c_R"], "c_R");
  return inst;
}

LppInstance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseInstance(buf.str());
}

std::string SerializeInstance(const LppInstance& inst) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"q\": " << inst.resources << ",\n";
  out << "  \"g\": " << inst.products << ",\n";
  out << "  \"n\": " << inst.producers << ",\n";
  out << "  \"A\": ";
  AppendMatrix(out, inst.production);
  out << ",\n  \"B\": ";
  AppendMatrix(out, inst.endowments);
  out << ",\n  \"p\": ";
  AppendVector(out, inst.prices);
  out << ",\n  \"r\": " << FormatNumber(inst.pool);
  out << ",\n  \"c_R\": " << FormatNumber(inst.pool_price);
  out << "\n}\n";
  return out.str();
}

ValidationReport Validate(const LppInstance& inst) {
  ValidationReport report;
  const int q = inst.resources;
  for (int t = 0; t < q; ++t) {
    bool held = false;
    for (int i = 0; i < inst.producers; ++i) held |= inst.endowments[t][i] > 0;
    if (!held) {
      report.violations.push_back("resource " + std::to_string(t + 1) +
                                  " has no producer with a positive endowment");
    }
  }
  for (int j = 0; j < inst.products; ++j) {
    const std::string product = "product " + std::to_string(j + 1);
    if (!(inst.PoolRequirement(j) > 0)) {
      report.violations.push_back(product + " does not require the pool resource");
    }
    bool uses_input = false;
    for (int t = 0; t < q; ++t) uses_input |= inst.production[t][j] > 0;
    if (!uses_input) {
      report.violations.push_back(product + " uses no ordinary resource");
    }
    if (!(inst.prices[j] > inst.PoolRequirement(j) * inst.pool_price)) {
      report.violations.push_back(product + " is not profitable: price " +
                                  FormatNumber(inst.prices[j]) +
                                  " <= pool cost " +
                                  FormatNumber(inst.PoolRequirement(j) * inst.pool_price));
    }
  }
  if (!report.valid()) return report;

  if (inst.producers > kMaxPositivityCheckProducers) {
    report.warnings.push_back("positivity of coalition profits not checked for n > " +
                              std::to_string(kMaxPositivityCheckProducers));
    return report;
  }
  const std::uint64_t full = (std::uint64_t{1} << inst.producers) - 1;
  int failing = 0;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const Coalition s = Coalition::FromMask(mask);
    if (CanProduceSomething(inst, ResourcesOf(inst, s))) continue;
    if (++failing <= 5) {
      report.warnings.push_back("coalition " + s.ToString() +
                                " cannot attain a positive profit");
    }
  }
  if (failing > 5) {
    report.warnings.push_back(std::to_string(failing - 5) +
                              " more coalitions cannot attain a positive profit");
  }
  return report;
}

Vector ResourcesOf(const LppInstance& inst, const Coalition& coalition) {
  Vector bundle(inst.resources, 0.0);
  for (int i : coalition.members()) {
    if (i >= inst.producers) {
      throw DomainError("producer " + std::to_string(i + 1) + " out of range (n = " +
                        std::to_string(inst.producers) + ")");
    }
    for (int t = 0; t < inst.resources; ++t) bundle[t] += inst.endowments[t][i];
  }
  return bundle;
}

}  // namespace lppgame
