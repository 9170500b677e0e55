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

#include <optional>
#include <string>
#include <vector>

#include "lppgame/errors.h"
#include "lppgame/oracle.h"

namespace lppgame {
namespace {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

// Solves the square system in place by Gauss-Jordan elimination. Returns
// nullopt for a singular matrix.
std::optional<RationalVector> SolveSquare(RationalMatrix a, RationalVector b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct VertexOptimum {
  Rational value;
  RationalVector point;
};

// max c.x over the vertices of { M x <= h, x >= 0 }. For a pointed polyhedron
// with a finite optimum this is the LP optimum.
std::optional<VertexOptimum> MaximizeOverVertices(const RationalMatrix& m,
                                                  const RationalVector& h,
                                                  const RationalVector& c) {
  const std::size_t vars = c.size();
  const std::size_t rows = m.size();
  const std::size_t total = rows + vars;
  // Row i < rows is M_i x <= h_i, row rows + j is -x_j <= 0.
  auto row = [&](std::size_t i) {
    if (i < rows) return m[i];
    RationalVector e(vars, Rational(0));
    e[i - rows] = -1;
    return e;
  };
  auto rhs = [&](std::size_t i) { return i < rows ? h[i] : Rational(0); };

  std::optional<VertexOptimum> best;
  std::vector<bool> chosen(total, false);
  std::fill(chosen.end() - vars, chosen.end(), true);
  do {
    RationalMatrix a;
    RationalVector b;
    for (std::size_t i = 0; i < total; ++i) {
      if (chosen[i]) {
        a.push_back(row(i));
        b.push_back(rhs(i));
      }
    }
    const std::optional<RationalVector> x = SolveSquare(std::move(a), std::move(b));
    if (!x) continue;
    bool feasible = true;
    for (std::size_t i = 0; i < total && feasible; ++i) {
      const RationalVector r = row(i);
      Rational lhs = 0;
      for (std::size_t j = 0; j < vars; ++j) lhs += r[j] * (*x)[j];
      feasible = lhs <= rhs(i);
    }
    if (!feasible) continue;
    Rational value = 0;
    for (std::size_t j = 0; j < vars; ++j) value += c[j] * (*x)[j];
    if (!best || value > best->value) best = VertexOptimum{value, *x};
  } while (std::next_permutation(chosen.begin(), chosen.end()));
  return best;
}

void CheckCaps(const LppInstance& inst) {
  if (inst.products > kMaxOracleProducts || inst.resources + 1 > kMaxOracleRows) {
    throw CapacityError("vertex enumeration oracle supports g <= " +
                        std::to_string(kMaxOracleProducts) + " and q + 1 <= " +
                        std::to_string(kMaxOracleRows));
  }
}

RationalVector ExactBundle(const LppInstance& inst, const Coalition& coalition) {
  RationalVector bundle(inst.resources, Rational(0));
  for (int i : coalition.members()) {
    if (i >= inst.producers) throw DomainError("producer index out of range");
    for (int t = 0; t < inst.resources; ++t) bundle[t] += Rational(inst.endowments[t][i]);
  }
  return bundle;
}

}  // namespace

Rational ExactCoalitionValue(const LppInstance& inst, const Coalition& coalition,
                             const Rational& pool_amount) {
  CheckCaps(inst);
  if (pool_amount < 0) throw DomainError("pool amount must be nonnegative");
  RationalMatrix m;
  for (const Vector& r : inst.production) {
    RationalVector row;
    for (double a : r) row.emplace_back(a);
    m.push_back(std::move(row));
  }
  RationalVector h = ExactBundle(inst, coalition);
  h.push_back(pool_amount);
  RationalVector c;
  for (double p : inst.prices) c.emplace_back(p);
  const auto best = MaximizeOverVertices(m, h, c);
  // x = 0 is always a vertex.
  return best->value - Rational(inst.pool_price) * pool_amount;
}

double VertexLpValue(const LppInstance& inst, const Coalition& coalition,
                     double pool_amount) {
  return ExactCoalitionValue(inst, coalition, Rational(pool_amount)).convert_to<double>();
}

ExactDemand ExactOptimalDemand(const LppInstance& inst, const Coalition& coalition) {
  CheckCaps(inst);
  const int q = inst.resources, g = inst.products;
  // Variables: x_1..x_g, z.
  RationalMatrix m;
  RationalVector h = ExactBundle(inst, coalition);
  for (int t = 0; t < q; ++t) {
    RationalVector row;
    for (int j = 0; j < g; ++j) row.emplace_back(inst.production[t][j]);
    row.emplace_back(0);
    m.push_back(std::move(row));
  }
  RationalVector pool_row;
  for (int j = 0; j < g; ++j) pool_row.emplace_back(inst.production[q][j]);
  pool_row.emplace_back(-1);
  m.push_back(std::move(pool_row));
  h.emplace_back(0);

  RationalVector profit;
  for (double p : inst.prices) profit.emplace_back(p);
  profit.push_back(-Rational(inst.pool_price));
  const auto stage1 = MaximizeOverVertices(m, h, profit);
  const Rational best = stage1->value;

  // Least z on the optimal face: add profit >= best, maximize -z.
  RationalVector floor_row;
  for (const Rational& v : profit) floor_row.push_back(-v);
  m.push_back(std::move(floor_row));
  h.push_back(-best);
  RationalVector minus_z(g + 1, Rational(0));
  minus_z[g] = -1;
  const auto stage2 = MaximizeOverVertices(m, h, minus_z);
  return ExactDemand{-stage2->value, best};
}

}  // namespace lppgame
