/*
 * Copyright 2026 the dpgsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "inequations.hpp"

#include <algorithm>

#include "errors.hpp"

namespace dpg {

InequationSystem::InequationSystem(const Game& g) : game_(&g) {
  const int n = g.vertexCount();
  rows_.reserve(g.edgeCount());
  for (int e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edge(e);
    Inequation row;
    row.edge = e;
    row.coeffs.assign(n, Rat(0));
    if (g.owner(ed.src) == Owner::Max) {
      row.dir = Direction::Geq;
      row.coeffs[ed.src] += 1;
      row.coeffs[ed.dst] -= ed.discount;
      row.constant = -ed.weight;
    } else {
      row.dir = Direction::Leq;
      row.coeffs[ed.src] -= 1;
      row.coeffs[ed.dst] += ed.discount;
      row.constant = ed.weight;
    }
    rows_.push_back(std::move(row));
  }
}

InequationSystem buildInequations(const Game& g) { return InequationSystem(g); }

bool InequationSystem::feasible(const Valuation& val) const {
  for (const auto& row : rows_)
    if (row.offsetAt(val) < 0) return false;
  return true;
}

std::vector<int> InequationSystem::tightRows(const Valuation& val) const {
  std::vector<int> tight;
  for (const auto& row : rows_)
    if (row.offsetAt(val) == 0) tight.push_back(row.edge);
  return tight;
}

Rat offset(const Game& g, const Valuation& val, int e) {
  const Edge& ed = g.edge(e);
  Rat rhs = ed.weight + ed.discount * val[ed.dst];
  return g.owner(ed.src) == Owner::Max ? Rat(val[ed.src] - rhs) : Rat(rhs - val[ed.src]);
}

OffsetFactors unitFactors(const Game& g) {
  return OffsetFactors{RatVec(g.edgeCount(), Rat(1))};
}

Rat biasedOffset(const Game& g, const Valuation& val, int e, const OffsetFactors& factors) {
  return factors.alpha[e] * offset(g, val, e);
}

Rat objectiveValue(const Game& g, const Valuation& val, const JointStrategy& s,
                   const OffsetFactors& factors) {
  DPG_CHECK(isValidStrategy(g, s), "objectiveValue: invalid strategy");
  Rat total(0);
  for (int v = 0; v < g.vertexCount(); ++v) total += biasedOffset(g, val, s.edgeOf[v], factors);
  return total;
}

std::optional<Valuation> basisValuation(const InequationSystem& system, const Basis& basis) {
  const int n = system.game().vertexCount();
  DPG_CHECK(static_cast<int>(basis.size()) == n, "basisValuation: |basis| != |V|");
  RatMat a;
  RatVec b;
  a.reserve(n);
  b.reserve(n);
  for (int e : basis) {
    a.push_back(system.row(e).coeffs);
    b.push_back(-system.row(e).constant);
  }
  return solveLinear(std::move(a), std::move(b));
}

bool isFeasible(const InequationSystem& system, const Valuation& val) {
  return system.feasible(val);
}

std::vector<int> sharpEdges(const Game& g, const Valuation& val) {
  std::vector<int> sharp;
  for (int e = 0; e < g.edgeCount(); ++e)
    if (offset(g, val, e) == 0) sharp.push_back(e);
  return sharp;
}

std::optional<JointStrategy> strategiesDefinedBy(const Game& g, const Valuation& val) {
  JointStrategy s;
  s.edgeOf.assign(g.vertexCount(), -1);
  for (int v = 0; v < g.vertexCount(); ++v) {
    for (int e : g.outEdges(v)) {  // ascending, so ties resolve to lowest id
      if (offset(g, val, e) == 0) {
        s.edgeOf[v] = e;
        break;
      }
    }
    if (s.edgeOf[v] < 0) return std::nullopt;
  }
  return s;
}

bool verifySolution(const Game& g, const Valuation& val) {
  InequationSystem system(g);
  return system.feasible(val) && strategiesDefinedBy(g, val).has_value();
}

}  // namespace dpg
