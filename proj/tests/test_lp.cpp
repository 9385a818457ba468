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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "lp.hpp"

using namespace dpg;
using namespace dpg::tests;

namespace {

// Independent optimality oracle: minimum of the objective over ALL feasible
// basis-defined valuations, by subset enumeration.
Rat enumerateOptimum(const InequationSystem& system, const JointStrategy& s,
                     const OffsetFactors& factors) {
  const int n = system.game().vertexCount();
  const int m = system.size();
  LpObjective obj = makeObjective(system, s, factors);
  std::optional<Rat> best;
  Basis pick;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      if (auto val = basisValuation(system, pick); val && system.feasible(*val)) {
        Rat value = obj.at(*val);
        if (!best || value < *best) best = value;
      }
      return;
    }
    if (m - next < n - static_cast<int>(pick.size())) return;
    for (int e = next; e < m; ++e) {
      pick.push_back(e);
      self(self, e + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  REQUIRE(best.has_value());
  return *best;
}

}  // namespace

TEST_CASE("solveLP reproduces the worked-example optima") {
  Game g1 = makeG1();
  InequationSystem h1(g1);
  OffsetFactors unit1 = unitFactors(g1);

  SUBCASE("G1, both self-loops") {
    LpResult r = solveLP(h1, strat({kEdgeAA, kEdgeBB}), unit1);
    CHECK(r.valuation == vals({2, 1}));
    CHECK(r.basis == Basis{kEdgeAA, kEdgeBA});
    CHECK(r.optimum == ratOf(1, 2));
  }
  SUBCASE("G1, co-optimal strategy reaches zero") {
    LpResult r = solveLP(h1, strat({kEdgeAA, kEdgeBA}), unit1);
    CHECK(r.valuation == vals({2, 1}));
    CHECK(r.optimum == 0);
  }
  SUBCASE("G2, both self-loops stops at the wrong corner") {
    Game g2 = makeG2();
    InequationSystem h2(g2);
    LpResult r = solveLP(h2, strat({kEdgeAA, kEdgeBB}), unitFactors(g2));
    CHECK(r.valuation == vals({0, 0}));
    CHECK(r.basis == Basis{kEdgeBB, kEdgeBA});
    CHECK(r.optimum == 1);
  }
}

TEST_CASE("solveLP matches exhaustive basis enumeration") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Game g = sweepGame(i, 5);
    InequationSystem h(g);
    OffsetFactors unit = unitFactors(g);
    JointStrategy s;
    auto rng = streamFor(29, 0x109, i);
    for (int v = 0; v < g.vertexCount(); ++v) {
      auto out = g.outEdges(v);
      s.edgeOf.push_back(out[rng.below(out.size())]);
    }
    LpResult r = solveLP(h, s, unit);
    CAPTURE(i);
    CHECK(r.optimum == enumerateOptimum(h, s, unit));
    CHECK(r.optimum >= 0);
    CHECK(h.feasible(r.valuation));
    // The returned valuation is basis-defined, with zero residual.
    auto fromBasis = basisValuation(h, r.basis);
    REQUIRE(fromBasis.has_value());
    CHECK(*fromBasis == r.valuation);
  }
}

TEST_CASE("warm start from a feasible basis is honored") {
  Game g1 = makeG1();
  InequationSystem h(g1);
  OffsetFactors unit = unitFactors(g1);
  LpResult first = solveLP(h, strat({kEdgeAA, kEdgeBB}), unit);
  LpResult second = solveLP(h, strat({kEdgeAA, kEdgeBA}), unit, &first.basis);
  CHECK(second.optimum == 0);
  CHECK(second.valuation == vals({2, 1}));
  CHECK(second.stats.pivots == 0);  // already optimal there
}

TEST_CASE("mixed pivoting reaches the same optimum and may switch the strategy") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Game g = sweepGame(i, 5);
    InequationSystem h(g);
    OffsetFactors unit = unitFactors(g);
    JointStrategy s;
    for (int v = 0; v < g.vertexCount(); ++v) s.edgeOf.push_back(g.outEdges(v)[0]);
    JointStrategy mixedStrategy = s;
    LpResult mixed = solveLPMixed(h, mixedStrategy, unit);
    CHECK(h.feasible(mixed.valuation));
    // The result is optimal for the strategy it ends on.
    CHECK(mixed.optimum == enumerateOptimum(h, mixedStrategy, unit));
    CHECK(mixed.optimum <= solveLP(h, s, unit).optimum);
  }
}

TEST_CASE("neighbouringBases enumerates single basis changes") {
  SUBCASE("G1 from the origin corner") {
    Game g1 = makeG1();
    InequationSystem h(g1);
    SimplexState state = makeState(h, {kEdgeBB, kEdgeBA}, strat({kEdgeAA, kEdgeBB}),
                                   unitFactors(g1));
    auto neighbours = neighbouringBases(state);
    REQUIRE(neighbours.size() == 1);
    CHECK(neighbours[0].first == Basis{kEdgeAA, kEdgeBA});
    CHECK(neighbours[0].second == vals({2, 1}));
  }
  SUBCASE("G2 from the origin corner") {
    Game g2 = makeG2();
    InequationSystem h(g2);
    SimplexState state = makeState(h, {kEdgeBB, kEdgeBA}, strat({kEdgeAA, kEdgeBB}),
                                   unitFactors(g2));
    auto neighbours = neighbouringBases(state);
    REQUIRE(neighbours.size() == 1);
    CHECK(neighbours[0].first == Basis{kEdgeAA, kEdgeBA});
    CHECK(neighbours[0].second == vals({3, 2}));
  }
  SUBCASE("single self-loop game has no neighbours") {
    Game g({Owner::Max}, {{0, 0, ratOf(0), ratOf(1, 2)}});
    InequationSystem h(g);
    SimplexState state = makeState(h, {0}, strat({0}), unitFactors(g));
    CHECK(neighbouringBases(state).empty());
  }
}

TEST_CASE("neighbouringBases yields only feasible basis valuations") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    Game g = sweepGame(i, 5);
    InequationSystem h(g);
    OffsetFactors unit = unitFactors(g);
    JointStrategy s;
    for (int v = 0; v < g.vertexCount(); ++v) s.edgeOf.push_back(g.outEdges(v)[0]);
    LpResult r = solveLP(h, s, unit);
    SimplexState state{&h, r.basis, r.valuation, makeObjective(h, s, unit), Phase::Phase2};
    auto neighbours = neighbouringBases(state);
    CHECK(neighbours.size() <= static_cast<size_t>(g.edgeCount() - g.vertexCount()));
    for (const auto& [basis, val] : neighbours) {
      CHECK(h.feasible(val));
      auto fromBasis = basisValuation(h, basis);
      REQUIRE(fromBasis.has_value());
      CHECK(*fromBasis == val);
      // One element changed.
      std::vector<int> diff;
      std::set_symmetric_difference(basis.begin(), basis.end(), state.basis.begin(),
                                    state.basis.end(), std::back_inserter(diff));
      CHECK(diff.size() == 2);
    }
  }
}

TEST_CASE("detectDegeneracy counts tight inequations") {
  Game g1 = makeG1();
  InequationSystem h1(g1);
  CHECK(!detectDegeneracy(makeState(h1, {kEdgeAA, kEdgeBA}, strat({kEdgeAA, kEdgeBB}),
                                    unitFactors(g1))));

  Game g2 = makeG2();
  InequationSystem h2(g2);
  CHECK(!detectDegeneracy(makeState(h2, {kEdgeBB, kEdgeBA}, strat({kEdgeAA, kEdgeBB}),
                                    unitFactors(g2))));

  // Weight 1/2 on the b self-loop makes all three inequations meet at {2,1}.
  Game degenerate({Owner::Min, Owner::Max},
                  {{0, 0, ratOf(1), ratOf(1, 2)},
                   {1, 1, ratOf(1, 2), ratOf(1, 2)},
                   {1, 0, ratOf(0), ratOf(1, 2)}});
  InequationSystem hd(degenerate);
  SimplexState state = makeState(hd, {kEdgeAA, kEdgeBA}, strat({kEdgeAA, kEdgeBB}),
                                 unitFactors(degenerate));
  CHECK(state.valuation == vals({2, 1}));
  CHECK(detectDegeneracy(state));
}

TEST_CASE("phase 1 lands on a feasible basis") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Game g = sweepGame(i, 6);
    InequationSystem h(g);
    SimplexStats stats;
    auto [basis, val] = initialFeasibleBasis(h, stats);
    CAPTURE(i);
    CHECK(h.feasible(val));
    auto fromBasis = basisValuation(h, basis);
    REQUIRE(fromBasis.has_value());
    CHECK(*fromBasis == val);
  }
}
