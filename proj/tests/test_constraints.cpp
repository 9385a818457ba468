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

#include <set>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "inequations.hpp"
#include "oracles.hpp"

using namespace dpg;
using namespace dpg::tests;

namespace {

// All feasible basis-defined valuations of H, by enumerating |V|-subsets of
// the edges. Exponential; test games are tiny.
std::vector<std::pair<Basis, Valuation>> enumerateFeasibleBases(const InequationSystem& system) {
  const int n = system.game().vertexCount();
  const int m = system.size();
  std::vector<std::pair<Basis, Valuation>> found;
  Basis pick;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == n) {
      if (auto val = basisValuation(system, pick); val && system.feasible(*val))
        found.emplace_back(pick, std::move(*val));
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
  return found;
}

}  // namespace

TEST_CASE("buildInequations orients rows by ownership") {
  Game g1 = makeG1();
  InequationSystem h = buildInequations(g1);
  REQUIRE(h.size() == 3);
  CHECK(h.row(kEdgeAA).dir == Direction::Leq);  // minimiser source
  CHECK(h.row(kEdgeBB).dir == Direction::Geq);
  CHECK(h.row(kEdgeBA).dir == Direction::Geq);

  // val(a) <= 1 + ½val(a): offset at {0,0} is 1; val(b) >= ½val(b) and
  // val(b) >= ½val(a): offsets 0 at the origin.
  Valuation origin = vals({0, 0});
  CHECK(h.row(kEdgeAA).offsetAt(origin) == 1);
  CHECK(h.row(kEdgeBB).offsetAt(origin) == 0);
  CHECK(h.row(kEdgeBA).offsetAt(origin) == 0);

  Game g2 = makeG2();
  InequationSystem h2 = buildInequations(g2);
  CHECK(h2.row(kEdgeAA).offsetAt(vals({3, 2})) == 0);   // val(a) = 1 + ⅔·3
  CHECK(h2.row(kEdgeBB).offsetAt(vals({3, 2})) == ratOf(4, 3));
  CHECK(h2.row(kEdgeBA).offsetAt(vals({3, 2})) == 0);

  Game single({Owner::Max}, {{0, 0, ratOf(0), ratOf(1, 2)}});
  InequationSystem hs = buildInequations(single);
  CHECK(hs.row(0).dir == Direction::Geq);
  CHECK(hs.row(0).offsetAt(vals({4})) == 2);  // v − ½v
}

TEST_CASE("offset examples from the worked game") {
  Game g1 = makeG1();
  CHECK(offset(g1, vals({2, 1}), kEdgeBB) == ratOf(1, 2));
  CHECK(offset(g1, vals({2, 1}), kEdgeAA) == 0);
  CHECK(offset(g1, vals({2, 0}), kEdgeBA) == -1);  // negative on infeasible valuations
}

TEST_CASE("offsets agree with the row form everywhere") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    Game g = sweepGame(i, 5);
    InequationSystem h(g);
    auto rng = streamFor(23, 0x0FF5E7, i);
    Valuation val;
    for (int v = 0; v < g.vertexCount(); ++v)
      val.push_back(ratOf(static_cast<long>(rng.below(17)) - 8, 1 + rng.below(4)));
    for (int e = 0; e < g.edgeCount(); ++e) CHECK(offset(g, val, e) == h.row(e).offsetAt(val));
  }
}

TEST_CASE("biasedOffset scales the plain offset") {
  Game g1 = makeG1();
  OffsetFactors unit = unitFactors(g1);
  CHECK(biasedOffset(g1, vals({2, 1}), kEdgeBB, unit) == offset(g1, vals({2, 1}), kEdgeBB));

  OffsetFactors doubled = unit;
  doubled.alpha[kEdgeBB] = ratOf(2);
  CHECK(biasedOffset(g1, vals({2, 1}), kEdgeBB, doubled) == 1);
  CHECK(biasedOffset(g1, vals({2, 1}), kEdgeAA, doubled) == 0);  // zero stays zero
}

TEST_CASE("objectiveValue reproduces the corner values") {
  Game g1 = makeG1();
  Game g2 = makeG2();
  JointStrategy selfLoops = strat({kEdgeAA, kEdgeBB});
  OffsetFactors u1 = unitFactors(g1);
  CHECK(objectiveValue(g1, vals({2, 1}), selfLoops, u1) == ratOf(1, 2));
  CHECK(objectiveValue(g1, vals({0, 0}), selfLoops, u1) == 1);
  CHECK(objectiveValue(g2, vals({3, 2}), selfLoops, u1) == ratOf(4, 3));
  CHECK(objectiveValue(g2, vals({0, 0}), selfLoops, u1) == 1);
}

TEST_CASE("basisValuation pins the polytope corners") {
  Game g1 = makeG1();
  InequationSystem h1(g1);
  CHECK(*basisValuation(h1, {kEdgeAA, kEdgeBA}) == vals({2, 1}));
  CHECK(*basisValuation(h1, {kEdgeBB, kEdgeBA}) == vals({0, 0}));

  Game g2 = makeG2();
  InequationSystem h2(g2);
  CHECK(*basisValuation(h2, {kEdgeAA, kEdgeBA}) == vals({3, 2}));
}

TEST_CASE("basisValuation reports singular bases") {
  // Two parallel edges give proportional rows: rank 1, no unique solution,
  // whether the right-hand sides agree (w=0 twice) or not.
  Game dup({Owner::Min, Owner::Max},
           {{0, 1, ratOf(0), ratOf(1, 2)},
            {0, 1, ratOf(0), ratOf(1, 2)},
            {1, 1, ratOf(0), ratOf(1, 2)}});
  InequationSystem h(dup);
  CHECK(!basisValuation(h, {0, 1}).has_value());

  Game dup2({Owner::Min, Owner::Max},
            {{0, 1, ratOf(0), ratOf(1, 2)},
             {0, 1, ratOf(1), ratOf(1, 2)},
             {1, 1, ratOf(0), ratOf(1, 2)}});
  InequationSystem h2(dup2);
  CHECK(!basisValuation(h2, {0, 1}).has_value());
}

TEST_CASE("basisValuation residuals are exactly zero") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Game g = sweepGame(i, 4);
    InequationSystem h(g);
    for (const auto& [basis, val] : enumerateFeasibleBases(h))
      for (int e : basis) CHECK(h.row(e).offsetAt(val) == 0);
  }
}

TEST_CASE("isFeasible matches the worked example") {
  Game g1 = makeG1();
  InequationSystem h(g1);
  CHECK(isFeasible(h, vals({2, 1})));
  CHECK(isFeasible(h, vals({0, 0})));
  // {a:2, b:0} comes from making (1) and (2) sharp; (3) fails: not a corner.
  Valuation notCorner = *basisValuation(h, {kEdgeAA, kEdgeBB});
  CHECK(notCorner == vals({2, 0}));
  CHECK(!isFeasible(h, notCorner));
  CHECK(offset(g1, notCorner, kEdgeBA) < 0);
}

TEST_CASE("sharpEdges by substitution") {
  Game g1 = makeG1();
  CHECK(sharpEdges(g1, vals({2, 1})) == std::vector<int>{kEdgeAA, kEdgeBA});
  CHECK(sharpEdges(g1, vals({0, 0})) == std::vector<int>{kEdgeBB, kEdgeBA});
  Game g2 = makeG2();
  CHECK(sharpEdges(g2, vals({0, 0})) == std::vector<int>{kEdgeBB, kEdgeBA});
}

TEST_CASE("strategiesDefinedBy needs a sharp edge everywhere") {
  Game g1 = makeG1();
  auto defined = strategiesDefinedBy(g1, vals({2, 1}));
  REQUIRE(defined.has_value());
  CHECK(defined->edgeOf == std::vector<int>{kEdgeAA, kEdgeBA});

  CHECK(!strategiesDefinedBy(g1, vals({0, 0})).has_value());  // a: 0 < 1 + 0
  Game g2 = makeG2();
  CHECK(!strategiesDefinedBy(g2, vals({0, 0})).has_value());
}

TEST_CASE("strategiesDefinedBy breaks ties toward the lowest edge id") {
  // Both out-edges of the MAX vertex sharp at {0, 0}.
  Game g({Owner::Max}, {{0, 0, ratOf(0), ratOf(1, 2)}, {0, 0, ratOf(0), ratOf(1, 3)}});
  auto defined = strategiesDefinedBy(g, vals({0}));
  REQUIRE(defined.has_value());
  CHECK(defined->edgeOf[0] == 0);
}

TEST_CASE("verifySolution accepts exactly the game valuation") {
  CHECK(verifySolution(makeG1(), vals({2, 1})));
  CHECK(!verifySolution(makeG1(), vals({0, 0})));
  CHECK(verifySolution(makeG2(), vals({3, 2})));
}

TEST_CASE("feasible valuations have nonnegative offsets, biased or not") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Game g = sweepGame(i, 4);
    InequationSystem h(g);
    OffsetFactors factors = unitFactors(g);
    for (int e = 0; e < g.edgeCount(); ++e)
      factors.alpha[e] = ratOf(1 + static_cast<long>(e % 3), 2);  // assorted positive factors
    for (const auto& [basis, val] : enumerateFeasibleBases(h)) {
      (void)basis;
      for (int e = 0; e < g.edgeCount(); ++e) CHECK(biasedOffset(g, val, e, factors) >= 0);
    }
  }
}

TEST_CASE("zero objective at a feasible valuation certifies the solution") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Game g = sweepGame(i, 4);
    InequationSystem h(g);
    OffsetFactors unit = unitFactors(g);
    forEachJointStrategy(g, 1 << 12, [&](const JointStrategy& s) {
      for (const auto& [basis, val] : enumerateFeasibleBases(h)) {
        (void)basis;
        if (objectiveValue(g, val, s, unit) != 0) continue;
        CHECK(verifySolution(g, val));
        auto sharp = sharpEdges(g, val);
        for (int v = 0; v < g.vertexCount(); ++v)
          CHECK(std::find(sharp.begin(), sharp.end(), s.edgeOf[v]) != sharp.end());
      }
    });
  }
}

TEST_CASE("exactly one feasible basis valuation passes verifySolution") {
  for (std::uint64_t i = 0; i < 25; ++i) {
    Game g = sweepGame(i, 4);
    InequationSystem h(g);
    std::set<Valuation> passing;
    for (const auto& [basis, val] : enumerateFeasibleBases(h)) {
      (void)basis;
      if (verifySolution(g, val)) passing.insert(val);
    }
    CAPTURE(i);
    CHECK(passing.size() == 1);
    CHECK(*passing.begin() == bruteForceSolve(g).valuation);
  }
}
