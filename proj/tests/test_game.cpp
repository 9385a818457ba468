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

#include "errors.hpp"
#include "fixtures.hpp"
#include "game.hpp"

using namespace dpg;
using namespace dpg::tests;

TEST_CASE("validate accepts G1") {
  CHECK(makeG1().validate().empty());
  CHECK(makeG2().validate().empty());
}

TEST_CASE("validate reports a sink when a's only edge is removed") {
  Game g({Owner::Min, Owner::Max},
         {{1, 1, ratOf(0), ratOf(1, 2)}, {1, 0, ratOf(0), ratOf(1, 2)}});
  auto violations = g.validate();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0] == "vertex 0 has no outgoing edge");
}

TEST_CASE("validate reports discounts outside [0,1)") {
  Game g({Owner::Min, Owner::Max},
         {{0, 0, ratOf(1), ratOf(1, 2)},
          {1, 1, ratOf(0), ratOf(1)},  // λ = 1
          {1, 0, ratOf(0), ratOf(1, 2)}});
  auto violations = g.validate();
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].find("discount not in [0,1)") != std::string::npos);
  CHECK(violations[0].find("edge 1") != std::string::npos);

  Game neg({Owner::Min}, {{0, 0, ratOf(0), ratOf(-1, 2)}});
  CHECK(neg.validate().size() == 1);
}

TEST_CASE("parseGame reads the G1 fixture") {
  Game g = parseGame(kG1Text);
  CHECK(g == makeG1());
  CHECK(g.owner(0) == Owner::Min);
  CHECK(g.owner(1) == Owner::Max);
  CHECK(g.edge(kEdgeAA).weight == 1);
  CHECK(g.edge(kEdgeBA).discount == ratOf(1, 2));
}

TEST_CASE("serialize/parse round-trips and is canonical") {
  Game g1 = makeG1();
  CHECK(parseGame(serializeGame(g1)) == g1);
  CHECK(serializeGame(parseGame(kG1Text)) == kG1Text);

  // Non-canonical rationals come out reduced.
  Game g = parseGame("dpg 1\nvertex 0 MAX\nedge 0 0 2/4 6/8\n");
  CHECK(g.edge(0).weight == ratOf(1, 2));
  CHECK(serializeGame(g) == "dpg 1\nvertex 0 MAX\nedge 0 0 1/2 3/4\n");
}

TEST_CASE("round-trip holds on random games") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Game g = sweepGame(i, 6);
    CAPTURE(i);
    CHECK(parseGame(serializeGame(g)) == g);
  }
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parseGame("dpg 1\nvertex 0 MIN\nedge 0 0 1/0 1/2\n"), ParseError);
  try {
    parseGame("dpg 1\nvertex 0 MIN\nedge 0 0 1/0 1/2\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
  }

  CHECK_THROWS_AS(parseGame("dpg 1\nvertex 0 MIN\nvertex 0 MAX\n"), ParseError);  // duplicate id
  CHECK_THROWS_AS(parseGame("vertex 0 MIN\n"), ParseError);                       // no header
  CHECK_THROWS_AS(parseGame("dpg 2\nvertex 0 MIN\nedge 0 0 1 1/2\n"), ParseError);  // vertex 1 missing
  CHECK_THROWS_AS(parseGame("dpg 1\nvertex 0 MIN\nedge 0 3 1 1/2\n"), ParseError);  // bad endpoint
  CHECK_THROWS_AS(parseGame("dpg 1\nvertex 0 MIN\nedge 0 0 1 1/2 junk\n"), ParseError);
  CHECK_THROWS_AS(parseGame("dpg 1\nvertex 0 QUEEN\n"), ParseError);
}

TEST_CASE("comments and blank lines are ignored") {
  Game g = parseGame("# a comment\ndpg 1\n\nvertex 0 MIN # trailing\nedge 0 0 1 1/2\n");
  CHECK(g.vertexCount() == 1);
}

TEST_CASE("lassoOf follows the strategy") {
  Game g1 = makeG1();
  SUBCASE("b moves to a, then a loops") {
    Lasso lasso = lassoOf(g1, strat({kEdgeAA, kEdgeBA}), 1);
    CHECK(lasso.prefix == std::vector<int>{kEdgeBA});
    CHECK(lasso.cycle == std::vector<int>{kEdgeAA});
  }
  SUBCASE("b self-loops") {
    Lasso lasso = lassoOf(g1, strat({kEdgeAA, kEdgeBB}), 1);
    CHECK(lasso.prefix.empty());
    CHECK(lasso.cycle == std::vector<int>{kEdgeBB});
  }
  SUBCASE("a has a single edge") {
    for (auto s : {strat({kEdgeAA, kEdgeBB}), strat({kEdgeAA, kEdgeBA})}) {
      Lasso lasso = lassoOf(g1, s, 0);
      CHECK(lasso.prefix.empty());
      CHECK(lasso.cycle == std::vector<int>{kEdgeAA});
    }
  }
}

TEST_CASE("lassoValue matches the worked example values") {
  Game g1 = makeG1();
  CHECK(lassoValue(g1, lassoOf(g1, strat({kEdgeAA, kEdgeBA}), 0)) == 2);  // 1/(1-1/2)
  CHECK(lassoValue(g1, lassoOf(g1, strat({kEdgeAA, kEdgeBA}), 1)) == 1);  // λ/(1-λ)

  Game g2 = makeG2();
  CHECK(lassoValue(g2, lassoOf(g2, strat({kEdgeAA, kEdgeBA}), 1)) == 2);  // (2/3)·3
}

TEST_CASE("zero-weight cycles have value zero") {
  Game g1 = makeG1();
  Lasso loop = lassoOf(g1, strat({kEdgeAA, kEdgeBB}), 1);
  CHECK(lassoValue(g1, loop) == 0);
}

TEST_CASE("jointStrategyValuation solves the strategy equations") {
  Game g1 = makeG1();
  CHECK(jointStrategyValuation(g1, strat({kEdgeAA, kEdgeBA})) == vals({2, 1}));
  CHECK(jointStrategyValuation(g1, strat({kEdgeAA, kEdgeBB})) == vals({2, 0}));

  Game g2 = makeG2();
  CHECK(jointStrategyValuation(g2, strat({kEdgeAA, kEdgeBB})) == vals({3, 0}));
  CHECK(jointStrategyValuation(g2, strat({kEdgeAA, kEdgeBA})) == vals({3, 2}));
}

TEST_CASE("valuation equals lasso value at every vertex") {
  // Two independent computations of the same number, exact equality.
  for (std::uint64_t i = 0; i < 120; ++i) {
    Game g = sweepGame(i, 6);
    auto rng = streamFor(17, 0x1A550, i);
    JointStrategy s;
    for (int v = 0; v < g.vertexCount(); ++v) {
      auto out = g.outEdges(v);
      s.edgeOf.push_back(out[rng.below(out.size())]);
    }
    Valuation val = jointStrategyValuation(g, s);
    for (int v = 0; v < g.vertexCount(); ++v) {
      CAPTURE(i);
      CAPTURE(v);
      CHECK(val[v] == lassoValue(g, lassoOf(g, s, v)));
    }
  }
}

TEST_CASE("generator is deterministic and honors its contract") {
  Game a = generateRandomGame(6, 3, 4, defaultDiscountPool(), 7);
  Game b = generateRandomGame(6, 3, 4, defaultDiscountPool(), 7);
  CHECK(a == b);
  CHECK(generateRandomGame(6, 3, 4, defaultDiscountPool(), 8) != b);
  CHECK(a.validate().empty());
  CHECK(a.vertexCount() == 6);
  CHECK(a.edgeCount() == 18);
  for (const Edge& e : a.edges()) {
    CHECK(e.weight.get_den() == 1);
    CHECK(ratAbs(e.weight) <= 4);
  }
}

TEST_CASE("one-vertex generator shape is forced") {
  Game g = generateRandomGame(1, 1, 0, {ratOf(1, 2)}, 3);
  CHECK(g.vertexCount() == 1);
  CHECK(g.edgeCount() == 1);
  CHECK(g.edge(0).src == 0);
  CHECK(g.edge(0).dst == 0);
  CHECK(g.edge(0).weight == 0);
  CHECK(g.edge(0).discount == ratOf(1, 2));
}

TEST_CASE("generator rejects bad parameters") {
  CHECK_THROWS_AS(generateRandomGame(0, 1, 0, defaultDiscountPool(), 1), std::invalid_argument);
  CHECK_THROWS_AS(generateRandomGame(1, 0, 0, defaultDiscountPool(), 1), std::invalid_argument);
  CHECK_THROWS_AS(generateRandomGame(1, 1, 0, {}, 1), std::invalid_argument);
}
