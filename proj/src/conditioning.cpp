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

#include "conditioning.hpp"

#include <stdexcept>

#include "enumerate.hpp"
#include "errors.hpp"
#include "rng.hpp"

namespace dpg {

Rat contraction(const Game& g) {
  Rat best(0);
  for (const Edge& e : g.edges())
    if (e.discount > best) best = e.discount;
  return best;
}

Rat gapLowerBound(const Game& g) {
  mpz_class common(1);
  for (int v = 0; v < g.vertexCount(); ++v) {
    mpz_class maxDiscountDen(1), maxWeightDen(1);
    for (int e : g.outEdges(v)) {
      const Edge& ed = g.edge(e);
      if (ed.discount.get_den() > maxDiscountDen) maxDiscountDen = ed.discount.get_den();
      if (ed.weight.get_den() > maxWeightDen) maxWeightDen = ed.weight.get_den();
    }
    common *= maxDiscountDen * maxDiscountDen * maxWeightDen;
  }
  mpz_class edgeDen(1);
  for (const Edge& ed : g.edges()) {
    mpz_class d = ed.discount.get_den() * ed.weight.get_den();
    if (d > edgeDen) edgeDen = d;
  }
  return ratOf(mpz_class(1), common * edgeDen);
}

TrueGapResult trueGap(const Game& g, long long strategyCap) {
  requireValid(g);
  TrueGapResult result;
  result.allCoOptimal = true;
  // A strategy is co-optimal exactly when its own valuation satisfies H: the
  // strategy edges are sharp by construction, so feasibility means the
  // valuation defines strategies and is therefore the game valuation.
  forEachJointStrategy(g, strategyCap, [&](const JointStrategy& s) {
    Valuation val = jointStrategyValuation(g, s);
    Rat worst(0);
    for (int e = 0; e < g.edgeCount(); ++e) {
      Rat off = offset(g, val, e);
      if (off < worst) worst = off;
    }
    if (worst < 0) {
      Rat gapSigma = -worst;
      if (result.allCoOptimal || gapSigma < result.gap) result.gap = gapSigma;
      result.allCoOptimal = false;
    }
  });
  return result;
}

Rat defaultNoiseEpsilon(const Game& g) {
  return (Rat(1) - contraction(g)) / 3 * gapLowerBound(g);
}

Game perturbWeights(const Game& g, const Rat& epsilon, std::uint64_t seed) {
  if (epsilon <= 0 || epsilon > defaultNoiseEpsilon(g))
    throw std::invalid_argument("noise exceeds gap bound");
  std::vector<Owner> owners;
  owners.reserve(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) owners.push_back(g.owner(v));
  std::vector<Edge> edges = g.edges();
  const Rat grid = ratOf(mpz_class(1), mpz_class(kDrawGrid));
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    auto rng = streamFor(seed, kStreamNoise, static_cast<std::uint64_t>(e));
    // k uniform in {-(2^32-1), ..., 2^32-1}
    mpz_class k = mpz_class(rng.below(2 * kDrawGrid - 1)) - mpz_class(kDrawGrid - 1);
    edges[e].weight += Rat(k) * grid * epsilon;
  }
  return Game(std::move(owners), std::move(edges));
}

OffsetFactors sampleOffsetFactors(const Game& g, std::uint64_t seed) {
  OffsetFactors factors;
  factors.alpha.reserve(g.edgeCount());
  for (int e = 0; e < g.edgeCount(); ++e) {
    auto rng = streamFor(seed, kStreamAlpha, static_cast<std::uint64_t>(e));
    mpz_class k = mpz_class(1 + rng.below(kDrawGrid - 1));  // {1, ..., 2^32-1}
    factors.alpha.push_back(Rat(1) + ratOf(k, mpz_class(kDrawGrid)));
  }
  return factors;
}

Valuation recoverExactSolution(const Game& original, const JointStrategy& coOptimal) {
  Valuation val = jointStrategyValuation(original, coOptimal);
  if (!verifySolution(original, val))
    throw InternalError("recovered strategy not co-optimal — perturbation too large or gap bound violated");
  return val;
}

}  // namespace dpg
