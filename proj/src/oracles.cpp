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

#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

#include "conditioning.hpp"
#include "enumerate.hpp"
#include "errors.hpp"

namespace dpg {

namespace {

// Mixed-radix key over one player's vertices: which out-edge index each of
// that player's vertices picked.
struct PlayerKey {
  std::vector<int> vertices;  // vertices owned by the player
  std::vector<long long> radix;
  long long size = 1;

  PlayerKey(const Game& g, Owner who) {
    for (int v = 0; v < g.vertexCount(); ++v)
      if (g.owner(v) == who) {
        vertices.push_back(v);
        radix.push_back(size);
        size *= static_cast<long long>(g.outEdges(v).size());
      }
  }

  long long keyOf(const Game& g, const JointStrategy& s) const {
    long long key = 0;
    for (size_t i = 0; i < vertices.size(); ++i) {
      auto out = g.outEdges(vertices[i]);
      auto it = std::lower_bound(out.begin(), out.end(), s.edgeOf[vertices[i]]);
      key += radix[i] * (it - out.begin());
    }
    return key;
  }
};

}  // namespace

BruteForceResult bruteForceSolve(const Game& g, long long strategyCap) {
  requireValid(g);
  const int n = g.vertexCount();
  PlayerKey maxKey(g, Owner::Max), minKey(g, Owner::Min);

  // Pointwise min over Min strategies per fixed Max strategy, and vice
  // versa. Positional determinacy makes the pointwise inner optimum
  // simultaneously achievable, so pointwise max-min is the game value.
  std::vector<Valuation> minOverMin(maxKey.size), maxOverMax(minKey.size);
  std::vector<char> maxSeen(maxKey.size, 0), minSeen(minKey.size, 0);

  forEachJointStrategy(g, strategyCap, [&](const JointStrategy& s) {
    Valuation val = jointStrategyValuation(g, s);
    long long mk = maxKey.keyOf(g, s), nk = minKey.keyOf(g, s);
    if (!maxSeen[mk]) {
      minOverMin[mk] = val;
      maxSeen[mk] = 1;
    } else {
      for (int v = 0; v < n; ++v)
        if (val[v] < minOverMin[mk][v]) minOverMin[mk][v] = val[v];
    }
    if (!minSeen[nk]) {
      maxOverMax[nk] = std::move(val);
      minSeen[nk] = 1;
    } else {
      for (int v = 0; v < n; ++v)
        if (val[v] > maxOverMax[nk][v]) maxOverMax[nk][v] = val[v];
    }
  });

  Valuation supInf = minOverMin[0];
  for (long long k = 1; k < maxKey.size; ++k)
    for (int v = 0; v < n; ++v)
      if (minOverMin[k][v] > supInf[v]) supInf[v] = minOverMin[k][v];
  Valuation infSup = maxOverMax[0];
  for (long long k = 1; k < minKey.size; ++k)
    for (int v = 0; v < n; ++v)
      if (maxOverMax[k][v] < infSup[v]) infSup[v] = maxOverMax[k][v];

  DPG_CHECK(supInf == infSup, "determinacy check failed: max-min != min-max");

  BruteForceResult result;
  result.valuation = std::move(supInf);
  forEachJointStrategy(g, strategyCap, [&](const JointStrategy& s) {
    if (jointStrategyValuation(g, s) == result.valuation) result.coOptimal.push_back(s);
  });
  DPG_CHECK(!result.coOptimal.empty(), "no co-optimal strategy found");
  return result;
}

namespace {

Rat dyadicFloor(const Rat& x, const mpz_class& scale) {
  mpz_class q;
  mpz_class scaled = x.get_num() * scale;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  return ratOf(q, scale);
}

Valuation bellmanStep(const Game& g, const Valuation& val) {
  Valuation next(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) {
    bool first = true;
    for (int e : g.outEdges(v)) {
      const Edge& ed = g.edge(e);
      Rat candidate = ed.weight + ed.discount * val[ed.dst];
      if (first || (g.owner(v) == Owner::Max ? candidate > next[v] : candidate < next[v]))
        next[v] = std::move(candidate);
      first = false;
    }
  }
  return next;
}

}  // namespace

Valuation valueIteration(const Game& g, const Rat& tolerance) {
  requireValid(g);
  if (tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  const int n = g.vertexCount();
  const Rat lambda = contraction(g);

  if (lambda == 0) return bellmanStep(g, Valuation(n, Rat(0)));  // exact in one step

  // Stop when the sup-norm step is at most (tol/2)·(1−λ*)/λ*; rounding to the
  // dyadic grid contributes at most 2^-p/(1−λ*), kept under tol/2 as well.
  const Rat threshold = tolerance / 2 * (Rat(1) - lambda) / lambda;
  const Rat roundTarget = tolerance * (Rat(1) - lambda) / 8;
  mpz_class scale(1);
  long bits = 0;
  while (ratOf(mpz_class(1), scale) > roundTarget || bits < 32) {
    scale *= 2;
    ++bits;
  }

  Valuation val(n, Rat(0));
  Rat prevStep(-1);
  for (long iter = 0; iter < 1000000; ++iter) {
    Valuation next = bellmanStep(g, val);
    for (auto& x : next) x = dyadicFloor(x, scale);
    Rat step(0);
    for (int v = 0; v < n; ++v) {
      Rat diff = ratAbs(next[v] - val[v]);
      if (diff > step) step = diff;
    }
    val = std::move(next);
    if (step <= threshold) return val;
    // Rounding floor reached before the threshold: double the precision.
    if (prevStep >= 0 && step >= prevStep) {
      scale *= scale;
      prevStep = -1;
    } else {
      prevStep = step;
    }
  }
  throw InternalError("value iteration failed to converge");
}

OracleReport crossCheck(const Game& g, const Valuation& solved, long long strategyCap,
                        const Rat& tolerance) {
  OracleReport report;
  if (jointStrategyCount(g, strategyCap) > 0) {
    report.method = OracleMethod::BruteForce;
    report.oracleValuation = bruteForceSolve(g, strategyCap).valuation;
    report.pass = true;
    for (int v = 0; v < g.vertexCount(); ++v) {
      if (solved[v] != report.oracleValuation[v]) {
        report.pass = false;
        report.witness = "vertex " + std::to_string(v) + ": solver " + ratStr(solved[v]) +
                         " vs oracle " + ratStr(report.oracleValuation[v]);
        break;
      }
    }
  } else {
    report.method = OracleMethod::ValueIteration;
    report.oracleValuation = valueIteration(g, tolerance);
    report.pass = true;
    for (int v = 0; v < g.vertexCount(); ++v) {
      if (ratAbs(solved[v] - report.oracleValuation[v]) > tolerance) {
        report.pass = false;
        report.witness = "vertex " + std::to_string(v) + ": solver " + ratStr(solved[v]) +
                         " vs oracle " + ratStr(report.oracleValuation[v]) + " (tolerance " +
                         ratStr(tolerance) + ")";
        break;
      }
    }
  }
  return report;
}

}  // namespace dpg
