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

#include "solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "errors.hpp"
#include "rng.hpp"

namespace dpg {

JointStrategy chooseInitialStrategies(const Game& g, std::optional<std::uint64_t> seed) {
  requireValid(g);
  JointStrategy s;
  s.edgeOf.reserve(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) {
    auto out = g.outEdges(v);
    if (seed) {
      auto rng = streamFor(*seed, kStreamInitStrategy, static_cast<std::uint64_t>(v));
      s.edgeOf.push_back(out[rng.below(out.size())]);
    } else {
      s.edgeOf.push_back(out[0]);
    }
  }
  return s;
}

std::optional<JointStrategy> localImprovements(const Game& g, const Valuation& val,
                                               const JointStrategy& s,
                                               const OffsetFactors& factors) {
  JointStrategy next = s;
  bool improved = false;
  for (int v = 0; v < g.vertexCount(); ++v) {
    Rat best = biasedOffset(g, val, s.edgeOf[v], factors);
    for (int e : g.outEdges(v)) {
      Rat candidate = biasedOffset(g, val, e, factors);
      if (candidate < best) {  // strict: ties keep the current edge
        best = std::move(candidate);
        next.edgeOf[v] = e;
        improved = true;
      }
    }
  }
  if (!improved) return std::nullopt;
  return next;
}

std::vector<int> staleEdges(const Game& g, const Valuation& val, const JointStrategy& s,
                            const OffsetFactors& factors) {
  std::vector<int> stale;
  for (int e = 0; e < g.edgeCount(); ++e) {
    int v = g.edge(e).src;
    if (biasedOffset(g, val, e, factors) == biasedOffset(g, val, s.edgeOf[v], factors))
      stale.push_back(e);
  }
  return stale;
}

std::vector<int> candidateEdgeSet(const Game& g, const Valuation& val, const JointStrategy& s,
                                  const OffsetFactors& factors) {
  (void)factors;  // sharpness (offset == 0) does not depend on positive factors
  std::vector<int> edges = sharpEdges(g, val);
  edges.insert(edges.end(), s.edgeOf.begin(), s.edgeOf.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

Game subgame(const Game& g, const std::vector<int>& edges) {
  std::vector<char> covered(g.vertexCount(), 0);
  for (int e : edges) covered[g.edge(e).src] = 1;
  for (int v = 0; v < g.vertexCount(); ++v)
    if (!covered[v])
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " without outgoing edge in restriction");
  std::vector<int> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Owner> owners;
  owners.reserve(g.vertexCount());
  for (int v = 0; v < g.vertexCount(); ++v) owners.push_back(g.owner(v));
  std::vector<Edge> kept;
  kept.reserve(sorted.size());
  for (int e : sorted) kept.push_back(g.edge(e));
  return Game(std::move(owners), std::move(kept));
}

std::optional<JointStrategy> nonLocalImprovement(const Game& g, const InequationSystem& system,
                                                 const Valuation& val, const Basis& basis,
                                                 const JointStrategy& s,
                                                 const OffsetFactors& factors) {
  const Rat current = objectiveValue(g, val, s, factors);
  SimplexState state{&system, basis, val, makeObjective(system, s, factors), Phase::Phase2};
  for (const auto& [neighbourBasis, neighbourVal] : neighbouringBases(state)) {
    (void)neighbourBasis;
    JointStrategy candidate;
    candidate.edgeOf.reserve(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) {
      auto out = g.outEdges(v);
      int bestEdge = out[0];
      Rat best = biasedOffset(g, neighbourVal, bestEdge, factors);
      for (size_t k = 1; k < out.size(); ++k) {
        Rat c = biasedOffset(g, neighbourVal, out[k], factors);
        if (c < best) {
          best = std::move(c);
          bestEdge = out[k];
        }
      }
      candidate.edgeOf.push_back(bestEdge);
    }
    if (objectiveValue(g, neighbourVal, candidate, factors) < current) return candidate;
  }
  return std::nullopt;
}

std::string traceLog(const std::vector<IterationRecord>& trace, bool full) {
  std::ostringstream out;
  for (size_t i = 0; i < trace.size(); ++i) {
    const IterationRecord& rec = trace[i];
    out << "iter=" << (i + 1) << " epoch=" << rec.epoch << " kind="
        << (rec.kind == IterationKind::Local
                ? "local"
                : rec.kind == IterationKind::NonLocal ? "nonlocal" : "terminal")
        << " f=" << ratStrFrac(rec.optimum) << " pivots=" << rec.pivots << " basis=";
    for (size_t k = 0; k < rec.basis.size(); ++k) out << (k ? "," : "") << rec.basis[k];
    if (full) {
      out << " sigma=";
      for (size_t k = 0; k < rec.sigmaBefore.edgeOf.size(); ++k)
        out << (k ? "," : "") << rec.sigmaBefore.edgeOf[k];
      out << " sigma_next=";
      for (size_t k = 0; k < rec.sigmaAfter.edgeOf.size(); ++k)
        out << (k ? "," : "") << rec.sigmaAfter.edgeOf[k];
    }
    out << "\n";
  }
  return out.str();
}

namespace {

constexpr int kResampleCap = 16;

struct Driver {
  const Game& original;
  const SolverConfig& cfg;

  Game work;
  std::optional<InequationSystem> system;
  OffsetFactors alpha;
  JointStrategy sigma;
  std::optional<Basis> warm;
  ConditioningReport report;
  std::vector<IterationRecord> trace;
  long lpSolves = 0;
  long long totalPivots = 0;
  int epoch = 0;
  std::uint64_t reseedCounter = 0;
  bool escalateToNoise = false;  // α was already resampled for the current stall

  explicit Driver(const Game& g, const SolverConfig& c) : original(g), cfg(c), work(g) {
    report.contraction = contraction(g);
    report.gapLowerBound = gapLowerBound(g);
    report.epsilon = 0;
    const std::uint64_t base = cfg.seed.value_or(0);
    report.alphaSeed = base;
    report.alphaApplied = cfg.useOffsetFactors;
    alpha = cfg.useOffsetFactors ? sampleOffsetFactors(g, base) : unitFactors(g);
    if (cfg.noisePolicy == NoisePolicy::Always) applyNoise();
    if (!system) system.emplace(work);
    sigma = chooseInitialStrategies(g, cfg.seed);
  }

  std::uint64_t freshSeed(std::uint64_t purpose) {
    return mixStream(cfg.seed.value_or(0), purpose, ++reseedCounter);
  }

  void applyNoise() {
    report.epsilon = defaultNoiseEpsilon(original);
    report.noiseSeed = freshSeed(kStreamNoise);
    work = perturbWeights(original, report.epsilon, report.noiseSeed);
    system.emplace(work);
    report.noiseApplied = true;
    warm.reset();
    ++epoch;
  }

  void resampleAlpha() {
    report.alphaSeed = freshSeed(kStreamAlpha);
    alpha = sampleOffsetFactors(original, report.alphaSeed);
    report.alphaApplied = true;
    ++epoch;  // warm basis stays valid: α changes the objective, not H
  }

  void countResample() {
    if (++report.resamples > kResampleCap)
      throw LimitError("conditioning resample cap exceeded", traceLog(trace, true));
  }

  void record(IterationKind kind, const JointStrategy& before, const JointStrategy& after,
              Rat optimum, Basis basis, long pivots) {
    if (cfg.traceLevel == TraceLevel::None) return;
    trace.push_back(IterationRecord{before, after, std::move(optimum), std::move(basis), kind,
                                    pivots, epoch});
  }

  Solution finish(const JointStrategy& coOptimal, Valuation lpValuation) {
    Valuation valuation = report.noiseApplied ? recoverExactSolution(original, coOptimal)
                                              : std::move(lpValuation);
    DPG_CHECK(verifySolution(original, valuation), "solution failed final verification");
    DPG_CHECK(objectiveValue(original, valuation, coOptimal, unitFactors(original)) == 0,
              "terminal strategy not sharp at the solution");
    Solution solution;
    solution.valuation = std::move(valuation);
    solution.strategies = coOptimal;
    solution.trace = std::move(trace);
    solution.conditioning = report;
    solution.lpSolves = lpSolves;
    solution.totalPivots = totalPivots;
    return solution;
  }

  Solution run() {
    const long maxIter =
        cfg.maxIterations > 0 ? cfg.maxIterations : std::max(8L, 64L * original.edgeCount());
    for (long iter = 0; iter < maxIter; ++iter) {
      LpResult lp = cfg.pivotMode == PivotMode::Mixed
                        ? solveLPMixed(*system, sigma, alpha, warm ? &*warm : nullptr)
                        : solveLP(*system, sigma, alpha, warm ? &*warm : nullptr);
      ++lpSolves;
      totalPivots += lp.stats.pivots;
      warm = lp.basis;

      if (lp.stats.degenerateVertexSeen) {
        ++report.degeneracyEvents;
        if (cfg.noisePolicy != NoisePolicy::Never) {
          // Not sharp (or a grid collision after noise): perturb and rerun.
          countResample();
          applyNoise();
          continue;
        }
      }

      if (lp.optimum == 0) {
        record(IterationKind::Terminal, sigma, sigma, lp.optimum, lp.basis, lp.stats.pivots);
        return finish(sigma, std::move(lp.valuation));
      }

      if (auto improved = localImprovements(work, lp.valuation, sigma, alpha)) {
        record(IterationKind::Local, sigma, *improved, lp.optimum, lp.basis, lp.stats.pivots);
        sigma = std::move(*improved);
        escalateToNoise = false;
        continue;
      }

      if (auto defined = strategiesDefinedBy(work, lp.valuation)) {
        // Theorem-1 certificate. With local improvements tried first this can
        // only fire together with optimum == 0, but it stays as a terminal
        // check so the driver never loops past a solved game.
        Rat terminalF = objectiveValue(work, lp.valuation, *defined, alpha);
        record(IterationKind::Terminal, sigma, *defined, std::move(terminalF), lp.basis,
               lp.stats.pivots);
        return finish(*defined, std::move(lp.valuation));
      }

      if (auto improved =
              nonLocalImprovement(work, *system, lp.valuation, lp.basis, sigma, alpha)) {
        record(IterationKind::NonLocal, sigma, *improved, lp.optimum, lp.basis, lp.stats.pivots);
        sigma = std::move(*improved);
        escalateToNoise = false;
        continue;
      }

      // Stuck: the game is not improving at this point. Fresh offset factors
      // first (valuation-preserving), weight noise if that was already tried.
      countResample();
      const bool canAlpha = cfg.useOffsetFactors;
      const bool canNoise = cfg.noisePolicy != NoisePolicy::Never;
      if (!canAlpha && !canNoise)
        throw LimitError("improvement stuck with conditioning disabled (alpha off, noise never)",
                         traceLog(trace, true));
      if (canAlpha && !escalateToNoise) {
        resampleAlpha();
        escalateToNoise = true;
      } else if (canNoise) {
        applyNoise();
        escalateToNoise = false;
      } else {
        resampleAlpha();
      }
    }
    throw LimitError("maxIterations exceeded", traceLog(trace, true));
  }
};

}  // namespace

Solution solve(const Game& g, const SolverConfig& cfg) {
  requireValid(g);
  Driver driver(g, cfg);
  return driver.run();
}

}  // namespace dpg
