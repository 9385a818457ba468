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

#ifndef DPG_SOLVER_HPP
#define DPG_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "conditioning.hpp"
#include "lp.hpp"

namespace dpg {

// The objective improvement driver. The inequation system is built once and
// never changes; each round minimizes the strategy-indexed objective by exact
// LP, then improves the joint strategy of BOTH players until the optimum
// reaches zero. Games that are not sharp/improving are conditioned (offset
// factors, then bounded weight noise) and the answer is recovered exactly on
// the original game.

enum class NoisePolicy : std::uint8_t { Never, OnDegeneracy, Always };
enum class PivotMode : std::uint8_t { LpFirst, Mixed };
enum class TraceLevel : std::uint8_t { None, Summary, Full };

struct SolverConfig {
  std::optional<std::uint64_t> seed;  // drives α/noise streams and, when set, the initial σ
  bool useOffsetFactors = true;
  NoisePolicy noisePolicy = NoisePolicy::OnDegeneracy;
  PivotMode pivotMode = PivotMode::LpFirst;
  long maxIterations = 0;  // objective updates; 0 = 64·|E|
  TraceLevel traceLevel = TraceLevel::Summary;
};

enum class IterationKind : std::uint8_t { Local, NonLocal, Terminal };

struct IterationRecord {
  JointStrategy sigmaBefore;
  JointStrategy sigmaAfter;
  Rat optimum;  // LP optimum of the biased f_σ this round, >= 0
  Basis basis;
  IterationKind kind;
  long pivots = 0;
  int epoch = 0;  // conditioning epoch; f values are comparable within one epoch
};

struct Solution {
  Valuation valuation;
  JointStrategy strategies;  // co-optimal, edges sharp at `valuation`
  std::vector<IterationRecord> trace;
  ConditioningReport conditioning;
  long lpSolves = 0;
  long long totalPivots = 0;
};

/// Initial joint strategy: lowest edge id per vertex, or a seeded uniform
/// choice when a seed is given. Deterministic per seed.
JointStrategy chooseInitialStrategies(const Game& g, std::optional<std::uint64_t> seed);

/// Switches every vertex to its minimum-biased-offset successor (ties keep
/// σ(v)); nullopt iff no vertex improves strictly. When it returns σ′,
/// f_σ′(val) < f_σ(val) at this val, so σ′ is better.
std::optional<JointStrategy> localImprovements(const Game& g, const Valuation& val,
                                               const JointStrategy& s, const OffsetFactors& factors);

/// Edges whose biased offset equals the biased offset of the strategy edge at
/// their source; contains (v, σ(v)) for every v.
std::vector<int> staleEdges(const Game& g, const Valuation& val, const JointStrategy& s,
                            const OffsetFactors& factors);

/// The natural candidate set: sharp edges plus the strategy edges.
std::vector<int> candidateEdgeSet(const Game& g, const Valuation& val, const JointStrategy& s,
                                  const OffsetFactors& factors);

/// Restriction to an edge subset (same vertices and owners). Throws
/// std::invalid_argument when some vertex loses all outgoing edges.
Game subgame(const Game& g, const std::vector<int>& edges);

/**
 * Scans the neighbouring basis valuations of `basis` in entering-edge order;
 * for each, points every vertex at its minimum-biased-offset edge and returns
 * the first strategy whose objective at that neighbouring valuation beats
 * f_σ(val). nullopt means the game is not improving here — the driver
 * reconditions.
 */
std::optional<JointStrategy> nonLocalImprovement(const Game& g, const InequationSystem& system,
                                                 const Valuation& val, const Basis& basis,
                                                 const JointStrategy& s,
                                                 const OffsetFactors& factors);

/**
 * Full run: terminates when the LP optimum is exactly zero or the valuation
 * defines strategies for both players; the result passes verifySolution on
 * the original game even when weight noise was applied (the valuation is then
 * recovered exactly from the final strategies). Throws LimitError (carrying
 * the trace) when maxIterations or the conditioning resample cap is exceeded.
 */
Solution solve(const Game& g, const SolverConfig& cfg = {});

/// Line-oriented log of a trace; `full` adds strategies and valuations.
std::string traceLog(const std::vector<IterationRecord>& trace, bool full);

}  // namespace dpg

#endif
