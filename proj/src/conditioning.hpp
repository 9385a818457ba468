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

#ifndef DPG_CONDITIONING_HPP
#define DPG_CONDITIONING_HPP

#include <cstdint>

#include "game.hpp"
#include "inequations.hpp"

namespace dpg {

// Conditioning makes games sharp (bounded random weight noise within the gap
// bound) and improving (random positive offset factors), and transfers
// solutions back to the original game exactly. Draws come from a discrete
// 2^32-step rational grid so everything stays exact; collisions are detected
// by the driver and resampled.

inline constexpr std::uint64_t kDrawGrid = std::uint64_t(1) << 32;

struct ConditioningReport {
  Rat contraction;    // λ*
  Rat gapLowerBound;  // γ_lb > 0
  Rat epsilon;        // noise magnitude actually used, 0 when none
  std::uint64_t noiseSeed = 0;
  std::uint64_t alphaSeed = 0;
  bool noiseApplied = false;
  bool alphaApplied = false;
  int resamples = 0;
  int degeneracyEvents = 0;
};

/// λ* = max edge discount.
Rat contraction(const Game& g);

/// Positive lower bound on the gap, from per-vertex maximal denominators:
/// 1 / (Π_v maxden(λ)²·maxden(w) · max_e den(λ_e)·den(w_e)). Valid for every
/// non-co-optimal strategy, so one bound serves the whole run.
Rat gapLowerBound(const Game& g);

struct TrueGapResult {
  bool allCoOptimal = false;
  Rat gap;  // meaningful only when !allCoOptimal
};

/// Oracle-grade exact gap by enumerating all joint strategies; errors via
/// LimitError when the strategy count exceeds `strategyCap`.
TrueGapResult trueGap(const Game& g, long long strategyCap = 1LL << 20);

/// Largest noise the gap estimate licenses: (1 − λ*)/3 · gapLowerBound.
Rat defaultNoiseEpsilon(const Game& g);

/// Adds an independent draw k/2^32·ε, k ∈ {−2^32+1,…,2^32−1}, to every edge
/// weight; deterministic per (seed, edge id). Requires
/// 0 < ε <= (1 − λ*)/3 · gapLowerBound so co-optimal strategies transfer back.
Game perturbWeights(const Game& g, const Rat& epsilon, std::uint64_t seed);

/// α_e = 1 + k/2^32, k ∈ {1,…,2^32−1}: independent draws from (1,2),
/// deterministic per (seed, edge id).
OffsetFactors sampleOffsetFactors(const Game& g, std::uint64_t seed);

/// Valuation of a co-optimal strategy on the ORIGINAL game; throws
/// InternalError when the result fails verifySolution (perturbation exceeded
/// the gap bound).
Valuation recoverExactSolution(const Game& original, const JointStrategy& coOptimal);

}  // namespace dpg

#endif
