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

#ifndef DPG_ORACLES_HPP
#define DPG_ORACLES_HPP

#include <string>
#include <vector>

#include "game.hpp"

namespace dpg {

// Independent ground truth: brute-force strategy enumeration (exact, desk
// scale) and value iteration (approximate, any scale). Both are kept free of
// the LP/improvement code paths they are used to check.

struct BruteForceResult {
  Valuation valuation;
  std::vector<JointStrategy> coOptimal;  // all σ with val(σ) = valuation
};

/**
 * Enumerates all joint strategies: valuation(v) = max over Max strategies of
 * the pointwise min over Min strategies, with the opposite order verified as
 * an exact determinacy check. Throws LimitError above `strategyCap`.
 */
BruteForceResult bruteForceSolve(const Game& g, long long strategyCap = 1LL << 20);

/**
 * Fixed-point iteration val ← opt_e(w_e + λ_e·val) from 0, in dyadic
 * rationals (denominators a power of two) so comparisons stay exact. The
 * working precision is chosen from the tolerance and the contraction λ* and
 * doubled if rounding ever stalls progress. Result is within `tolerance` of
 * the game valuation in sup norm.
 */
Valuation valueIteration(const Game& g, const Rat& tolerance);

enum class OracleMethod : std::uint8_t { BruteForce, ValueIteration };

struct OracleReport {
  OracleMethod method = OracleMethod::BruteForce;
  bool pass = false;
  std::string witness;       // offending vertex and both values on FAIL
  Valuation oracleValuation;
};

/// Checks a solver valuation against the brute-force oracle when the game is
/// under `strategyCap` (exact equality), else against value iteration
/// (sup-norm within `tolerance`).
OracleReport crossCheck(const Game& g, const Valuation& solved,
                        long long strategyCap = 1LL << 20, const Rat& tolerance = Rat(1, 1000000));

}  // namespace dpg

#endif
