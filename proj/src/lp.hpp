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

#ifndef DPG_LP_HPP
#define DPG_LP_HPP

#include <utility>
#include <vector>

#include "inequations.hpp"

namespace dpg {

// Exact linear programming over H in valuation space. The working object is
// the paper's basis: |V| tight inequations pinning a polytope corner. Pivots
// are single basis changes; Bland's rule (lowest edge id entering and
// leaving) precludes cycling under degeneracy.

/// Linear form of the biased objective f_σ: value at val is lin·val + constant.
struct LpObjective {
  RatVec lin;
  Rat constant;

  Rat at(const Valuation& val) const { return dot(lin, val) + constant; }
};

LpObjective makeObjective(const InequationSystem& system, const JointStrategy& s,
                          const OffsetFactors& factors);

enum class Phase : std::uint8_t { Phase1, Phase2 };

struct SimplexState {
  const InequationSystem* system = nullptr;
  Basis basis;
  Valuation valuation;  // = basisValuation(system, basis)
  LpObjective objective;
  Phase phase = Phase::Phase2;
};

/// Builds a phase-2 state from a basis; throws InternalError when the basis
/// is singular.
SimplexState makeState(const InequationSystem& system, Basis basis, const JointStrategy& s,
                       const OffsetFactors& factors);

struct SimplexStats {
  long pivots = 0;
  long objectiveUpdates = 0;         // mixed mode only
  bool degenerateVertexSeen = false;  // some visited valuation had > |V| tight rows
};

struct LpResult {
  Valuation valuation;
  Basis basis;
  Rat optimum;  // biased f_σ at the returned valuation
  SimplexStats stats;
};

/**
 * Minimizes the biased f_σ over the polytope of H. Phase 1 (one auxiliary
 * variable relaxing every constraint, minimized to zero) finds a first
 * feasible basis unless `warmStart` already provides one; phase 2 pivots to
 * optimality. The optimum is >= 0 — an unbounded ray would be a pivoting bug
 * and raises InternalError, as does exceeding the internal pivot cap.
 */
LpResult solveLP(const InequationSystem& system, const JointStrategy& s,
                 const OffsetFactors& factors, const Basis* warmStart = nullptr);

/**
 * Same, but after every accepted pivot the strategy is greedily re-pointed at
 * the current valuation (every vertex to its minimum-biased-offset edge) when
 * that strictly lowers the objective; `s` is updated in place. Simplex pivots
 * and objective pivots both only ever decrease the current objective value,
 * so the mix terminates.
 */
LpResult solveLPMixed(const InequationSystem& system, JointStrategy& s,
                      const OffsetFactors& factors, const Basis* warmStart = nullptr);

/**
 * Feasible valuations whose basis differs from the state's by one element:
 * for each non-basis inequation (ascending edge id) the leaving inequation is
 * found by the exact ratio test; singular or infeasible swaps are skipped.
 * At most |E| − |V| results.
 */
std::vector<std::pair<Basis, Valuation>> neighbouringBases(const SimplexState& state);

/// True iff more than |V| inequations are tight at the state's valuation —
/// evidence that the game is not sharp.
bool detectDegeneracy(const SimplexState& state);

/// First feasible basis-defined valuation of H (phase 1 only), exposed for
/// tests and the improvement driver.
std::pair<Basis, Valuation> initialFeasibleBasis(const InequationSystem& system,
                                                 SimplexStats& stats);

}  // namespace dpg

#endif
