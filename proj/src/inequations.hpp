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

#ifndef DPG_INEQUATIONS_HPP
#define DPG_INEQUATIONS_HPP

#include <optional>
#include <vector>

#include "game.hpp"
#include "linalg.hpp"

namespace dpg {

enum class Direction : std::uint8_t {
  Geq,  // maximiser source: val(src) >= w + λ·val(dst)
  Leq,  // minimiser source: val(src) <= w + λ·val(dst)
};

/**
 * One linear inequation per edge. Both directions are normalized to
 * "offset >= 0" where offset(val) = coeffs·val + constant: for a maximiser
 * source the offset is val(src) − w − λ·val(dst), for a minimiser source it
 * is w + λ·val(dst) − val(src). The slack of a row IS the offset of its edge.
 */
struct Inequation {
  int edge = 0;
  Direction dir = Direction::Geq;
  RatVec coeffs;
  Rat constant;

  Rat offsetAt(const Valuation& val) const { return dot(coeffs, val) + constant; }
};

/// The fixed system H: one inequation per edge, indexed by edge id. Never
/// modified after construction.
class InequationSystem {
 public:
  explicit InequationSystem(const Game& g);

  const Game& game() const { return *game_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const Inequation& row(int e) const { return rows_[e]; }

  bool feasible(const Valuation& val) const;
  std::vector<int> tightRows(const Valuation& val) const;

 private:
  const Game* game_;
  std::vector<Inequation> rows_;
};

InequationSystem buildInequations(const Game& g);

/// Signed slack of edge e at val: nonnegative on feasible valuations, may be
/// negative elsewhere (gap computation relies on that).
Rat offset(const Game& g, const Valuation& val, int e);

/// Positive per-edge multipliers for the biased objective.
struct OffsetFactors {
  RatVec alpha;  // edge id -> factor, all > 0
};

OffsetFactors unitFactors(const Game& g);

Rat biasedOffset(const Game& g, const Valuation& val, int e, const OffsetFactors& factors);

/// f_σ(val) = Σ_v α·offset(val, (v, σ(v))). All-ones α gives the plain form.
Rat objectiveValue(const Game& g, const Valuation& val, const JointStrategy& s,
                   const OffsetFactors& factors);

/// |V| edge ids whose inequations, imposed as equations, pin a valuation.
/// Kept sorted ascending.
using Basis = std::vector<int>;

/// Unique solution of the basis equations, or nullopt when the system is
/// rank-deficient (b is not a valid basis).
std::optional<Valuation> basisValuation(const InequationSystem& system, const Basis& basis);

bool isFeasible(const InequationSystem& system, const Valuation& val);

/// E_val: edges whose inequation is sharp (offset exactly 0) at val.
std::vector<int> sharpEdges(const Game& g, const Valuation& val);

/// When every vertex has a sharp outgoing edge, the strategy picking the
/// lowest-id sharp edge per vertex; otherwise nullopt.
std::optional<JointStrategy> strategiesDefinedBy(const Game& g, const Valuation& val);

/// True iff val is feasible and defines strategies for both players — by the
/// solution characterization this holds for exactly one valuation.
bool verifySolution(const Game& g, const Valuation& val);

}  // namespace dpg

#endif
