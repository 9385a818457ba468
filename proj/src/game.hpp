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

#ifndef DPG_GAME_HPP
#define DPG_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace dpg {

enum class Owner : std::uint8_t { Min, Max };

struct Edge {
  int src = 0;
  int dst = 0;
  Rat weight;
  Rat discount;

  bool operator==(const Edge&) const = default;
};

/**
 * A discounted payoff game: a directed graph without sinks, each vertex owned
 * by Min or Max, each edge carrying a rational weight and a rational discount
 * factor in [0,1).
 *
 * Vertex and edge ids are dense 0-based indices; edge ids follow construction
 * order. Self-loops and parallel edges are allowed. Instances are immutable
 * after construction and safe to share across threads.
 *
 * Construction only requires edge endpoints to be in range; all game
 * invariants (no sinks, discount range) are reported by validate() so that
 * malformed inputs can be diagnosed rather than rejected wholesale.
 */
class Game {
 public:
  Game(std::vector<Owner> owners, std::vector<Edge> edges);

  int vertexCount() const { return static_cast<int>(owners_.size()); }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  Owner owner(int v) const { return owners_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const int> outEdges(int v) const { return out_[v]; }

  /// Empty result means every invariant holds; otherwise one message per
  /// violation, naming the offending vertex or edge.
  std::vector<std::string> validate() const;

  bool operator==(const Game& other) const {
    return owners_ == other.owners_ && edges_ == other.edges_;
  }

 private:
  std::vector<Owner> owners_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;  // per-vertex out-edge ids, ascending
};

/// Throws InvalidGameError when validate() is non-empty.
void requireValid(const Game& g);

// --- .dpg text format ------------------------------------------------------
//
//   dpg <numVertices>
//   vertex <id> <MIN|MAX>
//   edge <src> <dst> <weight> <discount>
//
// One declaration per line; '#' starts a comment; rationals are `p/q` or `p`.
// Edge ids are assigned in file order.

/// Throws ParseError (with 1-based line number) on malformed input.
Game parseGame(std::string_view text);

/// Canonical form: header, vertices by id, edges by id, rationals in lowest
/// terms (`p` when the denominator is 1). parse∘serialize is the identity.
std::string serializeGame(const Game& g);

// --- strategies and plays ---------------------------------------------------

/**
 * One successor choice per vertex for BOTH players, stored as the chosen
 * out-edge id (parallel edges would make a vertex→vertex map ambiguous).
 */
struct JointStrategy {
  std::vector<int> edgeOf;  // vertex id -> edge id

  bool operator==(const JointStrategy&) const = default;
};

bool isValidStrategy(const Game& g, const JointStrategy& s);

/// The play induced by a joint strategy from a vertex: a finite prefix
/// followed by a cycle, each a list of edge ids. The cycle is nonempty.
struct Lasso {
  std::vector<int> prefix;
  std::vector<int> cycle;
};

Lasso lassoOf(const Game& g, const JointStrategy& s, int v);

/// Exact value of the infinite discounted sum along the lasso: a prefix edge
/// contributes (prod of discounts before it)·w, a cycle edge the analogous
/// term divided by 1 − (product of cycle discounts).
Rat lassoValue(const Game& g, const Lasso& lasso);

using Valuation = RatVec;  // vertex id -> exact value

/// Unique solution of val(v) = w_e + λ_e·val(dst) over the strategy edges
/// (unique because all discounts are < 1). Computed by solving the linear
/// system, independently of lassoValue.
Valuation jointStrategyValuation(const Game& g, const JointStrategy& s);

// --- generation --------------------------------------------------------------

/// Deterministic per seed: owners uniform, `outDegree` edges per vertex with
/// uniform targets, integer weights in [−weightBound, weightBound], discounts
/// drawn from `discountPool`.
Game generateRandomGame(int nVertices, int outDegree, long weightBound,
                        const std::vector<Rat>& discountPool, std::uint64_t seed);

}  // namespace dpg

#endif
