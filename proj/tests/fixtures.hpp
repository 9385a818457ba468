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

#ifndef DPG_TESTS_FIXTURES_HPP
#define DPG_TESTS_FIXTURES_HPP

#include <vector>

#include "game.hpp"
#include "rng.hpp"

namespace dpg::tests {

// The two-vertex game used throughout: vertex 0 ("a") is the minimiser with a
// weight-1 self-loop, vertex 1 ("b") the maximiser with a weight-0 self-loop
// and a weight-0 move to a. Edge ids: 0 = a→a, 1 = b→b, 2 = b→a.
inline constexpr int kEdgeAA = 0;
inline constexpr int kEdgeBB = 1;
inline constexpr int kEdgeBA = 2;

/// Uniform discount 1/2. Valuation {a: 2, b: 1}, co-optimal strategy a→a, b→a.
inline Game makeG1() {
  return Game({Owner::Min, Owner::Max},
              {{0, 0, ratOf(1), ratOf(1, 2)},
               {1, 1, ratOf(0), ratOf(1, 2)},
               {1, 0, ratOf(0), ratOf(1, 2)}});
}

/// Per-edge discounts 2/3, 1/3, 2/3. Valuation {a: 3, b: 2}.
inline Game makeG2() {
  return Game({Owner::Min, Owner::Max},
              {{0, 0, ratOf(1), ratOf(2, 3)},
               {1, 1, ratOf(0), ratOf(1, 3)},
               {1, 0, ratOf(0), ratOf(2, 3)}});
}

inline const char* kG1Text =
    "dpg 2\n"
    "vertex 0 MIN\n"
    "vertex 1 MAX\n"
    "edge 0 0 1 1/2\n"
    "edge 1 1 0 1/2\n"
    "edge 1 0 0 1/2\n";

inline JointStrategy strat(std::vector<int> edges) { return JointStrategy{std::move(edges)}; }

inline Valuation vals(std::vector<long> xs) {
  Valuation v;
  v.reserve(xs.size());
  for (long x : xs) v.push_back(ratOf(x));
  return v;
}

inline std::vector<Rat> defaultDiscountPool() {
  return {ratOf(1, 2), ratOf(2, 3), ratOf(3, 4)};
}

/// The random-game family shared by property tests and the acceptance sweeps:
/// up to `maxVertices` vertices, out-degree up to 3, integer weights |w| <= 4,
/// discounts from {1/2, 2/3, 3/4}. Deterministic per index.
inline Game sweepGame(std::uint64_t index, int maxVertices, std::uint64_t salt = 0x5EED) {
  auto rng = streamFor(salt, 0xD1CE, index);
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxVertices)));
  int degree = 1 + static_cast<int>(rng.below(3));
  return generateRandomGame(n, degree, 4, defaultDiscountPool(), rng.next());
}

}  // namespace dpg::tests

#endif
