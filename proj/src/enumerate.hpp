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

#ifndef DPG_ENUMERATE_HPP
#define DPG_ENUMERATE_HPP

#include "errors.hpp"
#include "game.hpp"

namespace dpg {

/// Number of joint strategies (product of out-degrees), or -1 when it
/// exceeds `cap`.
inline long long jointStrategyCount(const Game& g, long long cap) {
  long long count = 1;
  for (int v = 0; v < g.vertexCount(); ++v) {
    count *= static_cast<long long>(g.outEdges(v).size());
    if (count > cap || count == 0) return -1;
  }
  return count;
}

/// Calls fn for every joint strategy, odometer order (lowest edge ids first).
/// Throws LimitError when the strategy count exceeds `cap`.
template <typename Fn>
void forEachJointStrategy(const Game& g, long long cap, Fn&& fn) {
  if (jointStrategyCount(g, cap) < 0)
    throw LimitError("joint strategy count exceeds cap " + std::to_string(cap));
  const int n = g.vertexCount();
  std::vector<int> pick(n, 0);  // index into outEdges(v)
  JointStrategy s;
  s.edgeOf.assign(n, 0);
  while (true) {
    for (int v = 0; v < n; ++v) s.edgeOf[v] = g.outEdges(v)[pick[v]];
    fn(static_cast<const JointStrategy&>(s));
    int v = 0;
    while (v < n) {
      if (++pick[v] < static_cast<int>(g.outEdges(v).size())) break;
      pick[v] = 0;
      ++v;
    }
    if (v == n) return;
  }
}

}  // namespace dpg

#endif
