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

#ifndef DPG_RNG_HPP
#define DPG_RNG_HPP

#include <cstdint>

namespace dpg {

// splitmix64. Chosen over std::mt19937 + distributions because the output
// must be bit-identical across platforms and standard library versions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound). Modulo bias is < 2^-31 for the bounds
  /// used here and irrelevant for correctness; determinism is what matters.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Stream purposes. Draws are keyed by (seed, purpose, index) so they are
// independent of evaluation order.
inline constexpr std::uint64_t kStreamGenerate = 0xA11CE5ULL;
inline constexpr std::uint64_t kStreamAlpha = 0xA1FA5ULL;
inline constexpr std::uint64_t kStreamNoise = 0x905E5ULL;
inline constexpr std::uint64_t kStreamInitStrategy = 0x51615ULL;

inline std::uint64_t mixStream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
  SplitMix64 g(seed);
  std::uint64_t s = g.next();
  s ^= purpose + 0x9e3779b97f4a7c15ULL + (s << 6) + (s >> 2);
  SplitMix64 h(s);
  std::uint64_t t = h.next();
  t ^= index + 0x9e3779b97f4a7c15ULL + (t << 6) + (t >> 2);
  return SplitMix64(t).next();
}

inline SplitMix64 streamFor(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
  return SplitMix64(mixStream(seed, purpose, index));
}

}  // namespace dpg

#endif
