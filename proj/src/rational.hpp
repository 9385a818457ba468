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

#ifndef DPG_RATIONAL_HPP
#define DPG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dpg {

// Exact arbitrary-precision rational. GMP keeps results of arithmetic in
// canonical form (lowest terms, positive denominator) as long as the inputs
// are canonical, so every constructor from raw parts must canonicalize.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat ratOf(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat ratOf(const mpz_class& num, const mpz_class& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Strict parser for `p` or `p/q` with integer p and positive integer q.
/// On failure fills `err` and returns false.
inline bool tryParseRat(std::string_view text, Rat& out, std::string& err) {
  auto parseInt = [&](std::string_view s, mpz_class& z) {
    if (s.empty()) return false;
    // mpz set_str accepts leading whitespace and '+'; keep it strict instead.
    size_t start = s[0] == '-' ? 1 : 0;
    if (start == s.size()) return false;
    for (size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return z.set_str(std::string(s), 10) == 0;
  };

  size_t slash = text.find('/');
  mpz_class num, den(1);
  if (!parseInt(text.substr(0, slash), num)) {
    err = "malformed rational '" + std::string(text) + "'";
    return false;
  }
  if (slash != std::string_view::npos) {
    std::string_view denom = text.substr(slash + 1);
    if (!parseInt(denom, den)) {
      err = "malformed rational '" + std::string(text) + "'";
      return false;
    }
    if (den == 0) {
      err = "zero denominator in '" + std::string(text) + "'";
      return false;
    }
    if (den < 0) {
      err = "negative denominator in '" + std::string(text) + "'";
      return false;
    }
  }
  out = ratOf(num, den);
  return true;
}

/// Canonical text form: `p` when the denominator is 1, else `p/q`.
inline std::string ratStr(const Rat& r) { return r.get_str(); }

/// Explicit fraction form `p/q`, denominator always present.
inline std::string ratStrFrac(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat ratAbs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace dpg

#endif
