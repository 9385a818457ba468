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

#include "linalg.hpp"

#include "errors.hpp"

namespace dpg {

Rat dot(const RatVec& a, const RatVec& b) {
  DPG_CHECK(a.size() == b.size(), "dot: size mismatch");
  Rat acc(0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  return acc;
}

std::optional<RatVec> solveLinear(RatMat a, RatVec b) {
  const size_t n = a.size();
  DPG_CHECK(b.size() == n, "solveLinear: rhs size mismatch");
  for (auto& row : a) DPG_CHECK(row.size() == n, "solveLinear: matrix not square");

  // Gaussian elimination, first-nonzero pivot. Exact arithmetic needs no
  // magnitude-based pivoting; a fixed rule keeps results deterministic.
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rat inv = Rat(1) / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

namespace {

// Shared elimination: reduces `rows` in order, recording which rows add rank
// and which columns end up as pivots.
struct Elimination {
  RatMat reduced;                // reduced independent rows
  std::vector<int> pivotCol;     // pivot column of reduced[i]
  std::vector<int> rowIndex;     // original index of reduced[i]
  std::vector<bool> isPivotCol;

  Elimination(const RatMat& rows, int cols) : isPivotCol(cols, false) {
    for (size_t r = 0; r < rows.size(); ++r) {
      RatVec v = rows[r];
      for (size_t k = 0; k < reduced.size(); ++k) {
        const Rat& f = v[pivotCol[k]];
        if (f == 0) continue;
        const Rat factor = f;  // reduced rows have pivot 1
        for (int j = 0; j < cols; ++j)
          if (reduced[k][j] != 0) v[j] -= factor * reduced[k][j];
      }
      int pc = -1;
      for (int j = 0; j < cols; ++j)
        if (v[j] != 0) {
          pc = j;
          break;
        }
      if (pc < 0) continue;  // dependent row
      const Rat inv = Rat(1) / v[pc];
      for (int j = 0; j < cols; ++j) v[j] *= inv;
      // Back-substitute into existing rows to keep them reduced.
      for (size_t k = 0; k < reduced.size(); ++k) {
        const Rat f = reduced[k][pc];
        if (f == 0) continue;
        for (int j = 0; j < cols; ++j)
          if (v[j] != 0) reduced[k][j] -= f * v[j];
      }
      reduced.push_back(std::move(v));
      pivotCol.push_back(pc);
      rowIndex.push_back(static_cast<int>(r));
      isPivotCol[pc] = true;
    }
  }
};

}  // namespace

std::vector<int> independentRows(const RatMat& rows, int cols) {
  return Elimination(rows, cols).rowIndex;
}

std::optional<RatVec> nullVector(const RatMat& rows, int cols) {
  Elimination e(rows, cols);
  int freeCol = -1;
  for (int j = 0; j < cols; ++j)
    if (!e.isPivotCol[j]) {
      freeCol = j;
      break;
    }
  if (freeCol < 0) return std::nullopt;
  RatVec s(cols, Rat(0));
  s[freeCol] = 1;
  // Rows are fully reduced, so each pivot variable reads off directly.
  for (size_t k = 0; k < e.reduced.size(); ++k) s[e.pivotCol[k]] = -e.reduced[k][freeCol];
  return s;
}

}  // namespace dpg
