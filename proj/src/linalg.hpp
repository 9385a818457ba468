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

#ifndef DPG_LINALG_HPP
#define DPG_LINALG_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace dpg {

using RatMat = std::vector<RatVec>;

/// Solves the square system A x = b exactly. Returns nullopt when A is
/// singular (rank-deficient or inconsistent — either way there is no unique
/// solution).
std::optional<RatVec> solveLinear(RatMat a, RatVec b);

/// Exact dot product.
Rat dot(const RatVec& a, const RatVec& b);

/// Indices (in input order) of a maximal linearly independent subset of rows.
std::vector<int> independentRows(const RatMat& rows, int cols);

/// A nonzero vector s with rows[i]·s = 0 for every row, or nullopt when the
/// rows have full column rank.
std::optional<RatVec> nullVector(const RatMat& rows, int cols);

}  // namespace dpg

#endif
