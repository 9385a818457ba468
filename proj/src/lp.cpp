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

#include "lp.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace dpg {

LpObjective makeObjective(const InequationSystem& system, const JointStrategy& s,
                          const OffsetFactors& factors) {
  const int n = system.game().vertexCount();
  LpObjective obj;
  obj.lin.assign(n, Rat(0));
  obj.constant = 0;
  for (int v = 0; v < n; ++v) {
    const Inequation& row = system.row(s.edgeOf[v]);
    const Rat& a = factors.alpha[row.edge];
    for (int i = 0; i < n; ++i)
      if (row.coeffs[i] != 0) obj.lin[i] += a * row.coeffs[i];
    obj.constant += a * row.constant;
  }
  return obj;
}

SimplexState makeState(const InequationSystem& system, Basis basis, const JointStrategy& s,
                       const OffsetFactors& factors) {
  SimplexState state;
  state.system = &system;
  auto val = basisValuation(system, basis);
  DPG_CHECK(val.has_value(), "makeState: singular basis");
  state.basis = std::move(basis);
  state.valuation = std::move(*val);
  state.objective = makeObjective(system, s, factors);
  state.phase = Phase::Phase2;
  return state;
}

namespace {

// Active-set simplex over "rows[i]·x >= rhs[i]", minimizing obj·x. The basis
// holds `dim` row indices whose matrix is nonsingular; x is their common
// solution. Used for both phase 1 (dim = |V|+1, relaxed rows) and phase 2
// (dim = |V|, rows of H, so a row's slack is its edge's offset).
struct ActiveSet {
  const RatMat& rows;
  const RatVec& rhs;
  RatVec obj;
  int dim;
  RatVec x;
  std::vector<int> basis;  // sorted ascending
  SimplexStats& stats;
  long pivotCap;

  Rat slackOf(int i) const { return dot(rows[i], x) - rhs[i]; }

  RatMat basisMatrix() const {
    RatMat m;
    m.reserve(basis.size());
    for (int i : basis) m.push_back(rows[i]);
    return m;
  }

  void noteVertex() {
    int tight = 0;
    for (size_t i = 0; i < rows.size(); ++i)
      if (slackOf(static_cast<int>(i)) == 0) ++tight;
    if (tight > dim) stats.degenerateVertexSeen = true;
  }

  void checkFeasible() const {
    for (size_t i = 0; i < rows.size(); ++i)
      DPG_CHECK(slackOf(static_cast<int>(i)) >= 0, "pivot broke feasibility");
  }

  // Pushes a feasible point to a vertex along null directions of the tight
  // rows, never increasing the objective. Terminates: every round adds an
  // independent row to the tight set.
  void purifyToVertex() {
    for (int round = 0; round <= dim + 1; ++round) {
      std::vector<int> tightIds;
      RatMat tight;
      for (size_t i = 0; i < rows.size(); ++i)
        if (slackOf(static_cast<int>(i)) == 0) {
          tightIds.push_back(static_cast<int>(i));
          tight.push_back(rows[i]);
        }
      auto ind = independentRows(tight, dim);
      if (static_cast<int>(ind.size()) == dim) {
        basis.clear();
        for (int k : ind) basis.push_back(tightIds[k]);
        std::sort(basis.begin(), basis.end());
        noteVertex();
        return;
      }
      auto dir = nullVector(tight, dim);
      DPG_CHECK(dir.has_value(), "purify: rank mismatch");
      RatVec s = std::move(*dir);
      if (dot(obj, s) > 0)
        for (auto& c : s) c = -c;

      auto ratio = [&](const RatVec& d) -> std::pair<int, Rat> {
        int blocker = -1;
        Rat best(0);
        for (size_t i = 0; i < rows.size(); ++i) {
          Rat slack = slackOf(static_cast<int>(i));
          if (slack == 0) continue;
          Rat change = dot(rows[i], d);
          if (change >= 0) continue;
          Rat tau = slack / -change;
          if (blocker < 0 || tau < best) {
            blocker = static_cast<int>(i);
            best = tau;
          }
        }
        return {blocker, best};
      };

      auto [blocker, tau] = ratio(s);
      if (blocker < 0) {
        DPG_CHECK(dot(obj, s) == 0, "purify: unbounded descent direction");
        for (auto& c : s) c = -c;
        std::tie(blocker, tau) = ratio(s);
        DPG_CHECK(blocker >= 0, "purify: direction unconstrained both ways");
      }
      for (int i = 0; i < dim; ++i) x[i] += tau * s[i];
    }
    throw InternalError("purify did not reach a vertex");
  }

  // Bland pivoting to optimality. afterPivot may swap the objective (mixed
  // mode); it must only ever lower the current objective value.
  void runSimplex(const std::function<bool()>& afterPivot) {
    for (long iter = 0; iter < pivotCap; ++iter) {
      // Multipliers y with sum_k y_k·rows[basis[k]] = obj. All >= 0 means no
      // entering constraint has a negative reduced cost: optimal.
      RatMat transposed(dim, RatVec(dim));
      for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i) transposed[i][k] = rows[basis[k]][i];
      auto y = solveLinear(std::move(transposed), obj);
      DPG_CHECK(y.has_value(), "basis matrix singular");

      int leavePos = -1;
      for (int k = 0; k < dim; ++k)
        if ((*y)[k] < 0) {
          leavePos = k;  // basis sorted: first negative multiplier = lowest id
          break;
        }
      if (leavePos < 0) return;

      RatVec unit(dim, Rat(0));
      unit[leavePos] = 1;
      auto dir = solveLinear(basisMatrix(), std::move(unit));
      DPG_CHECK(dir.has_value(), "basis matrix singular");
      const RatVec& s = *dir;

      int enter = -1;
      Rat bestTau(0);
      for (size_t i = 0; i < rows.size(); ++i) {
        if (std::binary_search(basis.begin(), basis.end(), static_cast<int>(i))) continue;
        Rat change = dot(rows[i], s);
        if (change >= 0) continue;
        Rat tau = slackOf(static_cast<int>(i)) / -change;
        if (enter < 0 || tau < bestTau) {
          enter = static_cast<int>(i);
          bestTau = tau;
        }
      }
      DPG_CHECK(enter >= 0, "LP unbounded below — objective nonnegativity violated");

      for (int i = 0; i < dim; ++i) x[i] += bestTau * s[i];
      basis.erase(std::find(basis.begin(), basis.end(), basis[leavePos]));
      basis.insert(std::upper_bound(basis.begin(), basis.end(), enter), enter);
      ++stats.pivots;
      checkFeasible();
      noteVertex();
      if (afterPivot) afterPivot();
    }
    throw InternalError("LP pivot cap exceeded — pivoting bug");
  }
};

long pivotCapFor(int m, int n) { return std::max(256L, 64L * m * n); }

}  // namespace

std::pair<Basis, Valuation> initialFeasibleBasis(const InequationSystem& system,
                                                 SimplexStats& stats) {
  const int n = system.game().vertexCount();
  const int m = system.size();
  const int dim = n + 1;  // valuation variables plus the relaxation t

  RatMat rows;
  RatVec rhs;
  rows.reserve(m + 1);
  rhs.reserve(m + 1);
  for (int e = 0; e < m; ++e) {
    RatVec row = system.row(e).coeffs;
    row.push_back(Rat(1));
    rows.push_back(std::move(row));
    rhs.push_back(-system.row(e).constant);
  }
  RatVec tRow(dim, Rat(0));
  tRow[n] = 1;
  rows.push_back(std::move(tRow));
  rhs.push_back(Rat(0));

  RatVec obj(dim, Rat(0));
  obj[n] = 1;

  // Start at val ≡ 0 with t equal to the largest violation.
  RatVec x0(dim, Rat(0));
  for (int e = 0; e < m; ++e)
    if (rhs[e] > x0[n]) x0[n] = rhs[e];

  SimplexStats phase1Stats;
  ActiveSet as{rows, rhs, std::move(obj), dim, std::move(x0), {}, phase1Stats,
               pivotCapFor(m + 1, dim)};
  as.purifyToVertex();
  as.runSimplex(nullptr);
  stats.pivots += phase1Stats.pivots;
  DPG_CHECK(as.x[n] == 0, "inequation system infeasible — invalid game?");

  // Project out t: tight rows of H at the valuation part give the basis.
  Valuation val(as.x.begin(), as.x.begin() + n);
  std::vector<int> tightIds = system.tightRows(val);
  RatMat tight;
  tight.reserve(tightIds.size());
  for (int e : tightIds) tight.push_back(system.row(e).coeffs);
  auto ind = independentRows(tight, n);
  DPG_CHECK(static_cast<int>(ind.size()) == n, "phase 1 ended off-vertex");
  Basis basis;
  for (int k = 0; k < n; ++k) basis.push_back(tightIds[ind[k]]);
  std::sort(basis.begin(), basis.end());
  if (static_cast<int>(tightIds.size()) > n) stats.degenerateVertexSeen = true;
  return {std::move(basis), std::move(val)};
}

namespace {

LpResult solveImpl(const InequationSystem& system, JointStrategy& s, const OffsetFactors& factors,
                   const Basis* warmStart, bool mixed) {
  const int n = system.game().vertexCount();
  const int m = system.size();
  SimplexStats stats;

  Basis basis;
  Valuation start;
  bool haveStart = false;
  if (warmStart && static_cast<int>(warmStart->size()) == n) {
    if (auto val = basisValuation(system, *warmStart); val && system.feasible(*val)) {
      basis = *warmStart;
      start = std::move(*val);
      haveStart = true;
    }
  }
  if (!haveStart) std::tie(basis, start) = initialFeasibleBasis(system, stats);

  RatMat rows;
  RatVec rhs;
  rows.reserve(m);
  rhs.reserve(m);
  for (int e = 0; e < m; ++e) {
    rows.push_back(system.row(e).coeffs);
    rhs.push_back(-system.row(e).constant);
  }

  LpObjective obj = makeObjective(system, s, factors);
  ActiveSet as{rows, rhs, obj.lin, n, std::move(start), std::move(basis), stats,
               pivotCapFor(m, n)};
  as.noteVertex();

  std::function<bool()> afterPivot;
  if (mixed) {
    afterPivot = [&]() {
      // Objective pivot: re-point every vertex at its cheapest biased offset
      // (slack == offset for rows of H), keeping the current edge on ties.
      JointStrategy next = s;
      bool improved = false;
      for (int v = 0; v < n; ++v) {
        Rat best = factors.alpha[s.edgeOf[v]] * as.slackOf(s.edgeOf[v]);
        for (int e : system.game().outEdges(v)) {
          Rat candidate = factors.alpha[e] * as.slackOf(e);
          if (candidate < best) {
            best = candidate;
            next.edgeOf[v] = e;
            improved = true;
          }
        }
      }
      if (!improved) return false;
      s = std::move(next);
      obj = makeObjective(system, s, factors);
      as.obj = obj.lin;
      ++stats.objectiveUpdates;
      return true;
    };
  }
  as.runSimplex(afterPivot);

  LpResult result;
  result.optimum = obj.at(as.x);
  DPG_CHECK(result.optimum >= 0, "negative objective optimum — offsets inconsistent");
  result.valuation = std::move(as.x);
  result.basis = std::move(as.basis);
  result.stats = stats;
  return result;
}

}  // namespace

LpResult solveLP(const InequationSystem& system, const JointStrategy& s,
                 const OffsetFactors& factors, const Basis* warmStart) {
  JointStrategy copy = s;
  return solveImpl(system, copy, factors, warmStart, false);
}

LpResult solveLPMixed(const InequationSystem& system, JointStrategy& s,
                      const OffsetFactors& factors, const Basis* warmStart) {
  return solveImpl(system, s, factors, warmStart, true);
}

std::vector<std::pair<Basis, Valuation>> neighbouringBases(const SimplexState& state) {
  const InequationSystem& system = *state.system;
  const int n = system.game().vertexCount();
  const int m = system.size();

  // Edge directions of the polytope at this vertex: relaxing basis position k
  // while keeping the other basis rows tight.
  RatMat basisMat;
  for (int e : state.basis) basisMat.push_back(system.row(e).coeffs);
  std::vector<RatVec> directions(n);
  for (int k = 0; k < n; ++k) {
    RatVec unit(n, Rat(0));
    unit[k] = 1;
    auto dir = solveLinear(basisMat, std::move(unit));
    DPG_CHECK(dir.has_value(), "neighbouringBases: singular basis");
    directions[k] = std::move(*dir);
  }

  std::vector<std::pair<Basis, Valuation>> result;
  for (int e = 0; e < m; ++e) {
    if (std::binary_search(state.basis.begin(), state.basis.end(), e)) continue;
    const Rat slack = system.row(e).offsetAt(state.valuation);
    for (int k = 0; k < n; ++k) {
      Rat change = dot(system.row(e).coeffs, directions[k]);
      if (change >= 0) continue;  // e never becomes tight along this edge
      Rat tau = slack / -change;
      Valuation candidate = state.valuation;
      for (int i = 0; i < n; ++i) candidate[i] += tau * directions[k][i];
      if (!system.feasible(candidate)) continue;  // e lost the ratio test
      Basis basis = state.basis;
      basis.erase(std::find(basis.begin(), basis.end(), state.basis[k]));
      basis.insert(std::upper_bound(basis.begin(), basis.end(), e), e);
      result.emplace_back(std::move(basis), std::move(candidate));
      break;
    }
  }
  return result;
}

bool detectDegeneracy(const SimplexState& state) {
  return static_cast<int>(state.system->tightRows(state.valuation).size()) >
         state.system->game().vertexCount();
}

}  // namespace dpg
