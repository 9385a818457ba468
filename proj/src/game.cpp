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

#include "game.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace dpg {

Game::Game(std::vector<Owner> owners, std::vector<Edge> edges)
    : owners_(std::move(owners)), edges_(std::move(edges)), out_(owners_.size()) {
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const Edge& ed = edges_[e];
    if (ed.src < 0 || ed.src >= vertexCount() || ed.dst < 0 || ed.dst >= vertexCount())
      throw std::invalid_argument("edge " + std::to_string(e) + " endpoint out of range");
    out_[ed.src].push_back(e);
  }
}

std::vector<std::string> Game::validate() const {
  std::vector<std::string> violations;
  if (owners_.empty()) violations.push_back("game has no vertices");
  for (int v = 0; v < vertexCount(); ++v)
    if (out_[v].empty())
      violations.push_back("vertex " + std::to_string(v) + " has no outgoing edge");
  for (int e = 0; e < edgeCount(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.discount < 0 || ed.discount >= 1)
      violations.push_back("edge " + std::to_string(e) + " (" + std::to_string(ed.src) + "->" +
                           std::to_string(ed.dst) + "): discount not in [0,1)");
  }
  return violations;
}

void requireValid(const Game& g) {
  auto violations = g.validate();
  if (!violations.empty()) throw InvalidGameError(std::move(violations));
}

// --- parsing -----------------------------------------------------------------

namespace {

std::vector<std::string> splitTokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

int parseIndex(const std::string& tok, int lineNo, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineNo, std::string("malformed ") + what + " '" + tok + "'");
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw ParseError(lineNo, std::string(what) + " out of range: '" + tok + "'");
  }
}

Rat parseRatToken(const std::string& tok, int lineNo) {
  Rat r;
  std::string err;
  if (!tryParseRat(tok, r, err)) throw ParseError(lineNo, err);
  return r;
}

}  // namespace

Game parseGame(std::string_view text) {
  std::optional<int> numVertices;
  std::vector<std::optional<Owner>> owners;
  std::vector<Edge> edges;

  int lineNo = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++lineNo;

    if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = splitTokens(line);
    if (tokens.empty()) continue;

    const std::string& kind = tokens[0];
    if (kind == "dpg") {
      if (numVertices) throw ParseError(lineNo, "duplicate dpg header");
      if (tokens.size() != 2) throw ParseError(lineNo, "expected: dpg <numVertices>");
      int n = parseIndex(tokens[1], lineNo, "vertex count");
      if (n < 1) throw ParseError(lineNo, "vertex count must be >= 1");
      numVertices = n;
      owners.resize(n);
    } else if (kind == "vertex") {
      if (!numVertices) throw ParseError(lineNo, "vertex before dpg header");
      if (tokens.size() != 3) throw ParseError(lineNo, "expected: vertex <id> <MIN|MAX>");
      int id = parseIndex(tokens[1], lineNo, "vertex id");
      if (id >= *numVertices) throw ParseError(lineNo, "vertex id " + tokens[1] + " out of range");
      if (owners[id]) throw ParseError(lineNo, "duplicate vertex " + tokens[1]);
      if (tokens[2] == "MIN")
        owners[id] = Owner::Min;
      else if (tokens[2] == "MAX")
        owners[id] = Owner::Max;
      else
        throw ParseError(lineNo, "owner must be MIN or MAX, got '" + tokens[2] + "'");
    } else if (kind == "edge") {
      if (!numVertices) throw ParseError(lineNo, "edge before dpg header");
      if (tokens.size() != 5)
        throw ParseError(lineNo, "expected: edge <src> <dst> <weight> <discount>");
      Edge e;
      e.src = parseIndex(tokens[1], lineNo, "edge source");
      e.dst = parseIndex(tokens[2], lineNo, "edge target");
      if (e.src >= *numVertices || e.dst >= *numVertices)
        throw ParseError(lineNo, "edge endpoint out of range");
      e.weight = parseRatToken(tokens[3], lineNo);
      e.discount = parseRatToken(tokens[4], lineNo);
      edges.push_back(std::move(e));
    } else {
      throw ParseError(lineNo, "unknown declaration '" + kind + "'");
    }
  }

  if (!numVertices) throw ParseError(0, "missing dpg header");
  std::vector<Owner> resolved(*numVertices);
  for (int v = 0; v < *numVertices; ++v) {
    if (!owners[v]) throw ParseError(0, "vertex " + std::to_string(v) + " not declared");
    resolved[v] = *owners[v];
  }
  return Game(std::move(resolved), std::move(edges));
}

std::string serializeGame(const Game& g) {
  std::ostringstream out;
  out << "dpg " << g.vertexCount() << "\n";
  for (int v = 0; v < g.vertexCount(); ++v)
    out << "vertex " << v << " " << (g.owner(v) == Owner::Min ? "MIN" : "MAX") << "\n";
  for (int e = 0; e < g.edgeCount(); ++e) {
    const Edge& ed = g.edge(e);
    out << "edge " << ed.src << " " << ed.dst << " " << ratStr(ed.weight) << " "
        << ratStr(ed.discount) << "\n";
  }
  return out.str();
}

// --- strategies and plays ------------------------------------------------------

bool isValidStrategy(const Game& g, const JointStrategy& s) {
  if (static_cast<int>(s.edgeOf.size()) != g.vertexCount()) return false;
  for (int v = 0; v < g.vertexCount(); ++v) {
    int e = s.edgeOf[v];
    if (e < 0 || e >= g.edgeCount() || g.edge(e).src != v) return false;
  }
  return true;
}

Lasso lassoOf(const Game& g, const JointStrategy& s, int v) {
  DPG_CHECK(isValidStrategy(g, s), "lassoOf: invalid strategy");
  std::vector<int> visitedAt(g.vertexCount(), -1);
  std::vector<int> path;  // edge ids
  int cur = v;
  while (visitedAt[cur] < 0) {
    visitedAt[cur] = static_cast<int>(path.size());
    int e = s.edgeOf[cur];
    path.push_back(e);
    cur = g.edge(e).dst;
  }
  const int entry = visitedAt[cur];
  Lasso lasso;
  lasso.prefix.assign(path.begin(), path.begin() + entry);
  lasso.cycle.assign(path.begin() + entry, path.end());
  return lasso;
}

Rat lassoValue(const Game& g, const Lasso& lasso) {
  DPG_CHECK(!lasso.cycle.empty(), "lassoValue: empty cycle");
  Rat total(0);
  Rat factor(1);  // product of discounts seen so far
  for (int e : lasso.prefix) {
    total += factor * g.edge(e).weight;
    factor *= g.edge(e).discount;
  }
  Rat cycleSum(0);
  Rat cycleFactor(1);
  for (int e : lasso.cycle) {
    cycleSum += cycleFactor * g.edge(e).weight;
    cycleFactor *= g.edge(e).discount;
  }
  DPG_CHECK(cycleFactor < 1, "lassoValue: cycle discount product not < 1");
  total += factor * cycleSum / (Rat(1) - cycleFactor);
  return total;
}

Valuation jointStrategyValuation(const Game& g, const JointStrategy& s) {
  DPG_CHECK(isValidStrategy(g, s), "jointStrategyValuation: invalid strategy");
  const int n = g.vertexCount();
  RatMat a(n, RatVec(n, Rat(0)));
  RatVec b(n, Rat(0));
  for (int v = 0; v < n; ++v) {
    const Edge& e = g.edge(s.edgeOf[v]);
    a[v][v] += 1;
    a[v][e.dst] -= e.discount;
    b[v] = e.weight;
  }
  auto sol = solveLinear(std::move(a), std::move(b));
  DPG_CHECK(sol.has_value(), "strategy system singular (discount >= 1?)");
  return std::move(*sol);
}

// --- generation ---------------------------------------------------------------

Game generateRandomGame(int nVertices, int outDegree, long weightBound,
                        const std::vector<Rat>& discountPool, std::uint64_t seed) {
  if (nVertices < 1) throw std::invalid_argument("nVertices must be >= 1");
  if (outDegree < 1) throw std::invalid_argument("outDegree must be >= 1");
  if (weightBound < 0) throw std::invalid_argument("weightBound must be >= 0");
  if (discountPool.empty()) throw std::invalid_argument("discountPool must be nonempty");

  std::vector<Owner> owners(nVertices);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(nVertices) * outDegree);
  for (int v = 0; v < nVertices; ++v) {
    auto rng = streamFor(seed, kStreamGenerate, static_cast<std::uint64_t>(v));
    owners[v] = rng.below(2) == 0 ? Owner::Min : Owner::Max;
    for (int j = 0; j < outDegree; ++j) {
      Edge e;
      e.src = v;
      e.dst = static_cast<int>(rng.below(static_cast<std::uint64_t>(nVertices)));
      e.weight = ratOf(-weightBound + static_cast<long>(rng.below(2 * weightBound + 1)));
      e.discount = discountPool[rng.below(discountPool.size())];
      edges.push_back(std::move(e));
    }
  }
  return Game(std::move(owners), std::move(edges));
}

}  // namespace dpg
