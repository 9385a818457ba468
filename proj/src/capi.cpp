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

#include "dpg/dpg.h"

#include <cstring>
#include <sstream>

#include "errors.hpp"
#include "oracles.hpp"
#include "solver.hpp"

// Opaque handle definitions. The C structs wrap the C++ values; exceptions
// are caught at the boundary and mapped to status codes plus a thread-local
// message.

struct dpg_game {
  dpg::Game game;
};

struct dpg_valuation {
  dpg::Valuation values;
};

struct dpg_solution {
  dpg::Solution solution;
  std::vector<int> successors;  // strategy targets, resolved against the game at solve time
};

namespace {

thread_local std::string g_last_error = "no error";

char* dupString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
dpg_status guard(Fn&& fn) {
  try {
    return fn();
  } catch (const dpg::ParseError& e) {
    g_last_error = e.what();
    return DPG_ERR_PARSE;
  } catch (const dpg::InvalidGameError& e) {
    g_last_error = e.what();
    return DPG_ERR_INVALID_GAME;
  } catch (const dpg::LimitError& e) {
    g_last_error = e.trace().empty() ? std::string(e.what())
                                     : std::string(e.what()) + "\n" + e.trace();
    return DPG_ERR_LIMIT;
  } catch (const dpg::InternalError& e) {
    g_last_error = e.what();
    return DPG_ERR_INTERNAL;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return DPG_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return DPG_ERR_INTERNAL;
  }
}

bool vertexInRange(const dpg::Game& g, int v) { return v >= 0 && v < g.vertexCount(); }

}  // namespace

extern "C" {

const char* dpg_last_error(void) { return g_last_error.c_str(); }

void dpg_string_free(char* s) { std::free(s); }

dpg_status dpg_game_parse(const char* text, dpg_game** out) {
  if (!text || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    *out = new dpg_game{dpg::parseGame(text)};
    return DPG_OK;
  });
}

dpg_status dpg_game_generate(int vertices, int out_degree, long weight_bound,
                             const char* discount_pool, uint64_t seed, dpg_game** out) {
  if (!discount_pool || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    std::vector<dpg::Rat> pool;
    std::stringstream in(discount_pool);
    std::string item;
    while (std::getline(in, item, ',')) {
      dpg::Rat r;
      std::string err;
      if (!dpg::tryParseRat(item, r, err)) throw std::invalid_argument(err);
      if (r < 0 || r >= 1) throw std::invalid_argument("discount not in [0,1): " + item);
      pool.push_back(std::move(r));
    }
    *out = new dpg_game{dpg::generateRandomGame(vertices, out_degree, weight_bound, pool, seed)};
    return DPG_OK;
  });
}

void dpg_game_free(dpg_game* g) { delete g; }

char* dpg_game_serialize(const dpg_game* g) {
  return g ? dupString(dpg::serializeGame(g->game)) : nullptr;
}

char* dpg_game_validate(const dpg_game* g) {
  if (!g) return dupString("null game");
  auto violations = g->game.validate();
  if (violations.empty()) return nullptr;
  std::string joined;
  for (const auto& v : violations) {
    if (!joined.empty()) joined += "\n";
    joined += v;
  }
  return dupString(joined);
}

int dpg_game_vertex_count(const dpg_game* g) { return g ? g->game.vertexCount() : 0; }

int dpg_game_edge_count(const dpg_game* g) { return g ? g->game.edgeCount() : 0; }

int dpg_game_vertex_owner(const dpg_game* g, int vertex) {
  if (!g || !vertexInRange(g->game, vertex)) return -1;
  return g->game.owner(vertex) == dpg::Owner::Max ? 1 : 0;
}

dpg_status dpg_valuation_parse(const dpg_game* g, const char* text, dpg_valuation** out) {
  if (!g || !text || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    const int n = g->game.vertexCount();
    std::vector<bool> seen(n, false);
    dpg::Valuation values(n, dpg::Rat(0));
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
      ++lineNo;
      if (size_t hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string idTok, valTok, extra;
      if (!(ls >> idTok)) continue;
      if (!(ls >> valTok) || (ls >> extra))
        throw dpg::ParseError(lineNo, "expected: <vertex-id> <rational>");
      int id;
      try {
        id = std::stoi(idTok);
      } catch (const std::exception&) {
        throw dpg::ParseError(lineNo, "malformed vertex id '" + idTok + "'");
      }
      if (id < 0 || id >= n) throw dpg::ParseError(lineNo, "vertex id out of range");
      if (seen[id]) throw dpg::ParseError(lineNo, "duplicate vertex " + idTok);
      std::string err;
      if (!dpg::tryParseRat(valTok, values[id], err)) throw dpg::ParseError(lineNo, err);
      seen[id] = true;
    }
    for (int v = 0; v < n; ++v)
      if (!seen[v]) throw dpg::ParseError(0, "missing value for vertex " + std::to_string(v));
    *out = new dpg_valuation{std::move(values)};
    return DPG_OK;
  });
}

void dpg_valuation_free(dpg_valuation* v) { delete v; }

char* dpg_valuation_get(const dpg_valuation* v, int vertex) {
  if (!v || vertex < 0 || vertex >= static_cast<int>(v->values.size())) return nullptr;
  return dupString(dpg::ratStrFrac(v->values[vertex]));
}

dpg_status dpg_verify_valuation(const dpg_game* g, const dpg_valuation* v, char** report) {
  if (!g || !v || !report) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    const dpg::Game& game = g->game;
    if (static_cast<int>(v->values.size()) != game.vertexCount())
      throw std::invalid_argument("valuation size mismatch");
    dpg::requireValid(game);
    // First violated inequation, if any.
    for (int e = 0; e < game.edgeCount(); ++e) {
      if (dpg::offset(game, v->values, e) < 0) {
        const dpg::Edge& ed = game.edge(e);
        *report = dupString("inequation for edge " + std::to_string(e) + " (" +
                            std::to_string(ed.src) + "->" + std::to_string(ed.dst) +
                            ") violated: offset " +
                            dpg::ratStr(dpg::offset(game, v->values, e)));
        return DPG_ERR_VERIFY;
      }
    }
    auto defined = dpg::strategiesDefinedBy(game, v->values);
    if (!defined) {
      for (int vert = 0; vert < game.vertexCount(); ++vert) {
        bool sharp = false;
        for (int e : game.outEdges(vert))
          if (dpg::offset(game, v->values, e) == 0) sharp = true;
        if (!sharp) {
          *report =
              dupString("vertex " + std::to_string(vert) + " has no sharp outgoing edge");
          return DPG_ERR_VERIFY;
        }
      }
      throw dpg::InternalError("strategiesDefinedBy inconsistent with sharp scan");
    }
    std::string lines;
    for (int vert = 0; vert < game.vertexCount(); ++vert) {
      int e = defined->edgeOf[vert];
      lines += "vertex " + std::to_string(vert) + ": sharp edge " + std::to_string(e) + " (" +
               std::to_string(game.edge(e).src) + "->" + std::to_string(game.edge(e).dst) +
               ")\n";
    }
    *report = dupString(lines);
    return DPG_OK;
  });
}

void dpg_solve_options_init(dpg_solve_options* opts) {
  if (!opts) return;
  opts->has_seed = 0;
  opts->seed = 0;
  opts->use_offset_factors = 1;
  opts->noise_policy = DPG_NOISE_ON_DEGENERACY;
  opts->pivot_mode = DPG_PIVOT_LP_FIRST;
  opts->max_iterations = 0;
}

dpg_status dpg_solve(const dpg_game* g, const dpg_solve_options* opts, dpg_solution** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    dpg::SolverConfig cfg;
    if (opts) {
      if (opts->has_seed) cfg.seed = opts->seed;
      cfg.useOffsetFactors = opts->use_offset_factors != 0;
      switch (opts->noise_policy) {
        case DPG_NOISE_NEVER:
          cfg.noisePolicy = dpg::NoisePolicy::Never;
          break;
        case DPG_NOISE_ALWAYS:
          cfg.noisePolicy = dpg::NoisePolicy::Always;
          break;
        case DPG_NOISE_ON_DEGENERACY:
          cfg.noisePolicy = dpg::NoisePolicy::OnDegeneracy;
          break;
        default:
          throw std::invalid_argument("bad noise policy");
      }
      switch (opts->pivot_mode) {
        case DPG_PIVOT_LP_FIRST:
          cfg.pivotMode = dpg::PivotMode::LpFirst;
          break;
        case DPG_PIVOT_MIXED:
          cfg.pivotMode = dpg::PivotMode::Mixed;
          break;
        default:
          throw std::invalid_argument("bad pivot mode");
      }
      if (opts->max_iterations < 0) throw std::invalid_argument("max_iterations must be >= 0");
      cfg.maxIterations = opts->max_iterations;
    }
    cfg.traceLevel = dpg::TraceLevel::Full;
    auto result = new dpg_solution{dpg::solve(g->game, cfg), {}};
    result->successors.reserve(result->solution.strategies.edgeOf.size());
    for (int e : result->solution.strategies.edgeOf)
      result->successors.push_back(g->game.edge(e).dst);
    *out = result;
    return DPG_OK;
  });
}

void dpg_solution_free(dpg_solution* s) { delete s; }

char* dpg_solution_value(const dpg_solution* s, int vertex) {
  if (!s || vertex < 0 || vertex >= static_cast<int>(s->solution.valuation.size())) return nullptr;
  return dupString(dpg::ratStrFrac(s->solution.valuation[vertex]));
}

int dpg_solution_strategy_edge(const dpg_solution* s, int vertex) {
  if (!s || vertex < 0 || vertex >= static_cast<int>(s->solution.strategies.edgeOf.size()))
    return -1;
  return s->solution.strategies.edgeOf[vertex];
}

int dpg_solution_strategy_successor(const dpg_solution* s, int vertex) {
  if (!s || vertex < 0 || vertex >= static_cast<int>(s->successors.size())) return -1;
  return s->successors[vertex];
}

int dpg_solution_iterations(const dpg_solution* s) {
  return s ? static_cast<int>(s->solution.trace.size()) : 0;
}

long long dpg_solution_pivots(const dpg_solution* s) { return s ? s->solution.totalPivots : 0; }

int dpg_solution_resamples(const dpg_solution* s) {
  return s ? s->solution.conditioning.resamples : 0;
}

int dpg_solution_degeneracy_events(const dpg_solution* s) {
  return s ? s->solution.conditioning.degeneracyEvents : 0;
}

int dpg_solution_noise_applied(const dpg_solution* s) {
  return s && s->solution.conditioning.noiseApplied ? 1 : 0;
}

int dpg_solution_alpha_applied(const dpg_solution* s) {
  return s && s->solution.conditioning.alphaApplied ? 1 : 0;
}

uint64_t dpg_solution_noise_seed(const dpg_solution* s) {
  return s ? s->solution.conditioning.noiseSeed : 0;
}

uint64_t dpg_solution_alpha_seed(const dpg_solution* s) {
  return s ? s->solution.conditioning.alphaSeed : 0;
}

char* dpg_solution_epsilon(const dpg_solution* s) {
  return s ? dupString(dpg::ratStrFrac(s->solution.conditioning.epsilon)) : nullptr;
}

char* dpg_solution_gap_bound(const dpg_solution* s) {
  return s ? dupString(dpg::ratStrFrac(s->solution.conditioning.gapLowerBound)) : nullptr;
}

char* dpg_solution_contraction(const dpg_solution* s) {
  return s ? dupString(dpg::ratStrFrac(s->solution.conditioning.contraction)) : nullptr;
}

char* dpg_solution_trace(const dpg_solution* s, int full) {
  return s ? dupString(dpg::traceLog(s->solution.trace, full != 0)) : nullptr;
}

dpg_status dpg_brute_force(const dpg_game* g, long long strategy_cap, dpg_valuation** out) {
  if (!g || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    *out = new dpg_valuation{dpg::bruteForceSolve(g->game, strategy_cap).valuation};
    return DPG_OK;
  });
}

dpg_status dpg_value_iteration(const dpg_game* g, const char* tolerance, dpg_valuation** out) {
  if (!g || !tolerance || !out) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    dpg::Rat tol;
    std::string err;
    if (!dpg::tryParseRat(tolerance, tol, err)) throw std::invalid_argument(err);
    *out = new dpg_valuation{dpg::valueIteration(g->game, tol)};
    return DPG_OK;
  });
}

dpg_status dpg_cross_check(const dpg_game* g, const dpg_solution* s, long long strategy_cap,
                           const char* tolerance, char** verdict) {
  if (!g || !s || !verdict) {
    g_last_error = "null argument";
    return DPG_ERR_ARGUMENT;
  }
  return guard([&] {
    dpg::Rat tol(1, 1000000);
    if (tolerance) {
      std::string err;
      if (!dpg::tryParseRat(tolerance, tol, err)) throw std::invalid_argument(err);
    }
    dpg::OracleReport report =
        dpg::crossCheck(g->game, s->solution.valuation, strategy_cap, tol);
    const char* method =
        report.method == dpg::OracleMethod::BruteForce ? "brute force" : "value iteration";
    if (report.pass) {
      *verdict = dupString(std::string("PASS (") + method + ")");
      return DPG_OK;
    }
    *verdict = dupString(std::string("FAIL (") + method + ") " + report.witness);
    return DPG_ERR_VERIFY;
  });
}

}  // extern "C"
