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

// Command-line front end: solve, generate, verify, and bench over .dpg files.
// Talks to the solver exclusively through the C API in dpg/dpg.h.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpg/dpg.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSolverLimit = 3;

std::string takeString(char* s) {
  if (!s) return {};
  std::string out(s);
  dpg_string_free(s);
  return out;
}

struct GameDeleter {
  void operator()(dpg_game* g) const { dpg_game_free(g); }
};
struct SolutionDeleter {
  void operator()(dpg_solution* s) const { dpg_solution_free(s); }
};
struct ValuationDeleter {
  void operator()(dpg_valuation* v) const { dpg_valuation_free(v); }
};
using GamePtr = std::unique_ptr<dpg_game, GameDeleter>;
using SolutionPtr = std::unique_ptr<dpg_solution, SolutionDeleter>;
using ValuationPtr = std::unique_ptr<dpg_valuation, ValuationDeleter>;

int statusExitCode(dpg_status status) {
  switch (status) {
    case DPG_OK:
      return 0;
    case DPG_ERR_VERIFY:
      return kExitVerifyFailure;
    case DPG_ERR_LIMIT:
      return kExitSolverLimit;
    default:
      return kExitUsage;
  }
}

bool readFile(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

GamePtr loadGame(const std::string& path, int& exitCode) {
  std::string text;
  if (!readFile(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    exitCode = kExitUsage;
    return nullptr;
  }
  dpg_game* game = nullptr;
  if (dpg_status st = dpg_game_parse(text.c_str(), &game); st != DPG_OK) {
    std::cerr << "error: " << path << ": " << dpg_last_error() << "\n";
    exitCode = kExitUsage;
    return nullptr;
  }
  return GamePtr(game);
}

bool validateOrReport(const dpg_game* game, const std::string& path, int& exitCode) {
  if (char* violations = dpg_game_validate(game)) {
    std::cerr << "error: " << path << " is not a valid game:\n"
              << takeString(violations) << "\n";
    exitCode = kExitUsage;
    return false;
  }
  return true;
}

struct SolveFlags {
  bool hasSeed = false;
  std::uint64_t seed = 0;
  std::string alpha = "on";
  std::string noise = "on-degeneracy";
  std::string pivot = "lp-first";
  std::string trace = "none";
  bool check = false;
  bool jsonOut = false;
};

bool fillOptions(const SolveFlags& flags, dpg_solve_options& opts) {
  dpg_solve_options_init(&opts);
  opts.has_seed = flags.hasSeed ? 1 : 0;
  opts.seed = flags.seed;
  if (flags.alpha == "on")
    opts.use_offset_factors = 1;
  else if (flags.alpha == "off")
    opts.use_offset_factors = 0;
  else
    return false;
  if (flags.noise == "never")
    opts.noise_policy = DPG_NOISE_NEVER;
  else if (flags.noise == "on-degeneracy")
    opts.noise_policy = DPG_NOISE_ON_DEGENERACY;
  else if (flags.noise == "always")
    opts.noise_policy = DPG_NOISE_ALWAYS;
  else
    return false;
  if (flags.pivot == "lp-first")
    opts.pivot_mode = DPG_PIVOT_LP_FIRST;
  else if (flags.pivot == "mixed")
    opts.pivot_mode = DPG_PIVOT_MIXED;
  else
    return false;
  return true;
}

json conditioningJson(const dpg_solution* solution) {
  return json{{"contraction", takeString(dpg_solution_contraction(solution))},
              {"gap_bound", takeString(dpg_solution_gap_bound(solution))},
              {"epsilon", takeString(dpg_solution_epsilon(solution))},
              {"alpha_applied", dpg_solution_alpha_applied(solution) != 0},
              {"alpha_seed", dpg_solution_alpha_seed(solution)},
              {"noise_applied", dpg_solution_noise_applied(solution) != 0},
              {"noise_seed", dpg_solution_noise_seed(solution)},
              {"resamples", dpg_solution_resamples(solution)},
              {"degeneracy_events", dpg_solution_degeneracy_events(solution)}};
}

int cmdSolve(const std::string& file, const SolveFlags& flags) {
  int exitCode = 0;
  GamePtr game = loadGame(file, exitCode);
  if (!game) return exitCode;
  if (!validateOrReport(game.get(), file, exitCode)) return exitCode;

  dpg_solve_options opts;
  if (!fillOptions(flags, opts)) {
    std::cerr << "error: bad flag value\n";
    return kExitUsage;
  }

  dpg_solution* raw = nullptr;
  if (dpg_status st = dpg_solve(game.get(), &opts, &raw); st != DPG_OK) {
    std::cerr << "error: solve failed: " << dpg_last_error() << "\n";
    return statusExitCode(st);
  }
  SolutionPtr solution(raw);

  std::string oracleVerdict;
  dpg_status oracleStatus = DPG_OK;
  if (flags.check) {
    char* verdict = nullptr;
    oracleStatus = dpg_cross_check(game.get(), solution.get(), 1LL << 20, "1/1000000", &verdict);
    if (oracleStatus != DPG_OK && oracleStatus != DPG_ERR_VERIFY) {
      std::cerr << "error: cross-check failed: " << dpg_last_error() << "\n";
      return statusExitCode(oracleStatus);
    }
    oracleVerdict = takeString(verdict);
  }

  const int n = dpg_game_vertex_count(game.get());
  if (flags.jsonOut) {
    json payload;
    for (int v = 0; v < n; ++v)
      payload["valuation"][std::to_string(v)] = takeString(dpg_solution_value(solution.get(), v));
    for (int v = 0; v < n; ++v)
      payload["strategy"][std::to_string(v)] = dpg_solution_strategy_successor(solution.get(), v);
    payload["iterations"] = dpg_solution_iterations(solution.get());
    payload["pivots"] = dpg_solution_pivots(solution.get());
    payload["conditioning"] = conditioningJson(solution.get());
    if (flags.check) payload["oracle"] = oracleVerdict;
    std::cout << payload.dump(2) << "\n";
  } else {
    std::ostringstream line;
    for (int v = 0; v < n; ++v)
      line << (v ? ", " : "") << "v" << v << " = "
           << takeString(dpg_solution_value(solution.get(), v));
    line << "; strategy: ";
    for (int v = 0; v < n; ++v)
      line << (v ? ", " : "") << "v" << v << "->v"
           << dpg_solution_strategy_successor(solution.get(), v);
    std::cout << line.str() << "\n";
    if (flags.trace == "summary" || flags.trace == "full")
      std::cout << takeString(dpg_solution_trace(solution.get(), flags.trace == "full"));
    if (flags.check) std::cout << "oracle: " << oracleVerdict << "\n";
  }
  return oracleStatus == DPG_OK ? 0 : kExitVerifyFailure;
}

int cmdGenerate(int vertices, int degree, std::uint64_t seed, long weightBound,
                const std::string& discounts, const std::string& outPath) {
  dpg_game* raw = nullptr;
  if (dpg_status st = dpg_game_generate(vertices, degree, weightBound, discounts.c_str(), seed,
                                        &raw);
      st != DPG_OK) {
    std::cerr << "error: " << dpg_last_error() << "\n";
    return kExitUsage;
  }
  GamePtr game(raw);
  std::string text = takeString(dpg_game_serialize(game.get()));
  if (outPath.empty() || outPath == "-") {
    std::cout << text;
  } else {
    std::ofstream out(outPath, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << outPath << "\n";
      return kExitUsage;
    }
    out << text;
  }
  return 0;
}

int cmdVerify(const std::string& file, const std::string& valuationFile, bool structureOnly) {
  int exitCode = 0;
  GamePtr game = loadGame(file, exitCode);
  if (!game) return exitCode;

  if (char* violations = dpg_game_validate(game.get())) {
    std::cout << "structure: INVALID\n" << takeString(violations) << "\n";
    return kExitVerifyFailure;
  }
  std::cout << "structure: ok\n";
  if (structureOnly || valuationFile.empty()) return 0;

  std::string text;
  if (!readFile(valuationFile, text)) {
    std::cerr << "error: cannot read " << valuationFile << "\n";
    return kExitUsage;
  }
  dpg_valuation* rawVal = nullptr;
  if (dpg_status st = dpg_valuation_parse(game.get(), text.c_str(), &rawVal); st != DPG_OK) {
    std::cerr << "error: " << valuationFile << ": " << dpg_last_error() << "\n";
    return kExitUsage;
  }
  ValuationPtr valuation(rawVal);

  char* report = nullptr;
  dpg_status st = dpg_verify_valuation(game.get(), valuation.get(), &report);
  std::string reportText = takeString(report);
  if (st == DPG_OK) {
    std::cout << "valuation: ok\n" << reportText;
    return 0;
  }
  if (st == DPG_ERR_VERIFY) {
    std::cout << "valuation: FAIL\n" << reportText << "\n";
    return kExitVerifyFailure;
  }
  std::cerr << "error: " << dpg_last_error() << "\n";
  return statusExitCode(st);
}

int cmdBench(int count, int vertices, int degree, std::uint64_t seed, long weightBound,
             const std::string& discounts, bool check) {
  std::cout << "seed,vertices,edges,iterations,pivots,resamples,wall_ms,oracle\n";
  for (int i = 0; i < count; ++i) {
    const std::uint64_t gameSeed = seed + static_cast<std::uint64_t>(i);
    dpg_game* rawGame = nullptr;
    if (dpg_status st = dpg_game_generate(vertices, degree, weightBound, discounts.c_str(),
                                          gameSeed, &rawGame);
        st != DPG_OK) {
      std::cerr << "error: seed " << gameSeed << ": " << dpg_last_error() << "\n";
      return kExitUsage;
    }
    GamePtr game(rawGame);

    dpg_solve_options opts;
    dpg_solve_options_init(&opts);
    opts.has_seed = 1;
    opts.seed = gameSeed;

    auto start = std::chrono::steady_clock::now();
    dpg_solution* rawSolution = nullptr;
    if (dpg_status st = dpg_solve(game.get(), &opts, &rawSolution); st != DPG_OK) {
      std::cerr << "error: seed " << gameSeed << ": solve failed: " << dpg_last_error() << "\n";
      return statusExitCode(st);
    }
    SolutionPtr solution(rawSolution);
    auto wallMs = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();

    std::string verdict = "-";
    if (check) {
      char* raw = nullptr;
      dpg_status st = dpg_cross_check(game.get(), solution.get(), 1LL << 20, "1/1000000", &raw);
      verdict = takeString(raw);
      if (st != DPG_OK) {
        std::cout << gameSeed << "," << dpg_game_vertex_count(game.get()) << ","
                  << dpg_game_edge_count(game.get()) << ","
                  << dpg_solution_iterations(solution.get()) << ","
                  << dpg_solution_pivots(solution.get()) << ","
                  << dpg_solution_resamples(solution.get()) << "," << wallMs << "," << verdict
                  << "\n";
        std::cerr << "error: seed " << gameSeed << ": " << verdict << "\n";
        return kExitVerifyFailure;
      }
    }
    std::cout << gameSeed << "," << dpg_game_vertex_count(game.get()) << ","
              << dpg_game_edge_count(game.get()) << "," << dpg_solution_iterations(solution.get())
              << "," << dpg_solution_pivots(solution.get()) << ","
              << dpg_solution_resamples(solution.get()) << "," << wallMs << "," << verdict
              << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for discounted payoff games"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve a .dpg game");
  std::string solveFile;
  SolveFlags flags;
  solve->add_option("file", solveFile, ".dpg input")->required();
  auto* seedOpt = solve->add_option("--seed", flags.seed, "seed for conditioning and initial strategy");
  solve->add_option("--alpha", flags.alpha, "offset factors: on|off")->default_str("on");
  solve->add_option("--noise", flags.noise, "weight noise: never|on-degeneracy|always")
      ->default_str("on-degeneracy");
  solve->add_option("--pivot", flags.pivot, "pivot mode: lp-first|mixed")->default_str("lp-first");
  solve->add_option("--trace", flags.trace, "trace output: none|summary|full")->default_str("none");
  solve->add_flag("--check", flags.check, "cross-check against an oracle");
  solve->add_flag("--json", flags.jsonOut, "machine-readable output");

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a random .dpg game");
  int genVertices = 0, genDegree = 0;
  std::uint64_t genSeed = 0;
  long genWeightBound = 4;
  std::string genDiscounts = "1/2,2/3,3/4";
  std::string genOut;
  generate->add_option("--vertices", genVertices, "number of vertices")->required();
  generate->add_option("--degree", genDegree, "out-degree per vertex")->required();
  generate->add_option("--seed", genSeed, "generator seed")->required();
  generate->add_option("--weight-bound", genWeightBound, "integer weights in [-W, W]");
  generate->add_option("--discounts", genDiscounts, "comma-separated discount pool");
  generate->add_option("--out", genOut, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Validate a game and optionally a valuation");
  std::string verifyFile, verifyValuation;
  bool structureOnly = false;
  verify->add_option("file", verifyFile, ".dpg input")->required();
  verify->add_option("valuation", verifyValuation, "valuation file (<vertex> <p/q> per line)");
  verify->add_flag("--structure", structureOnly, "check game structure only");

  // bench
  auto* bench = app.add_subcommand("bench", "Solve a batch of generated games, CSV output");
  int benchCount = 0, benchVertices = 0, benchDegree = 0;
  std::uint64_t benchSeed = 0;
  long benchWeightBound = 4;
  std::string benchDiscounts = "1/2,2/3,3/4";
  bool benchCheck = false;
  bench->add_option("--count", benchCount, "number of games")->required();
  bench->add_option("--vertices", benchVertices, "vertices per game")->required();
  bench->add_option("--degree", benchDegree, "out-degree per vertex")->required();
  bench->add_option("--seed", benchSeed, "base seed")->required();
  bench->add_option("--weight-bound", benchWeightBound, "integer weights in [-W, W]");
  bench->add_option("--discounts", benchDiscounts, "comma-separated discount pool");
  bench->add_flag("--check", benchCheck, "cross-check every solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (solve->parsed()) {
    flags.hasSeed = seedOpt->count() > 0;
    return cmdSolve(solveFile, flags);
  }
  if (generate->parsed())
    return cmdGenerate(genVertices, genDegree, genSeed, genWeightBound, genDiscounts, genOut);
  if (verify->parsed()) return cmdVerify(verifyFile, verifyValuation, structureOnly);
  if (bench->parsed())
    return cmdBench(benchCount, benchVertices, benchDegree, benchSeed, benchWeightBound,
                    benchDiscounts, benchCheck);
  return kExitUsage;
}
