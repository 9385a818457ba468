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

#ifndef DPG_ERRORS_HPP
#define DPG_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace dpg {

/// Malformed .dpg or valuation text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A Game that fails validation was handed to an operation requiring a valid one.
class InvalidGameError : public std::runtime_error {
 public:
  explicit InvalidGameError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& vs) {
    std::string out = "invalid game";
    for (const auto& v : vs) out += "\n  " + v;
    return out;
  }
  std::vector<std::string> violations_;
};

/// A configured cap was exceeded (solver iterations, conditioning resamples,
/// strategy enumeration). Carries whatever trace was accumulated.
class LimitError : public std::runtime_error {
 public:
  LimitError(const std::string& what, std::string trace = {})
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

/// Broken internal invariant (pivoting bug, singular strategy system, ...).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

#define DPG_CHECK(cond, msg)                          \
  do {                                                \
    if (!(cond)) throw ::dpg::InternalError(msg);     \
  } while (0)

}  // namespace dpg

#endif
