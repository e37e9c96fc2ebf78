/*
 * Copyright 2026 The gek Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gek/entropy.hpp"
#include "gek/group_function.hpp"
#include "gek/rational.hpp"

namespace gek::cli {

enum class Command {
  kEntropyEval,
  kEntropySweep,
  kVerify,
  kSeriesInvert,
  kGrouplawExpand,
  kLogEval,
  kExpEval,
  kChiEval,
  kExtensivitySolve,
  kQentropyEval,
  kLmgDemo,
};

enum class Format { kCsv, kJson };

/// `--param key=lo:hi:step`
struct SweepRange {
  std::string key;
  Rational lo;
  Rational hi;
  Rational step;

  [[nodiscard]] std::vector<Rational> values() const;
};

struct RunConfig {
  Command command = Command::kEntropyEval;
  std::string family;
  std::string group = "identity";
  std::map<std::string, Rational> params;
  std::optional<SweepRange> sweep;
  std::string dist;
  std::string rho_path;
  std::string output_path;
  std::uint64_t seed = 1;
  int trials = 1000;
  double tolerance = 1e-10;
  /// Unset means the command's plain default (a bare number for scalar
  /// commands, CSV for tables, JSON for verify).
  std::optional<Format> format;
  std::string suite = "all";

  std::vector<Rational> b_sequence;
  int order = 8;
  double x = 1.0;
  double y = 0.0;
  double gamma = 1.0;

  double lambda = 1.0;
  double horizon = 1e6;
  std::optional<double> growth_rho;

  int m = 1;
  int n = 2;
  std::vector<int> occupations;
  double a = 1.0;
  std::optional<double> alpha;
  bool extensive = false;
  bool sweep_l = false;
  int l = 1;
};

/// Bad flags, unknown families or parameter keys, malformed ranges, missing
/// files. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown for --help; carries the help text. Maps to exit code 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses argv (without the program name). `env_seed` is the value of
/// GEK_SEED if set. Validates parameters against the chosen family.
RunConfig parse_args(const std::vector<std::string>& args, const std::optional<std::string>& env_seed = std::nullopt);

/// Entropy specification described by the config (family, group, params).
EntropySpec build_spec(const RunConfig& config);
/// Group function described by the config's group and params.
GroupFunction build_group(const RunConfig& config);

/// Executes the command. Returns 0 on success, 1 when an asserted property
/// fails, 2 on input errors (reported on `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parse, run, map errors to exit codes.
int main_with_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const std::optional<std::string>& env_seed = std::nullopt);

/// 15 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

}  // namespace gek::cli
