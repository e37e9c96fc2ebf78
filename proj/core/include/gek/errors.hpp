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

#include <stdexcept>
#include <string>
#include <string_view>

namespace gek {

/// Classifies every failure the library can raise. The CLI maps these onto
/// exit codes, tests match on them.
enum class ErrorKind {
  kInvalidNormalization,     // b_0 != 1 in a b-sequence
  kNonInvertible,            // series without c_0 = 0, c_1 = 1
  kCompositionDomain,        // inner series with nonzero constant term
  kDomain,                   // argument outside the evaluation domain
  kRange,                    // value outside the range of G
  kConvergence,              // root bracketing or iteration failed
  kParameter,                // entropic parameter violates its constraint
  kInput,                    // malformed distribution, matrix or spec
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace gek
