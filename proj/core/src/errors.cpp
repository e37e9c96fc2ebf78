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

#include "gek/errors.hpp"

namespace gek {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kInvalidNormalization: return "invalid-normalization";
    case ErrorKind::kNonInvertible: return "non-invertible-normalization";
    case ErrorKind::kCompositionDomain: return "composition-domain";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kConvergence: return "convergence";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kInput: return "input";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace gek
