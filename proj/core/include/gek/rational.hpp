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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gek {

/// Exact rational number with arbitrary-precision numerator and denominator.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("0.25", "-1.5e-3") into an
/// exact rational. Decimal text is read digit-for-digit, so "0.1" is 1/10.
/// Throws Error(kInput) on malformed text.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers are written as "p/1".
std::string to_fraction_string(const Rational& value);

}  // namespace gek
