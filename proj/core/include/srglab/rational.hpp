// Copyright 2026 The srglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace srglab {

/// Arbitrary-precision exact rational. Parameter algebra and lemma bounds
/// are computed in this type; floating point only appears at output time.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational ratio(long long num, long long den) { return Rational(num, den); }

/// Decimal rendering with `digits` significant digits ("%.*g" style).
std::string to_decimal(const Rational& x, int digits = 12);

/// Accepts "3", "-2", "1/4", "0.15", "2.5e-5". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

BigInt floor(const Rational& x);
BigInt ceil(const Rational& x);
Rational abs(const Rational& x);

double to_double(const Rational& x);

}  // namespace srglab
