// Copyright 2026 The etcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ETCS_NUMERIC_H_
#define ETCS_NUMERIC_H_

#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace etcs {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = std::numbers::pi;

// Parses "a", "-a" or "a/b" (b != 0) into a reduced rational.
Rational ParseRational(std::string_view text);

std::string ToString(const Integer& value);
// "a" for integers, otherwise "a/b" with b > 0.
std::string ToString(const Rational& value);

double ToDouble(const Integer& value);
double ToDouble(const Rational& value);

Integer Numerator(const Rational& value);
Integer Denominator(const Rational& value);

int Sign(const Integer& value);
int Sign(const Rational& value);

// Canonical representative in [0, modulus). modulus must be positive.
std::int64_t FloorMod(std::int64_t value, std::int64_t modulus);

}  // namespace etcs

#endif  // ETCS_NUMERIC_H_
