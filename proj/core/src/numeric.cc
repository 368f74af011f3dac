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

#include "etcs/numeric.h"

#include <cctype>

#include "etcs/error.h"

namespace etcs {
namespace {

Integer ParseInteger(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw ValidationError("malformed rational '" + std::string(whole) + "'");
  }
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(ParseInteger(text, text));
  const Integer num = ParseInteger(text.substr(0, slash), text);
  const Integer den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num) / den;
}

std::string ToString(const Integer& value) { return value.str(); }

std::string ToString(const Rational& value) {
  const Integer den = Denominator(value);
  if (den == 1) return Numerator(value).str();
  return Numerator(value).str() + "/" + den.str();
}

double ToDouble(const Integer& value) { return value.convert_to<double>(); }

double ToDouble(const Rational& value) { return value.convert_to<double>(); }

Integer Numerator(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

Integer Denominator(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

int Sign(const Integer& value) { return value.sign(); }

int Sign(const Rational& value) { return value.sign(); }

std::int64_t FloorMod(std::int64_t value, std::int64_t modulus) {
  const std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace etcs
