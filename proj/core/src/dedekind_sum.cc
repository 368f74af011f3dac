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

#include "etcs/dedekind_sum.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "etcs/error.h"

namespace etcs {

namespace {

constexpr long double kPiL = std::numbers::pi_v<long double>;
constexpr double kIsolationTolerance = 1e-9;

struct SinCos {
  long double sin;
  long double cos;
};

// sin and cos of (r pi), exact at multiples of pi/2.
SinCos SinCosPiFrac(const Rational& r) {
  const Integer num = Numerator(r);
  const Integer den = Denominator(r);
  Integer turns = num / (2 * den);
  if (num < 0 && turns * 2 * den != num) turns -= 1;
  const Rational t = r - Rational(2 * turns);
  if (t == 0) return {0.0L, 1.0L};
  if (t == Rational(1, 2)) return {1.0L, 0.0L};
  if (t == 1) return {0.0L, -1.0L};
  if (t == Rational(3, 2)) return {-1.0L, 0.0L};
  const long double x = static_cast<long double>(ToDouble(t)) * kPiL;
  return {std::sin(x), std::cos(x)};
}

SinCos HalfAngle(const FixedPointAngle& a) {
  if (a.pi_frac) return SinCosPiFrac(*a.pi_frac / 2);
  const long double h = static_cast<long double>(a.radians) / 2;
  return {std::sin(h), std::cos(h)};
}

std::string EntryPath(std::size_t e) { return "entries[" + std::to_string(e) + "]"; }

}  // namespace

FixedPointAngle FixedPointAngle::PiFrac(const Rational& r) {
  FixedPointAngle a;
  a.pi_frac = r;
  a.radians = ToDouble(r) * kPi;
  return a;
}

FixedPointAngle FixedPointAngle::Radians(double x) {
  FixedPointAngle a;
  a.radians = x;
  return a;
}

double FixedPointAngle::value() const {
  return pi_frac ? ToDouble(*pi_frac) * kPi : radians;
}

void ValidateFixedPointSet(const FixedPointSet& fps) {
  if (fps.k <= 0) throw ValidationError("k", "must be positive");
  if (fps.k <= 2 && !fps.entries.empty()) {
    throw ValidationError("entries", "groups of order at most 2 have no isolated fixed points");
  }
  for (std::size_t e = 0; e < fps.entries.size(); ++e) {
    const FixedPointEntry& entry = fps.entries[e];
    if (entry.j < 1 || entry.j > fps.k - 1) {
      throw ValidationError(EntryPath(e) + ".j", "must lie in [1, k - 1]");
    }
    bool exact = true;
    Rational exact_sum = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const FixedPointAngle& a = entry.angles[i];
      const std::string path = EntryPath(e) + ".angles[" + std::to_string(i) + "]";
      if (a.pi_frac) {
        if (Denominator(*a.pi_frac) == 1 && Numerator(*a.pi_frac) % 2 == 0) {
          throw ValidationError(path, "angle is a multiple of 2 pi; fixed point is not isolated");
        }
        exact_sum += *a.pi_frac;
      } else {
        exact = false;
        if (std::abs(std::sin(a.radians / 2)) < kIsolationTolerance) {
          throw ValidationError(path, "angle is within tolerance of a multiple of 2 pi");
        }
      }
      sum += a.value();
    }
    if (exact) {
      if (Denominator(exact_sum) != 1 || Numerator(exact_sum) % 2 != 0) {
        throw ValidationError(EntryPath(e) + ".angles", "angles must sum to a multiple of 2 pi");
      }
    } else {
      const double turns = sum / (2 * kPi);
      if (std::abs(turns - std::round(turns)) * 2 * kPi > kIsolationTolerance) {
        throw ValidationError(EntryPath(e) + ".angles", "angles must sum to a multiple of 2 pi");
      }
    }
  }
}

FixedPointSet NormalizeAngleSums(const FixedPointSet& fps) {
  ValidateFixedPointSet(fps);
  FixedPointSet out = fps;
  for (FixedPointEntry& entry : out.entries) {
    double sum = 0.0;
    for (const auto& a : entry.angles) sum += a.value();
    const auto turns = static_cast<std::int64_t>(std::llround(sum / (2 * kPi)));
    if (turns == 0) continue;
    FixedPointAngle& last = entry.angles[2];
    if (last.pi_frac) {
      last = FixedPointAngle::PiFrac(*last.pi_frac - 2 * turns);
    } else {
      last.radians -= 2 * kPi * static_cast<double>(turns);
    }
  }
  return out;
}

DedekindSumResult DedekindSum(const FixedPointSet& fps) {
  const FixedPointSet norm = NormalizeAngleSums(fps);
  DedekindSumResult out;
  if (norm.entries.empty()) {
    out.rational = Rational(0);
    return out;
  }
  long double total = 0.0L;
  long double magnitude = 0.0L;
  for (const FixedPointEntry& entry : norm.entries) {
    const long double x = kPiL * static_cast<long double>(entry.j) /
                          static_cast<long double>(norm.k);
    const long double cot = std::cos(x) / std::sin(x);
    long double cos_prod = 1.0L;
    long double sin_prod = 1.0L;
    for (const auto& a : entry.angles) {
      const SinCos h = HalfAngle(a);
      cos_prod *= h.cos;
      sin_prod *= h.sin;
    }
    const long double term = cot * (cos_prod - 1.0L) / sin_prod;
    total += term;
    magnitude += std::abs(term);
  }
  const long double scale = 3.0L / static_cast<long double>(norm.k);
  out.value = static_cast<double>(scale * total);
  out.error_bound = static_cast<double>(
      64 * std::numeric_limits<long double>::epsilon() * scale * (magnitude + 1)) +
      std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.rational = ReconstructRational(out.value);
  return out;
}

std::optional<Rational> ReconstructRational(double x, std::int64_t max_denominator,
                                            double threshold) {
  if (!std::isfinite(x)) return std::nullopt;
  Integer h_prev = 1, h = static_cast<long long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  long double frac = static_cast<long double>(x) - std::floor(static_cast<long double>(x));
  for (int iter = 0; iter < 64; ++iter) {
    const Rational r(h, k);
    if (std::abs(x - ToDouble(r)) < threshold) return r;
    if (frac <= 0.0L) break;
    const long double inv = 1.0L / frac;
    const auto a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const Integer h_next = a * h + h_prev;
    const Integer k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace etcs
