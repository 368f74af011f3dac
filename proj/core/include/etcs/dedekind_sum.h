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

// Generalised Dedekind sums from the rotation angles at isolated fixed points
// of a cyclic group action.

#ifndef ETCS_DEDEKIND_SUM_H_
#define ETCS_DEDEKIND_SUM_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "etcs/numeric.h"

namespace etcs {

// A rotation angle, either an exact rational multiple of pi or radians.
struct FixedPointAngle {
  static FixedPointAngle PiFrac(const Rational& r);
  static FixedPointAngle Radians(double x);

  std::optional<Rational> pi_frac;
  double radians = 0.0;

  double value() const;
};

struct FixedPointEntry {
  // Power of the generator, 1 <= j <= k - 1.
  std::int64_t j = 1;
  std::array<FixedPointAngle, 3> angles;
};

struct FixedPointSet {
  std::int64_t k = 1;
  std::vector<FixedPointEntry> entries;
};

// Checks the ranges of k and j, rejects entries when k <= 2, rejects angles
// that are multiples of 2 pi, and requires each triple to sum to a multiple
// of 2 pi. Throws ValidationError with a field path.
void ValidateFixedPointSet(const FixedPointSet& fps);

// Copy in which every triple sums to exactly 0: the last angle absorbs the
// multiple of 2 pi.
FixedPointSet NormalizeAngleSums(const FixedPointSet& fps);

struct DedekindSumResult {
  double value = 0.0;
  double error_bound = 0.0;
  // Unset when reconstruction failed; the float is still valid.
  std::optional<Rational> rational;
};

// (3/k) sum_j cot(pi j/k) sum_p (prod cos(a_i/2) - 1) / prod sin(a_i/2),
// evaluated after NormalizeAngleSums.
DedekindSumResult DedekindSum(const FixedPointSet& fps);

// Continued-fraction convergent p/q of x with q <= max_denominator and
// |x - p/q| < threshold, if one exists.
std::optional<Rational> ReconstructRational(double x,
                                            std::int64_t max_denominator = 1000000,
                                            double threshold = 1e-9);

}  // namespace etcs

#endif  // ETCS_DEDEKIND_SUM_H_
