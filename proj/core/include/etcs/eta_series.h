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

// Logarithm of the Dedekind eta function and the torus contributions built
// from it.

#ifndef ETCS_ETA_SERIES_H_
#define ETCS_ETA_SERIES_H_

#include <complex>
#include <cstdint>

#include "etcs/numeric.h"

namespace etcs {

// Point of the upper half plane. Im must be strictly positive.
struct HalfPlanePoint {
  double re = 0.0;
  double im = 1.0;

  std::complex<double> value() const { return {re, im}; }
};

struct EtaParams {
  std::int64_t k = 1;
  // Representative in (-k/2, k/2], coprime to k (0 when k = 1).
  std::int64_t eps = 0;
  Rational s_sq = 1;
};

// Throws ValidationError naming the offending field.
void ValidateEtaParams(const EtaParams& params);

struct ComplexEstimate {
  std::complex<double> value;
  double error_bound = 0.0;
};

struct RealEstimate {
  double value = 0.0;
  double error_bound = 0.0;
};

// Sum of 1/d over the positive divisors d of n (n >= 1).
Rational SigmaMinusOne(std::int64_t n);

// pi i tau / 12 - sum_{n >= 1} sigma_{-1}(n) exp(2 pi i n tau), after moving
// tau into |Re tau| <= 1/2, |tau| >= 1 with the transformation rules for
// tau + 1 and -1/tau. The error bound covers truncation and rounding.
ComplexEstimate DedekindLog(HalfPlanePoint tau, double tol);

// Same series summed at tau itself without reduction. Intended for
// Im tau >= 1; throws ValidationError if more than a million terms would be
// needed.
ComplexEstimate DedekindLogDirect(HalfPlanePoint tau, double tol);

// The constant c_{k,eps} divided by pi. Supported for eps = +-1 and for
// eps^2 = -1 mod k; where both apply they are checked to agree. Other
// inputs throw UnsupportedError.
Rational CConstantOverPi(std::int64_t k, std::int64_t eps);
double CConstant(std::int64_t k, std::int64_t eps);

// i L((s i + eps)/k) - i L((s i - eps)/k) + c_{k,eps}, with s = sqrt(s_sq).
// Throws InconsistencyError if the imaginary residual exceeds tol.
RealEstimate FSmall(const EtaParams& params, double tol);

// (144 / pi) FSmall.
RealEstimate FContribution(const EtaParams& params, double tol);

}  // namespace etcs

#endif  // ETCS_ETA_SERIES_H_
