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

#include "etcs/eta_series.h"

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <utility>

#include "etcs/error.h"

namespace etcs {

namespace {

constexpr int kReductionCap = 64;
constexpr std::int64_t kMaxTerms = 1000000;
constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

double SigmaMinusOneDouble(std::int64_t n) {
  double s = 0.0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += 1.0 / static_cast<double>(d);
    if (d * d != n) s += static_cast<double>(d) / static_cast<double>(n);
  }
  return s;
}

// Number of terms N with sum_{n > N} n x^n <= budget, and that tail.
std::optional<std::pair<std::int64_t, double>> TermsFor(double x, double budget) {
  if (x <= 0.0) return std::make_pair(std::int64_t{0}, 0.0);
  const double denom = (1 - x) * (1 - x);
  for (std::int64_t n = 0; n <= kMaxTerms; ++n) {
    const double nn = static_cast<double>(n);
    const double tail = std::pow(x, nn + 1) * ((nn + 1) - nn * x) / denom;
    if (tail <= budget) return std::make_pair(n, tail);
  }
  return std::nullopt;
}

ComplexEstimate Series(std::complex<double> tau, double tol) {
  if (!(tau.imag() > 0)) throw ValidationError("tau", "Im tau must be positive");
  if (!(tol > 0)) throw ValidationError("tol", "tolerance must be positive");
  const double x = std::exp(-2 * kPi * tau.imag());
  const auto terms = TermsFor(x, tol / 2);
  if (!terms) throw ValidationError("tau", "Im tau too small for direct summation");
  const std::complex<double> q = std::exp(std::complex<double>(0, 2 * kPi) * tau);
  std::complex<double> qn = 1.0;
  std::complex<double> sum = 0.0;
  double magnitude = 0.0;
  for (std::int64_t n = 1; n <= terms->first; ++n) {
    qn *= q;
    const std::complex<double> term = SigmaMinusOneDouble(n) * qn;
    sum += term;
    magnitude += std::abs(term);
  }
  const std::complex<double> head = std::complex<double>(0, kPi / 12) * tau;
  ComplexEstimate out;
  out.value = head - sum;
  out.error_bound = terms->second +
                    4 * kUnitRoundoff * (std::abs(head) + magnitude * (1 + terms->first));
  return out;
}

}  // namespace

void ValidateEtaParams(const EtaParams& params) {
  if (params.k <= 0) throw ValidationError("k", "must be positive");
  if (std::gcd(params.eps, params.k) != 1) {
    throw ValidationError("eps", "must be a unit modulo k");
  }
  if (!(2 * params.eps > -params.k && 2 * params.eps <= params.k)) {
    throw ValidationError("eps", "representative must lie in (-k/2, k/2]");
  }
  if (params.s_sq <= 0) throw ValidationError("s_sq", "must be positive");
}

Rational SigmaMinusOne(std::int64_t n) {
  if (n <= 0) throw ValidationError("n", "must be positive");
  Rational s = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    s += Rational(1, d);
    if (d * d != n) s += Rational(d, n);
  }
  return s;
}

ComplexEstimate DedekindLog(HalfPlanePoint tau, double tol) {
  if (!(tau.im > 0)) throw ValidationError("tau.im", "must be positive");
  std::complex<double> t = tau.value();
  std::complex<double> correction = 0.0;
  double rounding = 0.0;
  for (int iter = 0;; ++iter) {
    if (iter == kReductionCap) {
      throw InconsistencyError("modular reduction did not converge");
    }
    const double shift = std::round(t.real());
    if (shift != 0.0) {
      t -= shift;
      correction += std::complex<double>(0, shift * kPi / 12);
    }
    if (std::norm(t) >= 1.0) break;
    const std::complex<double> w = -1.0 / t;
    const std::complex<double> log_term = 0.5 * std::log(w / std::complex<double>(0, 1));
    correction += log_term;
    rounding += 4 * kUnitRoundoff * (std::abs(log_term) + 1);
    t = w;
  }
  ComplexEstimate s = Series(t, tol);
  s.value += correction;
  s.error_bound += rounding + 4 * kUnitRoundoff * std::abs(correction);
  return s;
}

ComplexEstimate DedekindLogDirect(HalfPlanePoint tau, double tol) {
  return Series(tau.value(), tol);
}

Rational CConstantOverPi(std::int64_t k, std::int64_t eps) {
  if (k <= 0) throw ValidationError("k", "must be positive");
  if (k > 1 && std::gcd(eps, k) != 1) throw ValidationError("eps", "must be a unit modulo k");
  std::optional<Rational> first;
  std::optional<Rational> second;
  if (eps == 1 || eps == -1) {
    first = Rational(-eps * (k * k - 3 * k + 1), 6 * k);
  }
  if (FloorMod(eps * eps + 1, k) == 0) {
    second = Rational(eps, 6 * k);
  }
  if (first && second && *first != *second) {
    throw InconsistencyError("the two closed forms for c disagree at k = " +
                             std::to_string(k) + ", eps = " + std::to_string(eps));
  }
  if (first) return *first;
  if (second) return *second;
  throw UnsupportedError("c_{k,eps} is only known for eps = +-1 or eps^2 = -1 mod k; got k = " +
                         std::to_string(k) + ", eps = " + std::to_string(eps));
}

double CConstant(std::int64_t k, std::int64_t eps) {
  return kPi * ToDouble(CConstantOverPi(k, eps));
}

RealEstimate FSmall(const EtaParams& params, double tol) {
  ValidateEtaParams(params);
  const double c = CConstant(params.k, params.eps);
  const double s = std::sqrt(ToDouble(params.s_sq));
  const double k = static_cast<double>(params.k);
  const double e = static_cast<double>(params.eps);
  const ComplexEstimate lp = DedekindLog({e / k, s / k}, tol / 4);
  const ComplexEstimate lm = DedekindLog({-e / k, s / k}, tol / 4);
  const std::complex<double> i(0, 1);
  const std::complex<double> f = i * lp.value - i * lm.value + c;
  const double bound = lp.error_bound + lm.error_bound + 4 * kUnitRoundoff * (std::abs(f) + 1);
  if (std::abs(f.imag()) > tol + bound) {
    throw InconsistencyError("F has imaginary residual " + std::to_string(f.imag()));
  }
  return {f.real(), bound};
}

RealEstimate FContribution(const EtaParams& params, double tol) {
  const RealEstimate f = FSmall(params, tol * kPi / 144);
  return {144 / kPi * f.value, 144 / kPi * f.error_bound};
}

}  // namespace etcs
