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
#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "etcs/error.h"
#include "test_util.h"

namespace etcs {
namespace {

using cd = std::complex<double>;
using testing::Q;

constexpr double kTol = 1e-12;

// pi i tau / 12 + sum_n Log(1 - q^n): the product expansion of log eta, which
// agrees with the divisor series on the principal branch.
cd ProductOracle(cd tau) {
  const cd i(0, 1);
  cd q = std::exp(2.0 * kPi * i * tau);
  cd sum = kPi * i * tau / 12.0;
  cd qn = q;
  for (int n = 1; n < 2000 && std::abs(qn) > 1e-18; ++n) {
    sum += std::log(1.0 - qn);
    qn *= q;
  }
  return sum;
}

HalfPlanePoint RandomTau(std::mt19937& rng) {
  std::uniform_real_distribution<double> re(-3.0, 3.0);
  std::uniform_real_distribution<double> log_im(std::log(0.05), std::log(4.0));
  return {re(rng), std::exp(log_im(rng))};
}

TEST(SigmaMinusOneTest, SmallValues) {
  EXPECT_EQ(SigmaMinusOne(1), 1);
  EXPECT_EQ(SigmaMinusOne(6), 2);
  EXPECT_EQ(SigmaMinusOne(7), Q(8, 7));
  EXPECT_EQ(SigmaMinusOne(12), Q(28, 12));
  EXPECT_THROW(SigmaMinusOne(0), ValidationError);
}

TEST(DedekindLogTest, MatchesProductExpansion) {
  for (HalfPlanePoint tau : {HalfPlanePoint{0.0, 1.0}, HalfPlanePoint{0.3, 0.7},
                             HalfPlanePoint{-0.45, 0.9}, HalfPlanePoint{0.1, 2.5}}) {
    auto est = DedekindLog(tau, kTol);
    cd oracle = ProductOracle(tau.value());
    EXPECT_NEAR(est.value.real(), oracle.real(), 1e-11);
    EXPECT_NEAR(est.value.imag(), oracle.imag(), 1e-11);
  }
}

TEST(DedekindLogTest, KnownValueAtI) {
  // eta(i) = Gamma(1/4) / (2 pi^(3/4)).
  double eta_i = std::tgamma(0.25) / (2 * std::pow(kPi, 0.75));
  auto est = DedekindLog({0.0, 1.0}, kTol);
  EXPECT_NEAR(est.value.real(), std::log(eta_i), 1e-12);
  EXPECT_NEAR(est.value.imag(), 0.0, 1e-12);
}

TEST(DedekindLogTest, RejectsLowerHalfPlane) {
  EXPECT_THROW(DedekindLog({0.0, -1.0}, kTol), ValidationError);
}

TEST(DedekindLogPropertyTest, FunctionalEquationsOnRandomPoints) {
  std::mt19937 rng(2718);
  const cd i(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    HalfPlanePoint tau = RandomTau(rng);
    cd t = tau.value();
    cd l = DedekindLog(tau, kTol).value;
    cd shifted = DedekindLog({tau.re + 1, tau.im}, kTol).value;
    EXPECT_LE(std::abs(shifted - l - kPi * i / 12.0), 10 * kTol * 100) << t;
    cd inv = -1.0 / t;
    cd inverted = DedekindLog({inv.real(), inv.imag()}, kTol).value;
    EXPECT_LE(std::abs(inverted - l - 0.5 * std::log(t / i)), 10 * kTol * 100) << t;
  }
}

TEST(DedekindLogPropertyTest, ImaginaryAxisGivesRealSeries) {
  for (double t : {0.3, 1.0, 1.7, 5.0}) {
    cd l = DedekindLog({0.0, t}, kTol).value;
    cd rest = l - kPi * cd(0, 1) * cd(0, t) / 12.0;
    EXPECT_NEAR(rest.imag(), 0.0, 1e-12);
  }
}

TEST(DedekindLogPropertyTest, DirectAndReducedPathsAgree) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> re(-2.0, 2.0), im(2.0, 6.0);
  for (int trial = 0; trial < 50; ++trial) {
    HalfPlanePoint tau{re(rng), im(rng)};
    auto a = DedekindLog(tau, kTol), b = DedekindLogDirect(tau, kTol);
    EXPECT_LE(std::abs(a.value - b.value), 2 * kTol + a.error_bound + b.error_bound);
  }
}

TEST(CConstantTest, SupportedBranches) {
  EXPECT_EQ(CConstantOverPi(3, -1), Q(1, 18));
  EXPECT_EQ(CConstantOverPi(2, 1), Q(1, 12));
  EXPECT_EQ(CConstantOverPi(5, 2), Q(1, 15));
  EXPECT_EQ(CConstantOverPi(1, 0), 0);
  EXPECT_NEAR(CConstant(3, -1), kPi / 18, 1e-15);
}

TEST(CConstantTest, UnsupportedInputsThrow) {
  EXPECT_THROW(CConstantOverPi(7, 2), UnsupportedError);
  EXPECT_THROW(CConstantOverPi(4, 2), ValidationError);
}

TEST(FSmallTest, VanishesForTrivialAndRhombicGroups) {
  for (Rational s_sq : {Q(1), Q(2), Q(1, 3), Q(7, 2)}) {
    EXPECT_NEAR(FSmall({1, 0, s_sq}, kTol).value, 0.0, 1e-12);
    EXPECT_NEAR(FSmall({2, 1, s_sq}, kTol).value, 0.0, 1e-11);
    EXPECT_NEAR(FContribution({2, 1, s_sq}, kTol).value, 0.0, 1e-9);
  }
}

TEST(FSmallTest, OrderThreeClosedForm) {
  double expected = 0.5 * std::acos(1.0 / 3.0) - kPi / 9;
  auto f = FSmall({3, -1, 2}, kTol);
  EXPECT_NEAR(f.value, expected, 1e-10);
  EXPECT_NEAR(f.value, 0.2664138, 1e-7);
  EXPECT_NEAR(FContribution({3, -1, 2}, kTol).value, 144 / kPi * expected, 1e-8);
}

TEST(FSmallPropertyTest, AntisymmetricInEps) {
  for (Rational s_sq : {Q(1, 2), Q(2), Q(5, 3)}) {
    EXPECT_NEAR(FSmall({3, 1, s_sq}, kTol).value, -FSmall({3, -1, s_sq}, kTol).value, 1e-11);
    EXPECT_NEAR(FSmall({5, 2, s_sq}, kTol).value, -FSmall({5, -2, s_sq}, kTol).value, 1e-11);
  }
}

TEST(EtaParamsTest, Validation) {
  EXPECT_THROW(ValidateEtaParams({3, 0, 1}), ValidationError);
  EXPECT_THROW(ValidateEtaParams({3, 2, 1}), ValidationError);
  EXPECT_THROW(ValidateEtaParams({3, 1, 0}), ValidationError);
  EXPECT_THROW(ValidateEtaParams({0, 0, 1}), ValidationError);
  EXPECT_NO_THROW(ValidateEtaParams({4, -1, Q(1, 2)}));
}

}  // namespace
}  // namespace etcs
