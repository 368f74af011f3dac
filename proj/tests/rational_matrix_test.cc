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

#include "etcs/rational_matrix.h"

#include <random>

#include <gtest/gtest.h>

#include "etcs/error.h"
#include "test_util.h"

namespace etcs {
namespace {

using testing::M;
using testing::Q;

// Determinant by plain Gaussian elimination over Q, used as an oracle for the
// characteristic polynomial: det(xI - A) evaluated at a rational point.
Rational OracleDeterminant(RationalMatrix a) {
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

RationalMatrix RandomMatrix(std::mt19937& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng), 1 + (d(rng) & 3));
  return m;
}

TEST(NumericTest, ParseRationalNormalizes) {
  EXPECT_EQ(ParseRational("6/-4"), Q(-3, 2));
  EXPECT_EQ(ParseRational(" -7 "), -7);
  EXPECT_EQ(ToString(ParseRational("10/5")), "2");
  EXPECT_THROW(ParseRational("1/0"), ValidationError);
  EXPECT_THROW(ParseRational("x"), ValidationError);
}

TEST(RationalMatrixTest, InverseOfSmallMatrix) {
  RationalMatrix a = M({{2, 1}, {1, -1}});
  RationalMatrix inv = a.Inverse();
  EXPECT_EQ(inv, M({{Q(1, 3), Q(1, 3)}, {Q(1, 3), Q(-2, 3)}}));
  EXPECT_EQ(a * inv, RationalMatrix::Identity(2));
}

TEST(RationalMatrixTest, SingularInverseThrows) {
  EXPECT_THROW(M({{1, 2}, {2, 4}}).Inverse(), ValidationError);
}

TEST(RationalMatrixTest, RankAndKernel) {
  RationalMatrix a = M({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(Rank(a), 2u);
  auto kernel = Kernel(a);
  ASSERT_EQ(kernel.size(), 1u);
  RationalVector zero = a * kernel[0];
  for (const auto& z : zero) EXPECT_EQ(z, 0);
}

TEST(RationalMatrixTest, PrimitiveIntegralNormalizesSignAndScale) {
  auto v = PrimitiveIntegral({Q(-2, 3), Q(4, 9), 0});
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v[0], 3);
  EXPECT_EQ(v[1], -2);
  EXPECT_EQ(v[2], 0);
}

TEST(PolynomialTest, DivModAndGcd) {
  Polynomial a({-1, 0, 1});  // x^2 - 1
  Polynomial b({1, 1});      // x + 1
  auto [quot, rem] = a.DivMod(b);
  EXPECT_EQ(quot, Polynomial({-1, 1}));
  EXPECT_TRUE(rem.IsZero());
  EXPECT_EQ(Gcd(a, Polynomial({1, 2, 1})), b);
}

TEST(PolynomialTest, FactorRationalRootsSplitsOffMultiplicities) {
  // (x + 1)^2 (289 x^2 - 446 x + 289)
  Polynomial p = Polynomial::Linear(-1) * Polynomial::Linear(-1) *
                 Polynomial({289, -446, 289});
  auto f = FactorRationalRoots(p);
  ASSERT_EQ(f.roots.size(), 1u);
  EXPECT_EQ(f.roots[0], (RationalRoot{-1, 2}));
  EXPECT_EQ(f.remainder, Polynomial({1, Q(-446, 289), 1}));
}

TEST(PolynomialTest, FactorFindsNonIntegerRoots) {
  Polynomial p = Polynomial({-1, 3}) * Polynomial({2, 5}) * Polynomial({1, 0, 1});
  auto f = FactorRationalRoots(p);
  ASSERT_EQ(f.roots.size(), 2u);
  EXPECT_EQ(f.roots[0].value, Q(-2, 5));
  EXPECT_EQ(f.roots[1].value, Q(1, 3));
  EXPECT_EQ(f.remainder, Polynomial({1, 0, 1}));
}

TEST(CharacteristicPolynomialTest, MatchesDeterminantOracleOnRandomMatrices) {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 6;
    RationalMatrix a = RandomMatrix(rng, n, 5);
    Polynomial chi = CharacteristicPolynomial(a);
    ASSERT_EQ(chi.Degree(), static_cast<int>(n));
    EXPECT_EQ(chi.Leading(), 1);
    for (Rational x : {Q(0), Q(1), Q(-3, 2), Q(7, 5)}) {
      RationalMatrix xi_minus_a = RationalMatrix::Identity(n) * x - a;
      EXPECT_EQ(chi.Evaluate(x), OracleDeterminant(xi_minus_a));
    }
  }
}

TEST(CharacteristicPolynomialTest, CayleyHamilton) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    RationalMatrix a = RandomMatrix(rng, 4, 3);
    EXPECT_TRUE(EvaluateAt(CharacteristicPolynomial(a), a).IsZero());
  }
}

}  // namespace
}  // namespace etcs
