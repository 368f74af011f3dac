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

#include "etcs/configuration.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "etcs/error.h"
#include "etcs/json_io.h"
#include "test_util.h"

namespace etcs {
namespace {

using testing::DataPath;
using testing::M;
using testing::Q;

Configuration Load(const std::string& name) {
  return LoadConfiguration(DataPath("configurations/" + name + ".json"));
}

// Builds both orthogonal projections directly in W coordinates and multiplies
// the reflections; used as an oracle for ReflectionProduct.
RationalMatrix OracleReflectionProduct(const Configuration& cfg) {
  const std::size_t a = cfg.r_plus(), b = cfg.r_minus(), r = a + b;
  RationalMatrix g = cfg.gram().ToRational();
  RationalMatrix np = g.Block(0, 0, a, a), nm = g.Block(a, a, b, b);
  RationalMatrix cross = g.Block(0, a, a, b);
  RationalMatrix to_plus = np.Inverse() * cross;
  RationalMatrix to_minus = nm.Inverse() * cross.Transpose();
  RationalMatrix pi_plus(r, r), pi_minus(r, r);
  for (std::size_t i = 0; i < a; ++i) {
    pi_plus(i, i) = 1;
    for (std::size_t j = 0; j < b; ++j) pi_plus(i, a + j) = to_plus(i, j);
  }
  for (std::size_t i = 0; i < b; ++i) {
    pi_minus(a + i, a + i) = 1;
    for (std::size_t j = 0; j < a; ++j) pi_minus(a + i, j) = to_minus(i, j);
  }
  RationalMatrix id = RationalMatrix::Identity(r);
  return (pi_plus * Rational(2) - id) * (pi_minus * Rational(2) - id);
}

int CountZeros(const std::vector<ConfigAngle>& v) {
  int n = 0;
  for (const auto& x : v) n += x.kind == ConfigAngle::Kind::kZero;
  return n;
}

TEST(ConfigurationTest, RejectsDegenerateBlock) {
  EXPECT_THROW(Configuration(GramMatrix{{0, 1}, {1, 2}}, 1, 1), ValidationError);
  EXPECT_THROW(Configuration(GramMatrix{{2, 1}, {1, 2}}, 1, 2), ValidationError);
}

TEST(ConfigurationTest, ConditionOne) {
  EXPECT_TRUE(ConditionI(Load("rank1_6_2")));
  EXPECT_TRUE(ConditionI(Load("rank2_pi_over_4")));
  EXPECT_TRUE(ConditionI(Load("twisted_cubic_pair")));
  EXPECT_FALSE(ConditionI(Configuration(GramMatrix{{-2, 0}, {0, -2}}, 1, 1)));
}

TEST(ConfigurationTest, ProjCompositionRankOne) {
  EXPECT_EQ(ProjComposition(Load("rank1_6_2"), Side::kPlus), M({{Q(1, 3)}}));
}

TEST(ConfigurationTest, ProjCompositionIsHalfIdentityForQuarterTurn) {
  auto cfg = Load("rank2_pi_over_4");
  EXPECT_EQ(ProjComposition(cfg, Side::kPlus), RationalMatrix::Identity(2) * Q(1, 2));
  auto spec = GluingAngleCos2(cfg);
  ASSERT_EQ(spec.rational.size(), 1u);
  EXPECT_EQ(spec.rational[0], (RationalRoot{Q(1, 2), 2}));
  EXPECT_EQ(spec.irrational.Degree(), 0);
}

TEST(ConfigurationTest, ProjCompositionOfTwistedCubicPair) {
  auto cfg = Load("twisted_cubic_pair");
  EXPECT_EQ(ProjComposition(cfg, Side::kPlus),
            M({{112, -112}, {-144, 144}}) * Q(1, 289));
  auto basis = ThetaEigenspace(cfg, 0, Side::kPlus);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(PrimitiveIntegral(basis[0]), (std::vector<Integer>{1, 1}));
  EXPECT_TRUE(ConditionII(cfg, 0, Side::kPlus));
}

TEST(ConfigurationTest, PerpendicularHasZeroProjection) {
  auto cfg = Load("perpendicular_2_2");
  EXPECT_TRUE(ProjComposition(cfg, Side::kPlus).IsZero());
  auto spec = GluingAngleCos2(cfg);
  ASSERT_EQ(spec.rational.size(), 1u);
  EXPECT_EQ(spec.rational[0], (RationalRoot{0, 2}));
  EXPECT_EQ(ReflectionProduct(cfg), RationalMatrix::Identity(4) * Q(-1));
}

TEST(ConfigurationTest, ConditionTwoOffSpectrum) {
  auto cfg = Load("rank1_6_2");
  EXPECT_TRUE(ConditionII(cfg, Q(1, 3), Side::kPlus));
  EXPECT_FALSE(ConditionII(cfg, Q(1, 2), Side::kPlus));
  EXPECT_THROW(ThetaEigenspace(cfg, Q(1, 2), Side::kPlus), ValidationError);
}

TEST(ConfigurationTest, LambdaSumGramOfTwistedCubicPair) {
  EXPECT_EQ(LambdaSumGram(Load("twisted_cubic_pair"), 0, Side::kPlus),
            (GramMatrix{{4, 5, 16}, {5, 2, -16}, {16, -16, -272}}));
  EXPECT_EQ(LambdaSumGram(Load("rank2_pi_over_4"), Q(1, 2), Side::kPlus),
            (GramMatrix{{2, 4}, {4, 2}}));
}

TEST(ConfigurationTest, ReflectionProductCharacteristicPolynomials) {
  EXPECT_EQ(CharacteristicPolynomial(ReflectionProduct(Load("rank1_6_2"))),
            Polynomial({3, 2, 3}).Monic());
  Polynomial x2p1({1, 0, 1});
  auto r2 = ReflectionProduct(Load("rank2_pi_over_4"));
  EXPECT_EQ(CharacteristicPolynomial(r2), x2p1 * x2p1);
  EXPECT_EQ(r2.Trace(), 0);
  Polynomial xp1 = Polynomial::Linear(-1);
  EXPECT_EQ(CharacteristicPolynomial(ReflectionProduct(Load("twisted_cubic_pair"))),
            (xp1 * xp1 * Polynomial({289, -446, 289})).Monic());
}

TEST(ConfigurationPropertyTest, ReflectionProductIsIsometryOnRandomConfigurations) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> d(-5, 5);
  int checked = 0;
  while (checked < 60) {
    std::size_t a = 1 + checked % 3, b = 1 + (checked / 3) % 3, r = a + b;
    std::vector<std::vector<Integer>> e(r, std::vector<Integer>(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i; j < r; ++j) e[i][j] = e[j][i] = (i == j ? 2 : 1) * d(rng);
    GramMatrix g(e);
    if (Determinant(g.Principal(0, a)) == 0 || Determinant(g.Principal(a, b)) == 0) continue;
    Configuration cfg(g, a, b);
    RationalMatrix rp = ReflectionProduct(cfg);
    RationalMatrix gq = g.ToRational();
    EXPECT_EQ(rp.Transpose() * gq * rp, gq);
    EXPECT_EQ(rp, OracleReflectionProduct(cfg));
    ++checked;
  }
}

TEST(ConfigurationAnglesTest, RankOneHasTrivialNegativePart) {
  AngleSpectrum s = ConfigurationAngles(Load("rank1_6_2"));
  ASSERT_EQ(s.alpha_plus.size(), 3u);
  ASSERT_EQ(s.alpha_minus.size(), 19u);
  EXPECT_EQ(CountZeros(s.alpha_minus), 19);
  ASSERT_TRUE(s.cos2_theta.has_value());
  EXPECT_EQ(*s.cos2_theta, Q(1, 3));
  // alpha_plus = {0, +-2 theta} with 2 cos(2 theta) = 2 (2 c - 1) = -2/3.
  EXPECT_EQ(CountZeros(s.alpha_plus), 1);
  for (const auto& a : s.alpha_plus) {
    if (a.kind == ConfigAngle::Kind::kZero) continue;
    EXPECT_EQ(a.kind, ConfigAngle::Kind::kExact);
    EXPECT_EQ(a.two_cos, Q(-2, 3));
    EXPECT_NEAR(std::abs(a.radians), std::acos(-1.0 / 3.0), 1e-12);
  }
}

TEST(ConfigurationAnglesTest, QuarterTurnHasRightAnglesInNegativePart) {
  AngleSpectrum s = ConfigurationAngles(Load("rank2_pi_over_4"));
  EXPECT_EQ(CountZeros(s.alpha_minus), 17);
  std::vector<double> nonzero;
  for (const auto& a : s.alpha_minus)
    if (a.kind != ConfigAngle::Kind::kZero) nonzero.push_back(a.radians);
  ASSERT_EQ(nonzero.size(), 2u);
  EXPECT_NEAR(nonzero[0] + nonzero[1], 0.0, 1e-12);
  EXPECT_NEAR(std::abs(nonzero[0]), kPi / 2, 1e-12);
  EXPECT_EQ(*s.cos2_theta, Q(1, 2));
}

TEST(ConfigurationAnglesTest, SpectrumInvariantsOnFixtures) {
  for (const char* name : {"rank1_6_2", "rank2_pi_over_4", "twisted_cubic_pair",
                           "perpendicular_2_2"}) {
    auto cfg = Load(name);
    AngleSpectrum s = ConfigurationAngles(cfg);
    SCOPED_TRACE(name);
    ASSERT_EQ(s.alpha_plus.size(), 3u);
    ASSERT_EQ(s.alpha_minus.size(), 19u);
    EXPECT_LE(19 - CountZeros(s.alpha_minus), static_cast<int>(cfg.rank()) - 2);
    ASSERT_TRUE(s.cos2_theta.has_value());
    // The designated eigenvalue is a rational root of the projection spectrum.
    bool found = false;
    for (const auto& root : GluingAngleCos2(cfg).rational) found |= root.value == *s.cos2_theta;
    EXPECT_TRUE(found);
    // {0, +-2 theta} as a multiset.
    double two_theta = 2 * std::acos(std::sqrt(s.cos2_theta_value));
    std::vector<double> mags;
    for (const auto& a : s.alpha_plus) mags.push_back(std::abs(a.radians));
    std::sort(mags.begin(), mags.end());
    EXPECT_NEAR(mags[0], 0.0, 1e-12);
    double expected = std::min(two_theta, 2 * kPi - two_theta);
    EXPECT_NEAR(mags[1], expected, 1e-9);
    EXPECT_NEAR(mags[2], expected, 1e-9);
    double sum = 0;
    for (const auto& a : s.alpha_plus) sum += a.radians;
    if (std::abs(mags[2] - kPi) > 1e-9) EXPECT_NEAR(sum, 0.0, 1e-12);
  }
}

TEST(MRhoTest, KnownValues) {
  AngleSpectrum rank1 = ConfigurationAngles(Load("rank1_6_2"));
  EXPECT_EQ(MRho(rank1, std::acos(1.0 / 3.0)), -1);
  EXPECT_EQ(MRho(rank1, 0.0), 0);
  AngleSpectrum quarter = ConfigurationAngles(Load("rank2_pi_over_4"));
  EXPECT_EQ(MRho(quarter, kPi / 2, Rational(0)), 0);
}

TEST(MRhoTest, AmbiguousFloatComparisonThrows) {
  AngleSpectrum s;
  s.alpha_plus = {ConfigAngle::Zero(), ConfigAngle::Zero(), ConfigAngle::Zero()};
  s.alpha_minus.assign(19, ConfigAngle::Zero());
  s.alpha_minus[0] = ConfigAngle::Float(kPi / 2 + 1e-12);
  EXPECT_THROW(MRho(s, kPi / 2), InconsistencyError);
}

TEST(MRhoPropertyTest, SignAntisymmetryAwayFromBoundary) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> angle(-kPi + 0.01, kPi - 0.01);
  for (int trial = 0; trial < 200; ++trial) {
    AngleSpectrum s;
    s.alpha_plus.assign(3, ConfigAngle::Zero());
    s.alpha_minus.assign(19, ConfigAngle::Zero());
    for (int j = 0; j < 4; ++j) {
      double a = angle(rng);
      s.alpha_minus[2 * j] = ConfigAngle::Float(a);
      s.alpha_minus[2 * j + 1] = ConfigAngle::Float(-a);
    }
    double rho = angle(rng);
    bool near_boundary = false;
    for (const auto& a : s.alpha_minus)
      near_boundary |= std::abs(std::abs(a.radians) - (kPi - std::abs(rho))) < 1e-6;
    if (near_boundary) continue;
    EXPECT_EQ(MRho(s, rho), -MRho(s, -rho));
  }
}

}  // namespace
}  // namespace etcs
