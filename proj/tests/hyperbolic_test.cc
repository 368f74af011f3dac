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

#include "etcs/hyperbolic.h"

#include <random>

#include <gtest/gtest.h>

#include "etcs/error.h"
#include "etcs/json_io.h"
#include "test_util.h"

namespace etcs {
namespace {

using testing::DataPath;
using testing::Q;

BoundaryPoint P(const char* text) { return BoundaryPoint::Parse(text); }

// Straight evaluation of (x - y) / ((f x - e)(f y - e)) for finite points.
Rational OracleCuspidAngle(const Rational& base, const Rational& x, const Rational& y) {
  Rational e = Numerator(base), f = Denominator(base);
  return (x - y) / ((f * x - e) * (f * y - e));
}

TEST(BoundaryPointTest, ParseAndPrint) {
  EXPECT_TRUE(P("inf").infinite);
  EXPECT_EQ(P("-2/6").value, Q(-1, 3));
  EXPECT_EQ(P("-2/6").ToString(), "-1/3");
  EXPECT_EQ(P("inf").ToString(), "inf");
  EXPECT_THROW(P("1/0"), ValidationError);
}

TEST(CuspidAngleTest, PolygonFixtureValues) {
  EXPECT_EQ(CuspidAngle(P("0"), P("-1/3"), P("-1/2")), 1);
  EXPECT_EQ(CuspidAngle(P("-1/2"), P("-1"), P("-1/3")), 2);
  EXPECT_EQ(CuspidAngle(P("-1/3"), P("-1/2"), P("inf")), Q(2, 3));
}

TEST(CuspidAngleTest, InvalidArguments) {
  EXPECT_THROW(CuspidAngle(P("inf"), P("0"), P("1")), ValidationError);
  EXPECT_THROW(CuspidAngle(P("0"), P("0"), P("1")), ValidationError);
}

TEST(CuspidAnglePropertyTest, OracleAntisymmetryAndTranslation) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    Rational b(num(rng), den(rng)), x(num(rng), den(rng)), y(num(rng), den(rng));
    if (x == b || y == b) continue;
    auto bp = BoundaryPoint::Of(b), xp = BoundaryPoint::Of(x), yp = BoundaryPoint::Of(y);
    Rational angle = CuspidAngle(bp, xp, yp);
    EXPECT_EQ(angle, OracleCuspidAngle(b, x, y));
    EXPECT_EQ(angle, -CuspidAngle(bp, yp, xp));
    EXPECT_EQ(angle, CuspidAngle(BoundaryPoint::Of(b + 1), BoundaryPoint::Of(x + 1),
                                 BoundaryPoint::Of(y + 1)));
    // The limit y -> infinity of the finite formula.
    Rational big(1000000007);
    EXPECT_NEAR(ToDouble(CuspidAngle(bp, xp, BoundaryPoint::Infinity())),
                ToDouble(OracleCuspidAngle(b, x, big)), 1e-6);
  }
}

TEST(SymmetryGeodesicTest, Classification) {
  EXPECT_EQ(SymmetryGeodesicCheck(P("-1"), P("0")), SymmetryClass::kRectangular);
  EXPECT_EQ(SymmetryGeodesicCheck(P("-1/2"), P("inf")), SymmetryClass::kRhombic);
  EXPECT_EQ(SymmetryGeodesicCheck(P("0"), P("1/3")), SymmetryClass::kRectangular);
  EXPECT_EQ(SymmetryGeodesicCheck(P("-1/3"), P("inf")), SymmetryClass::kNotSymmetric);
  EXPECT_EQ(SymmetryGeodesicCheck(P("1/3"), P("2/5")), SymmetryClass::kRectangular);
  EXPECT_EQ(SymmetryGeodesicCheck(P("1/3"), P("1/5")), SymmetryClass::kRhombic);
}

TEST(PolygonAreaTest, IdealPolygons) {
  HyperPolygon triangle;
  triangle.n_sides = 3;
  AngleExpr a = PolygonArea(triangle);
  EXPECT_EQ(a.pi_coeff, 1);
  EXPECT_EQ(a.theta_coeff, 0);
  HyperPolygon quad;
  quad.n_sides = 4;
  EXPECT_EQ(PolygonArea(quad).pi_coeff, 2);
  HyperPolygon bad;
  bad.n_sides = 3;
  bad.interior_angles = {AngleExpr{0, 0, 4.0}};
  EXPECT_THROW(PolygonArea(bad), ValidationError);
}

TEST(PolygonFSumTest, FixturePolygon) {
  HyperPolygon p = LoadPolygon(DataPath("polygons/example_4_5.json"));
  AngleExpr area = PolygonArea(p);
  EXPECT_EQ(area.pi_coeff, 2);
  EXPECT_EQ(area.theta_coeff, -2);
  PolygonFSum f = FSumViaPolygon(p);
  EXPECT_EQ(f.ell, Q(11, 3));
  EXPECT_EQ(f.exact.constant, 144 - 88);
  EXPECT_EQ(f.exact.theta_over_pi, -144);
  double theta = std::acos(1 / std::sqrt(3.0));
  EXPECT_NEAR(f.exact.Evaluate(theta), 72 / kPi * (2 * kPi - 2 * theta) - 88, 1e-10);
}

TEST(PolygonFSumTest, EmptyPolygonIsZero) {
  PolygonFSum f = FSumViaPolygon(HyperPolygon{});
  EXPECT_TRUE(f.exact.IsExactRational());
  EXPECT_EQ(f.exact.constant, 0);
}

TEST(PolygonFSumTest, NonSymmetricCompletionRejected) {
  HyperPolygon p = LoadPolygon(DataPath("polygons/example_4_5.json"));
  p.edges.push_back({P("-1/3"), P("inf"), false});
  EXPECT_THROW(FSumViaPolygon(p), ValidationError);
}

TEST(PolygonNuBarTest, ExactCancellationOfTheta) {
  HyperPolygon p = LoadPolygon(DataPath("polygons/example_4_5.json"));
  AngleExpr rho{1, -2, 0.0};
  for (double theta : {0.3, std::acos(1 / std::sqrt(3.0)), 1.2}) {
    PolygonNuBar nb = NuBarViaPolygon(p, rho, -1, 0, 0, theta);
    ASSERT_TRUE(nb.exact.IsExactRational());
    EXPECT_EQ(nb.exact.constant, -19);
    EXPECT_DOUBLE_EQ(nb.value, -19.0);
  }
  EXPECT_EQ(NuBarViaPolygon(p, rho, 0, 0, 0, 0.5).exact.constant, -16);
  EXPECT_EQ(NuBarViaPolygon(p, rho, -1, 3, Q(1, 2), 0.5).exact.constant, Q(-31, 2));
}

TEST(PolygonNuBarTest, EmptyPolygon) {
  PolygonNuBar nb = NuBarViaPolygon(HyperPolygon{}, AngleExpr{}, 0, 0, 0, 0.0);
  EXPECT_EQ(nb.exact.constant, 0);
  EXPECT_EQ(nb.value, 0.0);
}

}  // namespace
}  // namespace etcs
