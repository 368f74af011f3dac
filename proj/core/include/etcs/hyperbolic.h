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

// Upper half plane geometry for computing the torus contributions from an
// ideal polygon: cuspid angles, Gauss-Bonnet areas and symmetry geodesics.

#ifndef ETCS_HYPERBOLIC_H_
#define ETCS_HYPERBOLIC_H_

#include <string>
#include <string_view>
#include <vector>

#include "etcs/numeric.h"

namespace etcs {

// A point of Q u {infinity} on the boundary of the upper half plane.
struct BoundaryPoint {
  static BoundaryPoint Infinity();
  static BoundaryPoint Of(const Rational& value);
  // "e/f", "e" or "inf".
  static BoundaryPoint Parse(std::string_view text);

  bool infinite = false;
  Rational value;

  std::string ToString() const;
  bool operator==(const BoundaryPoint&) const = default;
};

// pi_coeff * pi + theta_coeff * theta + radians.
struct AngleExpr {
  Rational pi_coeff;
  Rational theta_coeff;
  double radians = 0.0;

  double Evaluate(double theta) const;
  AngleExpr operator+(const AngleExpr& other) const;
  AngleExpr operator-(const AngleExpr& other) const;
};

// constant + theta_over_pi * (theta / pi) + numeric.
struct ThetaExpr {
  Rational constant;
  Rational theta_over_pi;
  double numeric = 0.0;

  double Evaluate(double theta) const;
  bool IsExactRational() const { return theta_over_pi == 0 && numeric == 0.0; }
  ThetaExpr operator+(const ThetaExpr& other) const;
};

struct Cusp {
  BoundaryPoint base;
  BoundaryPoint x;
  BoundaryPoint y;
};

struct Geodesic {
  BoundaryPoint a;
  BoundaryPoint b;
  // Part of the curves being measured, not a completion edge.
  bool ray = false;
};

struct HyperPolygon {
  std::vector<Cusp> cusps;
  std::vector<Geodesic> edges;
  std::vector<AngleExpr> interior_angles;
  // 0 denotes the empty polygon.
  int n_sides = 0;
};

// (x - y) / ((f x - e)(f y - e)) at the cusp e/f, with the limits at
// infinity. Throws ValidationError if the base is infinite or equals a
// neighbour.
Rational CuspidAngle(const BoundaryPoint& base, const BoundaryPoint& x,
                     const BoundaryPoint& y);

enum class SymmetryClass { kRectangular, kRhombic, kNotSymmetric };

const char* SymmetryClassName(SymmetryClass c);

// Classifies the geodesic joining a/b and c/d by |ad - bc|.
SymmetryClass SymmetryGeodesicCheck(const BoundaryPoint& a,
                                    const BoundaryPoint& b);

// (n_sides - 2) pi minus the interior angles. Throws ValidationError on
// malformed polygons.
AngleExpr PolygonArea(const HyperPolygon& p);

struct PolygonFSum {
  AngleExpr area;
  // Sum of the cuspid angles.
  Rational ell;
  // (72/pi) area - 24 ell.
  ThetaExpr exact;
};

// Throws ValidationError if a completion edge is not a symmetry geodesic.
PolygonFSum FSumViaPolygon(const HyperPolygon& p);

struct PolygonNuBar {
  PolygonFSum f_sum;
  ThetaExpr exact;
  double value = 0.0;
};

// D+ + D- + FSumViaPolygon - 72 rho/pi + 3 m_rho; theta evaluates the
// remaining symbolic terms, if any.
PolygonNuBar NuBarViaPolygon(const HyperPolygon& p, const AngleExpr& rho,
                             int m_rho, const Rational& d_plus,
                             const Rational& d_minus, double theta);

}  // namespace etcs

#endif  // ETCS_HYPERBOLIC_H_
