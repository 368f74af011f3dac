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

#include <string>

#include "etcs/error.h"

namespace etcs {

BoundaryPoint BoundaryPoint::Infinity() {
  BoundaryPoint p;
  p.infinite = true;
  return p;
}

BoundaryPoint BoundaryPoint::Of(const Rational& value) {
  BoundaryPoint p;
  p.value = value;
  return p;
}

BoundaryPoint BoundaryPoint::Parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return Infinity();
  return Of(ParseRational(text));
}

std::string BoundaryPoint::ToString() const {
  return infinite ? "inf" : etcs::ToString(value);
}

double AngleExpr::Evaluate(double theta) const {
  return ToDouble(pi_coeff) * kPi + ToDouble(theta_coeff) * theta + radians;
}

AngleExpr AngleExpr::operator+(const AngleExpr& other) const {
  return {pi_coeff + other.pi_coeff, theta_coeff + other.theta_coeff,
          radians + other.radians};
}

AngleExpr AngleExpr::operator-(const AngleExpr& other) const {
  return {pi_coeff - other.pi_coeff, theta_coeff - other.theta_coeff,
          radians - other.radians};
}

double ThetaExpr::Evaluate(double theta) const {
  return ToDouble(constant) + ToDouble(theta_over_pi) * theta / kPi + numeric;
}

ThetaExpr ThetaExpr::operator+(const ThetaExpr& other) const {
  return {constant + other.constant, theta_over_pi + other.theta_over_pi,
          numeric + other.numeric};
}

Rational CuspidAngle(const BoundaryPoint& base, const BoundaryPoint& x,
                     const BoundaryPoint& y) {
  if (base.infinite) throw ValidationError("base", "cusp base must be rational");
  if (x == base) throw ValidationError("x", "neighbour coincides with the cusp");
  if (y == base) throw ValidationError("y", "neighbour coincides with the cusp");
  const Rational e(Numerator(base.value));
  const Rational f(Denominator(base.value));
  if (x.infinite && y.infinite) throw ValidationError("y", "both neighbours at infinity");
  if (y.infinite) return -1 / (f * (f * x.value - e));
  if (x.infinite) return 1 / (f * (f * y.value - e));
  return (x.value - y.value) / ((f * x.value - e) * (f * y.value - e));
}

const char* SymmetryClassName(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::kRectangular: return "rectangular";
    case SymmetryClass::kRhombic: return "rhombic";
    case SymmetryClass::kNotSymmetric: return "not_symmetric";
  }
  return "unknown";
}

SymmetryClass SymmetryGeodesicCheck(const BoundaryPoint& a,
                                    const BoundaryPoint& b) {
  // infinity is 1/0.
  const Integer an = a.infinite ? Integer(1) : Numerator(a.value);
  const Integer ad = a.infinite ? Integer(0) : Denominator(a.value);
  const Integer bn = b.infinite ? Integer(1) : Numerator(b.value);
  const Integer bd = b.infinite ? Integer(0) : Denominator(b.value);
  const Integer k = abs(an * bd - ad * bn);
  if (k == 1) return SymmetryClass::kRectangular;
  if (k == 2) return SymmetryClass::kRhombic;
  return SymmetryClass::kNotSymmetric;
}

AngleExpr PolygonArea(const HyperPolygon& p) {
  if (p.n_sides == 0) {
    if (!p.cusps.empty() || !p.interior_angles.empty()) {
      throw ValidationError("n_sides", "empty polygon cannot have vertices");
    }
    return {};
  }
  if (p.n_sides < 3) throw ValidationError("n_sides", "a polygon needs at least 3 sides");
  if (p.cusps.size() + p.interior_angles.size() > static_cast<std::size_t>(p.n_sides)) {
    throw ValidationError("interior_angles", "more vertices than sides");
  }
  for (std::size_t i = 0; i < p.interior_angles.size(); ++i) {
    const AngleExpr& a = p.interior_angles[i];
    if (a.theta_coeff != 0) continue;  // symbolic in theta, checked when evaluated
    const double value = a.Evaluate(0.0);
    if (!(value > 0.0 && value < kPi)) {
      throw ValidationError("interior_angles[" + std::to_string(i) + "]",
                            "interior angle must lie in (0, pi)");
    }
  }
  AngleExpr area{Rational(p.n_sides - 2), Rational(0), 0.0};
  for (const AngleExpr& a : p.interior_angles) area = area - a;
  return area;
}

PolygonFSum FSumViaPolygon(const HyperPolygon& p) {
  PolygonFSum out;
  out.area = PolygonArea(p);
  auto require_symmetric = [](const BoundaryPoint& a, const BoundaryPoint& b,
                              const std::string& path) {
    if (SymmetryGeodesicCheck(a, b) == SymmetryClass::kNotSymmetric) {
      throw ValidationError(path, "geodesic " + a.ToString() + " -- " + b.ToString() +
                                      " is not a symmetry geodesic");
    }
  };
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (p.edges[i].ray) continue;
    require_symmetric(p.edges[i].a, p.edges[i].b, "edges[" + std::to_string(i) + "]");
  }
  for (const Cusp& c : p.cusps) {
    out.ell += CuspidAngle(c.base, c.x, c.y);
  }
  out.exact.constant = 72 * out.area.pi_coeff - 24 * out.ell;
  out.exact.theta_over_pi = 72 * out.area.theta_coeff;
  out.exact.numeric = 72 / kPi * out.area.radians;
  return out;
}

PolygonNuBar NuBarViaPolygon(const HyperPolygon& p, const AngleExpr& rho,
                             int m_rho, const Rational& d_plus,
                             const Rational& d_minus, double theta) {
  PolygonNuBar out;
  out.f_sum = FSumViaPolygon(p);
  const ThetaExpr rho_term{-72 * rho.pi_coeff, -72 * rho.theta_coeff, -72 / kPi * rho.radians};
  const ThetaExpr rest{d_plus + d_minus + 3 * m_rho, Rational(0), 0.0};
  out.exact = out.f_sum.exact + rho_term + rest;
  out.value = out.exact.Evaluate(theta);
  return out;
}

}  // namespace etcs
