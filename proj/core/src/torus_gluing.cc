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

#include "etcs/torus_gluing.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

#include "etcs/error.h"

namespace etcs {

bool GluingValidation::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const GluingCheck& c) { return c.passed; });
}

std::string GluingValidation::Failures() const {
  std::string out;
  for (const auto& c : checks) {
    if (c.passed) continue;
    if (!out.empty()) out += ", ";
    out += c.name;
  }
  return out;
}

std::int64_t EpsRepresentative(std::int64_t eps, std::int64_t k) {
  if (k <= 0) throw ValidationError("k", "k must be positive");
  std::int64_t r = FloorMod(eps, k);
  if (2 * r > k) r -= k;
  return r;
}

namespace {

bool IsRepresentative(std::int64_t eps, std::int64_t k) {
  return 2 * eps > -k && 2 * eps <= k;
}

GluingCheck Check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

}  // namespace

GluingValidation Validate(const GluingData& g) {
  GluingValidation v;
  const bool k_ok = g.k_plus > 0 && g.k_minus > 0;
  v.checks.push_back(Check("k_positive", k_ok));
  if (!k_ok) return v;
  v.checks.push_back(Check("eps_plus_unit", std::gcd(g.eps_plus, g.k_plus) == 1,
                           "gcd(eps_plus, k_plus) must be 1"));
  v.checks.push_back(Check("eps_minus_unit", std::gcd(g.eps_minus, g.k_minus) == 1,
                           "gcd(eps_minus, k_minus) must be 1"));
  v.checks.push_back(Check("eps_plus_representative", IsRepresentative(g.eps_plus, g.k_plus),
                           "eps_plus must lie in (-k_plus/2, k_plus/2]"));
  v.checks.push_back(Check("eps_minus_representative", IsRepresentative(g.eps_minus, g.k_minus),
                           "eps_minus must lie in (-k_minus/2, k_minus/2]"));
  const std::int64_t det = g.m * g.q - g.p * g.n;
  v.checks.push_back(Check("determinant", det == -g.k_plus * g.k_minus,
                           "det G = " + std::to_string(det) + ", expected " +
                               std::to_string(-g.k_plus * g.k_minus)));
  const Integer mnpq = Integer(g.m) * g.n * g.p * g.q;
  v.checks.push_back(Check("mnpq_nonpositive", mnpq <= 0));
  v.checks.push_back(Check("plus_congruence",
                           FloorMod(g.eps_plus * g.m - g.n, g.k_plus) == 0 &&
                               FloorMod(g.eps_plus * g.p - g.q, g.k_plus) == 0,
                           "eps_plus m - n and eps_plus p - q must vanish mod k_plus"));
  v.checks.push_back(Check("minus_congruence",
                           FloorMod(g.eps_minus * g.p + g.m, g.k_minus) == 0 &&
                               FloorMod(g.eps_minus * g.q + g.n, g.k_minus) == 0,
                           "eps_minus p + m and eps_minus q + n must vanish mod k_minus"));
  const bool right = g.m == 0 && g.q == 0;
  const bool zero = g.n == 0 && g.p == 0;
  v.checks.push_back(Check("orthogonality", mnpq < 0 || right || zero,
                           "internal circles must be orthogonal to external ones"));
  return v;
}

const char* GluingCaseName(GluingCase c) {
  switch (c) {
    case GluingCase::kThetaZeroExcluded: return "theta_zero_excluded";
    case GluingCase::kRightAngle: return "right_angle";
    case GluingCase::kGeneric: return "generic";
  }
  return "unknown";
}

DerivedGeometry Derive(const GluingData& g) {
  const GluingValidation v = Validate(g);
  if (!v.ok()) throw ValidationError("G", "gluing data fails: " + v.Failures());
  DerivedGeometry out;
  if (g.n == 0 && g.p == 0) {
    out.kind = GluingCase::kThetaZeroExcluded;
    out.cos2_theta = 1;
    out.theta = 0.0;
    out.reason = "theta = 0 forces n = p = 0, giving infinite fundamental group";
    return out;
  }
  if (g.m == 0 && g.q == 0) {
    out.kind = GluingCase::kRightAngle;
    out.cos2_theta = 0;
    out.theta = kPi / 2;
    return out;
  }
  out.kind = GluingCase::kGeneric;
  const Rational s_plus_sq = Rational(-g.n * g.q) / (g.m * g.p);
  const Rational s_minus_sq = Rational(-g.m * g.n) / (g.p * g.q);
  out.s_plus_sq = s_plus_sq;
  out.s_minus_sq = s_minus_sq;
  const Rational m2s = Rational(g.m * g.m) * s_plus_sq;
  out.cos2_theta = m2s / (m2s + g.n * g.n);
  out.theta = std::atan2(static_cast<double>(std::abs(g.n)),
                         static_cast<double>(g.m) * std::sqrt(ToDouble(s_plus_sq)));
  return out;
}

std::vector<GluingData> Orbit(const GluingData& g) {
  GluingData neg = g;
  neg.m = -g.m;
  neg.n = -g.n;
  neg.p = -g.p;
  neg.q = -g.q;
  GluingData flip = g;
  flip.n = -g.n;
  flip.p = -g.p;
  flip.eps_plus = EpsRepresentative(-g.eps_plus, g.k_plus);
  flip.eps_minus = EpsRepresentative(-g.eps_minus, g.k_minus);
  GluingData both = flip;
  both.m = -flip.m;
  both.n = -flip.n;
  both.p = -flip.p;
  both.q = -flip.q;
  return {g, neg, flip, both};
}

GluingData Canonical(const GluingData& g) {
  const std::vector<GluingData> orbit = Orbit(g);
  auto key = [](const GluingData& x) {
    return std::make_tuple(x.n > 0, x.m, x.eps_plus, x.eps_minus, x.p, x.q);
  };
  return *std::max_element(orbit.begin(), orbit.end(),
                           [&](const GluingData& a, const GluingData& b) {
                             return key(a) < key(b);
                           });
}

std::vector<GluingData> Enumerate(std::int64_t k_plus, std::int64_t k_minus,
                                  std::int64_t bound,
                                  const EnumerateOptions& options) {
  if (k_plus <= 0 || k_minus <= 0) throw ValidationError("k", "k must be positive");
  if (bound < k_plus * k_minus) {
    throw ValidationError("bound", "bound must be at least k_plus * k_minus");
  }
  auto units = [](std::int64_t k) {
    std::vector<std::int64_t> out;
    for (std::int64_t e = -(k - 1) / 2; 2 * e <= k; ++e) {
      if (std::gcd(e, k) == 1) out.push_back(e);
    }
    return out;
  };
  const auto eps_p = units(k_plus);
  const auto eps_m = units(k_minus);
  std::set<GluingData> found;
  for (std::int64_t m = -bound; m <= bound; ++m) {
    for (std::int64_t n = -bound; n <= bound; ++n) {
      for (std::int64_t p = -bound; p <= bound; ++p) {
        for (std::int64_t q = -bound; q <= bound; ++q) {
          if (m * q - p * n != -k_plus * k_minus) continue;
          if (n == 0 && p == 0) continue;
          for (std::int64_t ep : eps_p) {
            for (std::int64_t em : eps_m) {
              const GluingData g{k_plus, ep, k_minus, em, m, p, n, q};
              if (!Validate(g).ok()) continue;
              if (options.eps_plus || options.eps_minus) {
                const auto orbit = options.deduplicate ? Orbit(g) : std::vector<GluingData>{g};
                const bool match = std::any_of(orbit.begin(), orbit.end(), [&](const GluingData& x) {
                  return (!options.eps_plus || x.eps_plus == *options.eps_plus) &&
                         (!options.eps_minus || x.eps_minus == *options.eps_minus);
                });
                if (!match) continue;
              }
              found.insert(options.deduplicate ? Canonical(g) : g);
            }
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

struct PlusLattice {
  double s_plus;
  std::int64_t k;
  std::int64_t eps;

  bool Contains(const Vec2& v) const {
    const double a = v.x * static_cast<double>(k) / s_plus;
    const double ar = std::round(a);
    if (std::abs(a - ar) > 1e-9) return false;
    const double b = v.y - ar * static_cast<double>(eps) / static_cast<double>(k);
    return std::abs(b - std::round(b)) <= 1e-9;
  }
};

std::string Fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

}  // namespace

TorusFigure BuildTorusFigure(const GluingData& g, const DerivedGeometry& geom,
                             std::optional<Rational> s_plus_sq) {
  if (geom.kind == GluingCase::kThetaZeroExcluded) {
    throw ValidationError("G", "no figure for the excluded case: " + geom.reason);
  }
  if (geom.kind == GluingCase::kGeneric) s_plus_sq = geom.s_plus_sq;
  if (!s_plus_sq) throw ValidationError("s_plus_sq", "right-angle gluing needs an explicit s_plus_sq");
  if (*s_plus_sq <= 0) throw ValidationError("s_plus_sq", "must be positive");
  const double s = std::sqrt(ToDouble(*s_plus_sq));
  const double kp = static_cast<double>(g.k_plus);

  TorusFigure fig;
  const Vec2 dv_plus{s, 0.0};
  const Vec2 du_plus{0.0, 1.0};
  const Vec2 dv_minus{g.m * s / kp, g.n / kp};
  const Vec2 du_minus{g.p * s / kp, g.q / kp};
  fig.arrows = {{"dv+", dv_plus}, {"du+", du_plus}, {"dv-", dv_minus}, {"du-", du_minus}};

  const PlusLattice lattice{s, g.k_plus, g.eps_plus};
  const double km = static_cast<double>(g.k_minus);
  const Vec2 shifted{(dv_minus.x + g.eps_minus * du_minus.x) / km,
                     (dv_minus.y + g.eps_minus * du_minus.y) / km};
  if (!lattice.Contains(dv_minus) || !lattice.Contains(du_minus) ||
      !lattice.Contains(shifted)) {
    throw InconsistencyError("minus torus generators are not in the plus lattice");
  }
  const double dot = dv_plus.x * dv_minus.x + dv_plus.y * dv_minus.y;
  const double cross = dv_plus.x * dv_minus.y - dv_plus.y * dv_minus.x;
  fig.angle = std::atan2(std::abs(cross), dot);
  if (std::abs(fig.angle - geom.theta) > 1e-9) {
    throw InconsistencyError("figure angle disagrees with the gluing angle");
  }

  double extent = 0.0;
  for (const auto& a : fig.arrows)
    extent = std::max({extent, std::abs(a.direction.x), std::abs(a.direction.y)});
  extent += 0.6;
  const auto a_max = static_cast<std::int64_t>(std::ceil(extent * kp / s));
  for (std::int64_t a = -a_max; a <= a_max; ++a) {
    const double x = a * s / kp;
    const double y0 = a * static_cast<double>(g.eps_plus) / kp;
    const auto b_lo = static_cast<std::int64_t>(std::ceil(-extent - y0));
    const auto b_hi = static_cast<std::int64_t>(std::floor(extent - y0));
    for (std::int64_t b = b_lo; b <= b_hi; ++b) fig.points.push_back({x, y0 + b});
  }
  std::sort(fig.points.begin(), fig.points.end(), [](const Vec2& p, const Vec2& q) {
    return std::tie(p.x, p.y) < std::tie(q.x, q.y);
  });
  return fig;
}

std::string RenderSvg(const TorusFigure& figure) {
  double extent = 1.0;
  for (const auto& p : figure.points)
    extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  const double scale = 80.0;
  const double half = (extent + 0.3) * scale;
  auto sx = [&](double x) { return Fmt(half + x * scale); };
  auto sy = [&](double y) { return Fmt(half - y * scale); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << Fmt(2 * half)
     << "\" height=\"" << Fmt(2 * half) << "\" viewBox=\"0 0 " << Fmt(2 * half)
     << " " << Fmt(2 * half) << "\">\n";
  os << "  <defs><marker id=\"head\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" "
        "refY=\"4\" orient=\"auto\"><path d=\"M0,0 L8,4 L0,8 z\"/></marker></defs>\n";
  for (const auto& p : figure.points) {
    os << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
       << "\" r=\"3\" fill=\"#555\"/>\n";
  }
  for (const auto& a : figure.arrows) {
    const bool plus = a.label.back() == '+';
    os << "  <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\""
       << sx(a.direction.x) << "\" y2=\"" << sy(a.direction.y) << "\" stroke=\""
       << (plus ? "#1f5fbf" : "#bf3f1f") << "\" stroke-width=\"2\" marker-end=\"url(#head)\"/>\n";
    os << "  <text x=\"" << sx(a.direction.x * 1.08) << "\" y=\"" << sy(a.direction.y * 1.08)
       << "\" font-size=\"14\">" << a.label << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace etcs
