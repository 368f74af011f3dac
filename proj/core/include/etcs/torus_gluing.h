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

// Torus matching data for extra-twisted connected sums: the integer gluing
// matrix, its admissibility constraints, the derived circle ratios and angle,
// enumeration up to symmetry, and SVG figures.

#ifndef ETCS_TORUS_GLUING_H_
#define ETCS_TORUS_GLUING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etcs/numeric.h"

namespace etcs {

// G = (m p; n q).
struct GluingData {
  std::int64_t k_plus = 1;
  std::int64_t eps_plus = 0;
  std::int64_t k_minus = 1;
  std::int64_t eps_minus = 0;
  std::int64_t m = 0;
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::int64_t q = 0;

  bool operator==(const GluingData&) const = default;
  auto operator<=>(const GluingData&) const = default;
};

struct GluingCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct GluingValidation {
  std::vector<GluingCheck> checks;
  bool ok() const;
  // Names of failed checks, comma separated.
  std::string Failures() const;
};

// Checks: unit conditions and representatives for both epsilons, the
// determinant condition det G = -k+ k-, mnpq <= 0, the two congruence
// conditions, and orthogonality of the two internal circles (mnpq < 0 unless
// m = q = 0 or n = p = 0).
GluingValidation Validate(const GluingData& g);

enum class GluingCase { kThetaZeroExcluded, kRightAngle, kGeneric };

const char* GluingCaseName(GluingCase c);

struct DerivedGeometry {
  GluingCase kind = GluingCase::kGeneric;
  // Unset in the right-angle case, where both ratios are free.
  std::optional<Rational> s_plus_sq;
  std::optional<Rational> s_minus_sq;
  Rational cos2_theta;
  // Gluing angle in (0, pi).
  double theta = 0.0;
  // Explanation for the excluded case.
  std::string reason;
};

// Throws ValidationError when Validate fails. The excluded case n = p = 0 is
// returned, not thrown.
DerivedGeometry Derive(const GluingData& g);

// Smallest-orbit representative under G -> -G and the simultaneous flip
// (m, n, p, q, eps) -> (m, -n, -p, q, -eps).
GluingData Canonical(const GluingData& g);

// The (up to) four members of the symmetry orbit of g.
std::vector<GluingData> Orbit(const GluingData& g);

// Stores eps as the representative of its class modulo k in (-k/2, k/2].
std::int64_t EpsRepresentative(std::int64_t eps, std::int64_t k);

struct EnumerateOptions {
  std::optional<std::int64_t> eps_plus;
  std::optional<std::int64_t> eps_minus;
  bool deduplicate = true;
};

// All admissible tuples with entries bounded by `bound` in absolute value,
// excluding the theta = 0 case, sorted deterministically. With
// deduplication, one canonical member per orbit; an eps filter keeps the
// orbits that contain a member with those epsilons.
std::vector<GluingData> Enumerate(std::int64_t k_plus, std::int64_t k_minus,
                                  std::int64_t bound,
                                  const EnumerateOptions& options = {});

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct FigureArrow {
  std::string label;
  Vec2 direction;
};

struct TorusFigure {
  std::vector<Vec2> points;
  std::vector<FigureArrow> arrows;
  // Angle between the two external directions.
  double angle = 0.0;
};

// Builds the common lattice of the two identified tori in coordinates where
// the plus external direction is horizontal. Right-angle data needs
// s_plus_sq; it is ignored otherwise. Throws ValidationError when data is
// missing and InconsistencyError when the figure fails its own checks.
TorusFigure BuildTorusFigure(const GluingData& g, const DerivedGeometry& geom,
                             std::optional<Rational> s_plus_sq = std::nullopt);

std::string RenderSvg(const TorusFigure& figure);

}  // namespace etcs

#endif  // ETCS_TORUS_GLUING_H_
