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

// Configurations of two polarising lattices inside a common span W, and the
// spectral data of the two orthogonal projections and reflections they define.

#ifndef ETCS_CONFIGURATION_H_
#define ETCS_CONFIGURATION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "etcs/lattice.h"
#include "etcs/numeric.h"
#include "etcs/rational_matrix.h"

namespace etcs {

enum class Side { kPlus, kMinus };

// Gram matrix of W = N+ + N- in a basis whose first r_plus vectors span N+
// and whose last r_minus vectors span N-.
class Configuration {
 public:
  // Throws ValidationError unless r_plus + r_minus equals the rank and both
  // diagonal blocks are non-degenerate.
  Configuration(GramMatrix gram, std::size_t r_plus, std::size_t r_minus);

  const GramMatrix& gram() const { return gram_; }
  std::size_t r_plus() const { return r_plus_; }
  std::size_t r_minus() const { return r_minus_; }
  std::size_t rank() const { return r_plus_ + r_minus_; }

  GramMatrix Block(Side side) const;
  // Rows indexed by N+, columns by N-.
  RationalMatrix Cross() const;

 private:
  GramMatrix gram_;
  std::size_t r_plus_;
  std::size_t r_minus_;
};

// True iff W is non-degenerate of signature (2, r - 2).
bool ConditionI(const Configuration& cfg);

// Matrix of the composition of the two orthogonal projections restricted to
// N_side: N^-1 B N'^-1 B^T for the plus side.
RationalMatrix ProjComposition(const Configuration& cfg, Side side);

struct Cos2Spectrum {
  std::vector<RationalRoot> rational;
  // Monic factor carrying the eigenvalues that are not rational.
  Polynomial irrational;
};

// Eigenvalues of ProjComposition on N+, as candidates for cos^2 of the
// gluing angle.
Cos2Spectrum GluingAngleCos2(const Configuration& cfg);

// Basis of the c-eigenspace of ProjComposition(cfg, side) in N_side
// coordinates. Throws ValidationError when c is not an eigenvalue.
std::vector<RationalVector> ThetaEigenspace(const Configuration& cfg,
                                            const Rational& c, Side side);

// False when c is not an eigenvalue on that side.
bool ConditionII(const Configuration& cfg, const Rational& c, Side side);

// Gram matrix, inside W, of N_side together with primitive integral
// generators of the orthogonal complement of the c-eigenspace in the other
// N. No saturation in the ambient lattice is performed.
GramMatrix LambdaSumGram(const Configuration& cfg, const Rational& c,
                         Side side);

// (2 pi+ - I)(2 pi- - I) acting on W (x) Q. Throws InconsistencyError if the
// result fails to preserve the Gram matrix.
RationalMatrix ReflectionProduct(const Configuration& cfg);

// One eigen-argument of the reflection product.
struct ConfigAngle {
  enum class Kind { kZero, kPi, kExact, kFloat };

  static ConfigAngle Zero();
  static ConfigAngle Pi();
  // Argument with 2 cos(alpha) = two_cos and the given sign.
  static ConfigAngle Exact(const Rational& two_cos, int sign);
  static ConfigAngle Float(double radians);

  Kind kind = Kind::kZero;
  Rational two_cos;
  int sign = 0;
  // Principal value in (-pi, pi].
  double radians = 0.0;

  bool operator==(const ConfigAngle& other) const;
};

struct AngleSpectrum {
  // Three entries (positive part) and nineteen entries (negative part).
  std::vector<ConfigAngle> alpha_plus;
  std::vector<ConfigAngle> alpha_minus;
  // The eigenvalue of ProjComposition matched by the positive part.
  std::optional<Rational> cos2_theta;
  double cos2_theta_value = 0.0;
};

// Splits the eigen-arguments of the reflection product by the sign of the
// Gram matrix on each invariant subspace and pads with zeros for the
// complement of W in the K3 lattice. Throws ValidationError if condition (i)
// fails and InconsistencyError on spectral data incompatible with an
// isometry of a form of signature (2, r - 2).
AngleSpectrum ConfigurationAngles(const Configuration& cfg);

// Tolerance for numeric angle comparisons, in radians.
inline constexpr double kAngleTolerance = 1e-9;

// The signed count of negative-part arguments near pi. Only arguments in
// (0, pi] are counted; beta = pi - |rho| bounds the counted interval.
// rho_cos_exact, when given, is cos(beta) and makes exact entries compare
// exactly. Throws InconsistencyError on a numerically ambiguous comparison.
int MRho(const AngleSpectrum& spectrum, double rho,
         const std::optional<Rational>& rho_cos_exact = std::nullopt);

}  // namespace etcs

#endif  // ETCS_CONFIGURATION_H_
